#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace posetlab {

enum class ErrorKind {
  kCycle,
  kUnknownElement,
  kUnknownId,
  kDuplicateId,
  kEmptySet,
  kNotDirectedFamily,
  kInexpressibleClosure,
  kInvalidRule,
  kMalformedShape,
  kDepthTooSmall,
  kNotADcpo,
  kWfTopologyUndefined,
  kWwbTopologyUndefined,
  kPreconditionFailed,
  kImplicationViolation,
  kMissingBottom,
  kCertificateRejected,
  kBoundsTooSmall,
  kParse,
  kQueryParse,
  kSuiteFailure,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Parse errors carry a 1-based source location.
class ParseError : public Error {
 public:
  ParseError(int line, int column, const std::string& what)
      : Error(ErrorKind::kParse,
              std::to_string(line) + ":" + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace posetlab
