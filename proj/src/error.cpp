#include "posetlab/error.hpp"

namespace posetlab {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kCycle: return "CycleError";
    case ErrorKind::kUnknownElement: return "UnknownElement";
    case ErrorKind::kUnknownId: return "UnknownId";
    case ErrorKind::kDuplicateId: return "DuplicateId";
    case ErrorKind::kEmptySet: return "EmptySet";
    case ErrorKind::kNotDirectedFamily: return "NotDirectedFamily";
    case ErrorKind::kInexpressibleClosure: return "InexpressibleClosure";
    case ErrorKind::kInvalidRule: return "InvalidRule";
    case ErrorKind::kMalformedShape: return "MalformedShape";
    case ErrorKind::kDepthTooSmall: return "DepthTooSmall";
    case ErrorKind::kNotADcpo: return "NotADcpo";
    case ErrorKind::kWfTopologyUndefined: return "WfTopologyUndefined";
    case ErrorKind::kWwbTopologyUndefined: return "WwbTopologyUndefined";
    case ErrorKind::kPreconditionFailed: return "PreconditionFailed";
    case ErrorKind::kImplicationViolation: return "ImplicationViolation";
    case ErrorKind::kMissingBottom: return "MissingBottom";
    case ErrorKind::kCertificateRejected: return "CertificateRejected";
    case ErrorKind::kBoundsTooSmall: return "BoundsTooSmall";
    case ErrorKind::kParse: return "ParseError";
    case ErrorKind::kQueryParse: return "QueryParseError";
    case ErrorKind::kSuiteFailure: return "SuiteFailure";
  }
  return "Error";
}

}  // namespace posetlab
