#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "posetlab/ladder.hpp"
#include "posetlab/report.hpp"

namespace posetlab {

struct GenConfig {
  std::uint64_t seed = 42;
  int max_base = 4;
  int max_ladders = 2;
  double density = 0.3;
  Index max_constant = 3;
  void validate() const;  // throws PreconditionFailed
};

RawPresentation random_raw(const GenConfig& cfg, std::uint64_t index);
// Absent when validation rejects the generated rules.
std::optional<LadderPresentation> random_presentation(const GenConfig& cfg, std::uint64_t index);

// name | "!" q | q "&" q | q "|" q | "(" q ")", with & binding tighter than |.
class PropertyQuery {
 public:
  static PropertyQuery parse(std::string_view text);  // throws QueryParse
  bool eval(const PropertyReport& r) const;
  const std::string& text() const { return text_; }

  struct Node;

 private:
  std::string text_;
  std::shared_ptr<const Node> root_;
};

struct ScanMatch {
  std::uint64_t index = 0;
  RawPresentation raw;
  PropertyReport report;
};

struct ScanSummary {
  std::uint64_t count = 0;
  std::uint64_t generated = 0;
  std::uint64_t rejected = 0;
  std::uint64_t dcpos = 0;
  std::vector<ScanMatch> matches;  // ascending index
  double rejection_rate() const { return count ? static_cast<double>(rejected) / static_cast<double>(count) : 0.0; }
};

// Evaluates indices 0..count-1 and keeps matches; theorem_suite runs on each
// presentation and its ImplicationViolation propagates.  jobs <= 0 uses the
// OpenMP default.
ScanSummary scan(const GenConfig& cfg, std::uint64_t count, const PropertyQuery& q, int jobs = 0);
ScanSummary scan_serial(const GenConfig& cfg, std::uint64_t count, const PropertyQuery& q);

nlohmann::ordered_json scan_summary_json(const ScanSummary& s, const GenConfig& cfg, const PropertyQuery& q);
// g<index>.pos per match plus summary.json.
void write_scan(const ScanSummary& s, const GenConfig& cfg, const PropertyQuery& q, const std::string& dir);

}  // namespace posetlab
