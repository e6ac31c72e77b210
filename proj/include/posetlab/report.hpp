#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace posetlab {

enum class PropState { kTrue, kFalse, kNotApplicable, kAuditedTrue, kAuditedFalse, kNotEvaluated };

struct PropertyEntry {
  std::string name;
  PropState state = PropState::kNotEvaluated;
  std::optional<nlohmann::ordered_json> witness;
};

// Fixed-order property vector; see kPropertyNames.
struct PropertyReport {
  std::string poset;
  std::vector<PropertyEntry> entries;
  std::vector<std::string> anomalies;

  static PropertyReport blank(std::string poset);
  PropertyEntry* find(std::string_view name);
  const PropertyEntry* find(std::string_view name) const;
  void set(std::string_view name, bool value, std::optional<nlohmann::ordered_json> witness = std::nullopt);
  void set_state(std::string_view name, PropState s, std::optional<nlohmann::ordered_json> witness = std::nullopt);
  // True/False for decided or audited entries, nullopt otherwise.
  std::optional<bool> value(std::string_view name) const;
  bool is(std::string_view name) const { return value(name).value_or(false); }
  // Keeps only the named entries (in canonical order).
  PropertyReport select(const std::vector<std::string>& names) const;
};

extern const std::vector<std::string> kPropertyNames;

// Accepts hyphenated spellings (weakly-increasing).
std::string canonical_property_name(std::string_view name);

std::string report_json(const PropertyReport& r);
nlohmann::ordered_json report_to_json(const PropertyReport& r);
std::string report_text(const PropertyReport& r);

}  // namespace posetlab
