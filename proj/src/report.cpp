#include "posetlab/report.hpp"

#include <algorithm>
#include <sstream>

#include "posetlab/error.hpp"

namespace posetlab {

const std::vector<std::string> kPropertyNames = {
    "dcpo",
    "exact",
    "quasiexact",
    "quasicontinuous",
    "continuous",
    "meet_continuous",
    "moderately_meet_continuous",
    "weakly_increasing",
    "wwb_topology_exists",
};

std::string canonical_property_name(std::string_view name) {
  std::string s(name);
  std::replace(s.begin(), s.end(), '-', '_');
  if (s == "mc") return "meet_continuous";
  if (s == "mmc") return "moderately_meet_continuous";
  if (std::find(kPropertyNames.begin(), kPropertyNames.end(), s) == kPropertyNames.end())
    throw Error(ErrorKind::kQueryParse, "unknown property '" + std::string(name) + "'");
  return s;
}

PropertyReport PropertyReport::blank(std::string poset) {
  PropertyReport r;
  r.poset = std::move(poset);
  for (const auto& n : kPropertyNames) r.entries.push_back({n, PropState::kNotEvaluated, std::nullopt});
  return r;
}

PropertyEntry* PropertyReport::find(std::string_view name) {
  for (auto& e : entries)
    if (e.name == name) return &e;
  return nullptr;
}

const PropertyEntry* PropertyReport::find(std::string_view name) const {
  for (const auto& e : entries)
    if (e.name == name) return &e;
  return nullptr;
}

void PropertyReport::set_state(std::string_view name, PropState s, std::optional<nlohmann::ordered_json> witness) {
  PropertyEntry* e = find(name);
  if (!e) throw Error(ErrorKind::kQueryParse, "unknown property '" + std::string(name) + "'");
  e->state = s;
  e->witness = std::move(witness);
}

void PropertyReport::set(std::string_view name, bool value, std::optional<nlohmann::ordered_json> witness) {
  set_state(name, value ? PropState::kTrue : PropState::kFalse, value ? std::nullopt : std::move(witness));
}

std::optional<bool> PropertyReport::value(std::string_view name) const {
  const PropertyEntry* e = find(name);
  if (!e) return std::nullopt;
  switch (e->state) {
    case PropState::kTrue:
    case PropState::kAuditedTrue: return true;
    case PropState::kFalse:
    case PropState::kAuditedFalse: return false;
    default: return std::nullopt;
  }
}

PropertyReport PropertyReport::select(const std::vector<std::string>& names) const {
  PropertyReport r;
  r.poset = poset;
  r.anomalies = anomalies;
  for (const auto& e : entries)
    if (std::find(names.begin(), names.end(), e.name) != names.end()) r.entries.push_back(e);
  return r;
}

namespace {

nlohmann::ordered_json state_json(PropState s) {
  switch (s) {
    case PropState::kTrue: return true;
    case PropState::kFalse: return false;
    case PropState::kNotApplicable: return "n/a";
    case PropState::kAuditedTrue: return {{"audited", true}};
    case PropState::kAuditedFalse: return {{"audited", false}};
    case PropState::kNotEvaluated: return nullptr;
  }
  return nullptr;
}

}  // namespace

nlohmann::ordered_json report_to_json(const PropertyReport& r) {
  nlohmann::ordered_json j;
  j["schema"] = 1;
  j["poset"] = r.poset;
  nlohmann::ordered_json props = nlohmann::ordered_json::object();
  nlohmann::ordered_json wit = nlohmann::ordered_json::object();
  for (const auto& e : r.entries) {
    props[e.name] = state_json(e.state);
    if (e.witness) wit[e.name] = *e.witness;
  }
  j["properties"] = std::move(props);
  j["witnesses"] = std::move(wit);
  j["anomalies"] = r.anomalies;
  return j;
}

std::string report_json(const PropertyReport& r) { return report_to_json(r).dump(2) + "\n"; }

std::string report_text(const PropertyReport& r) {
  std::ostringstream os;
  os << "poset " << r.poset << "\n";
  for (const auto& e : r.entries) {
    auto v = state_json(e.state);
    os << "  " << e.name << "=" << (v.is_string() ? v.get<std::string>() : v.dump());
    if (e.witness) os << "  witness " << (e.witness->is_string() ? e.witness->get<std::string>() : e.witness->dump());
    os << "\n";
  }
  for (const auto& a : r.anomalies) os << "  anomaly: " << a << "\n";
  return os.str();
}

}  // namespace posetlab
