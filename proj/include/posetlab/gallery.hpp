#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <json.hpp>

#include "posetlab/models.hpp"
#include "posetlab/report.hpp"

namespace posetlab {

using GalleryPoset = std::variant<LadderPresentation, JohnstoneModel, ProductPoset>;

// P1, P2, P3, ONE (ladder presentations) and J (oracle model).
const std::vector<std::string>& fixture_names();
std::string fixture_source(std::string_view name);  // DSL text; throws UnknownId for J
LadderPresentation ladder_fixture(std::string_view name);
// Also accepts binary products written "AxB", e.g. "P1xP3".
GalleryPoset fixture(std::string_view name);
std::string poset_label(const GalleryPoset& g);

// Pairwise product.  A product with a finite factor is flattened back into a
// ladder presentation; otherwise the pair model is returned.  Both factors
// need a bottom unless waived.
GalleryPoset product(const LadderPresentation& p, const LadderPresentation& q, bool waive_bottom = false);
LadderPresentation flat_product(const LadderPresentation& finite, const LadderPresentation& q);

// wwb_down in J, as a region of one column: levels 0..upto, or all finite
// levels when upto is empty.
struct JRegion {
  Index col = 0;
  std::optional<Index> upto;
  bool contains(JElem e) const { return !e.is_omega() && e.col == col && (!upto || e.level <= *upto); }
  std::string describe() const;
  friend bool operator==(const JRegion&, const JRegion&) = default;
};
JRegion johnstone_wwb_down(JElem x);

struct Bounds {
  Index grid = 12;  // B
  Index m = 8;      // coordinates of F
  Index s = 3;      // size of F
};

// Exhaustive checks on the B-grid; each returns a description of the first
// failure.
Verdict<std::string> johnstone_order_audit(Index b);
Verdict<std::string> johnstone_basis_audit(Index b);
Verdict<std::string> johnstone_wwb_down_audit(Index b);
// Every F over the M-grid with |F| <= s misses up(F) along column c(F) while
// that column's sup lies above p.  Throws BoundsTooSmall.
Verdict<std::string> column_escape_audit(JElem p, const Bounds& bounds);
PropertyReport johnstone_report(const Bounds& bounds = {});
PropertyReport product_report(const ProductPoset& p);
PropertyReport gallery_report(const GalleryPoset& g, const Bounds& bounds = {});

struct Fact {
  std::string poset;
  std::string property;
  bool expected = true;
  std::string statement;
  std::optional<nlohmann::json> witness;
  std::optional<nlohmann::json> certificate;
};

std::vector<Fact> parse_facts(const nlohmann::json& j);
std::vector<Fact> load_facts(const std::string& path);
std::string default_facts_path();

struct FactResult {
  Fact fact;
  bool passed = false;
  std::string detail;
};

FactResult audit_fact(const GalleryPoset& g, const Fact& fact, const Bounds& bounds = {});

struct SuiteResult {
  std::vector<FactResult> results;
  std::size_t failures() const;
  // Throws SuiteFailure naming every mismatch.
  void require_pass() const;
};

// Runs every fact (or those on one poset).  Unknown poset names throw UnknownId.
SuiteResult run_paper_suite(const std::vector<Fact>& facts, std::optional<std::string> only = std::nullopt,
                            const Bounds& bounds = {});
SuiteResult run_paper_suite(std::optional<std::string> only = std::nullopt, const Bounds& bounds = {});

}  // namespace posetlab
