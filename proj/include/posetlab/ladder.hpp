#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "posetlab/finite_poset.hpp"
#include "posetlab/staircase.hpp"
#include "posetlab/symset.hpp"
#include "posetlab/verdict.hpp"

namespace posetlab {

struct RelStmt {
  enum class Kind { kFrom, kUpto, kAlways, kShift, kTail };
  std::string lhs;
  std::string rhs;
  Kind kind = Kind::kAlways;
  Index value = 0;

  friend bool operator==(const RelStmt&, const RelStmt&) = default;
};

// A presentation as written: declaration order is kept for printing.
struct RawPresentation {
  std::string name;
  std::vector<std::string> base_ids;
  std::vector<std::string> ladder_ids;
  std::vector<std::pair<std::string, std::string>> order;
  std::vector<RelStmt> rels;

  friend bool operator==(const RawPresentation&, const RawPresentation&) = default;
};

struct DirectedShape {
  enum class Kind { kMax, kTails };
  Kind kind = Kind::kMax;
  Elem max;
  std::vector<int> ladders;   // sorted, for kTails
  std::vector<Index> starts;  // parallel to ladders

  static DirectedShape max_of(Elem e) { return {Kind::kMax, e, {}, {}}; }
  static DirectedShape tails(std::vector<int> ladders, std::vector<Index> starts = {});
  bool is_max() const { return kind == Kind::kMax; }
  friend bool operator==(const DirectedShape&, const DirectedShape&) = default;
};

class LadderPresentation {
 public:
  static LadderPresentation validate(const RawPresentation& raw);

  const std::string& name() const { return raw_.name; }
  const RawPresentation& raw() const { return raw_; }
  int num_base() const { return static_cast<int>(base_names_.size()); }
  int num_ladders() const { return static_cast<int>(ladder_names_.size()); }
  const std::string& base_name(int b) const { return base_names_.at(static_cast<std::size_t>(b)); }
  const std::string& ladder_name(int i) const { return ladder_names_.at(static_cast<std::size_t>(i)); }
  std::optional<int> find_base(std::string_view name) const;
  std::optional<int> find_ladder(std::string_view name) const;

  // IDENT or IDENT(NAT); throws UnknownElement.
  Elem parse_elem(std::string_view text) const;
  std::string format(Elem e) const;
  std::string format(const SymSet& s) const;
  std::string format(const DirectedShape& s) const;
  // Inverse of format(SymSet): "{a, X(3), X(0..2), X(4..)}".
  SymSet parse_set(std::string_view text) const;

  void check(Elem e) const;  // throws UnknownElement
  bool leq(Elem x, Elem y) const;
  bool less(Elem x, Elem y) const { return x != y && leq(x, y); }

  // Closed relation between nodes; bases are nodes [0, nb), ladder i is nb + i.
  const Staircase& rel(int from, int to) const;
  int node(Elem e) const { return e.is_base() ? e.id : num_base() + e.id; }

  SymSet empty_set() const { return SymSet(num_base(), num_ladders()); }
  SymSet universe() const { return SymSet::universe(num_base(), num_ladders()); }
  SymSet singleton(Elem e) const;
  SymSet set_of(const std::vector<Elem>& es) const;
  SymSet ladder_set(int i, Index start = 0) const;

  SymSet up_set(const SymSet& a) const;
  SymSet down_set(const SymSet& a) const;
  SymSet up(Elem e) const { return up_set(singleton(e)); }
  SymSet down(Elem e) const { return down_set(singleton(e)); }
  bool is_upper(const SymSet& a) const { return up_set(a) == a; }
  bool is_lower(const SymSet& a) const { return down_set(a) == a; }
  SymSet upper_bounds(const SymSet& a) const;
  // Upper bounds of the whole ladder i (equivalently of any of its tails).
  SymSet ladder_upper_bounds(int i) const;
  // Greatest element of a, if any.
  std::optional<Elem> greatest(const SymSet& a) const;
  std::optional<Elem> least(const SymSet& a) const;
  bool is_directed(const SymSet& a) const;
  std::optional<Elem> sup(const SymSet& a) const;

  // Supremum of ladder i (every tail of it has the same upper bounds).
  const std::optional<Elem>& ladder_sup(int i) const { return sups_.at(static_cast<std::size_t>(i)); }
  // down(ladder i): the elements below some member of the ladder.
  const SymSet& approach(int i) const { return approach_.at(static_cast<std::size_t>(i)); }
  bool is_limit(Elem e) const;
  std::vector<Elem> limit_points() const;  // distinct, ascending
  std::vector<int> ladders_with_sup(Elem e) const;

  Index uniformity_threshold() const { return n_star_; }
  std::optional<Elem> bottom() const;

  // Ascending scan order up to the given ladder depth.
  std::vector<Elem> scan_points(Index depth) const;
  // Downward scan: ladders in reverse order (indices ascending), then bases in reverse.
  std::vector<Elem> downward_points(Index depth) const;

 private:
  RawPresentation raw_;
  std::vector<std::string> base_names_;
  std::vector<std::string> ladder_names_;
  std::vector<Staircase> rel_;  // (nb+nl)^2
  std::vector<std::optional<Elem>> sups_;
  std::vector<SymSet> approach_;
  Index n_star_ = 0;
};

// N* computed from the rules as written.
Index uniformity_threshold_raw(const RawPresentation& raw);

// Ladder of S that every other member of S maps into totally, if any.
std::optional<int> cofinal_ladder(const LadderPresentation& p, const std::vector<int>& s);
bool shape_directed(const LadderPresentation& p, const DirectedShape& s);
std::optional<Elem> sup_of_shape(const LadderPresentation& p, const DirectedShape& s);
std::vector<DirectedShape> sup_basis(const LadderPresentation& p, Elem y);
SymSet shape_set(const LadderPresentation& p, const DirectedShape& s);
SymSet shape_down(const LadderPresentation& p, const DirectedShape& s);
Verdict<DirectedShape> is_dcpo(const LadderPresentation& p);

FinPoset truncate(const LadderPresentation& p, Index depth);

}  // namespace posetlab
