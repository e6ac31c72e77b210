#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

#include "posetlab/staircase.hpp"

namespace posetlab {

// A point of a ladder presentation.  The defaulted ordering is the scan order
// used for witnesses: base points first, then ladder points by (ladder, index).
struct Elem {
  enum class Kind : std::uint8_t { kBase, kLadder };
  Kind kind = Kind::kBase;
  int id = 0;
  Index index = 0;

  static Elem base(int id) { return {Kind::kBase, id, 0}; }
  static Elem ladder(int id, Index n) { return {Kind::kLadder, id, n}; }
  bool is_base() const { return kind == Kind::kBase; }
  bool is_ladder() const { return kind == Kind::kLadder; }

  friend auto operator<=>(const Elem&, const Elem&) = default;
};

// Subset of N as a strictly increasing list of toggle points: n is a member
// iff an odd number of toggles are <= n.  This is automatically a normal form
// (sorted, disjoint, non-adjacent segments, optional final tail).
class IndexSet {
 public:
  struct Segment {
    Index lo;
    Index hi;  // inclusive; kInf for the tail
  };

  IndexSet() = default;
  static IndexSet all() { return tail(0); }
  static IndexSet tail(Index t);
  static IndexSet segment(Index lo, Index hi);  // [lo, hi], empty if hi < lo
  static IndexSet point(Index n) { return segment(n, n); }
  static IndexSet upto(Index n) { return segment(0, n); }

  bool contains(Index n) const;
  bool empty() const { return toggles_.empty(); }
  bool infinite() const { return toggles_.size() % 2 == 1; }
  std::optional<Index> min() const;
  // Largest member; kInf when infinite, nullopt when empty.
  std::optional<Index> max() const;
  std::optional<Index> tail_start() const;
  std::vector<Segment> segments() const;
  Index max_constant() const;
  Index finite_size() const;

  IndexSet complement() const;
  friend IndexSet operator&(const IndexSet& a, const IndexSet& b);
  friend IndexSet operator|(const IndexSet& a, const IndexSet& b);
  friend IndexSet operator-(const IndexSet& a, const IndexSet& b) { return a & b.complement(); }
  bool subset_of(const IndexSet& b) const { return (*this - b).empty(); }
  friend bool operator==(const IndexSet&, const IndexSet&) = default;

  const std::vector<Index>& toggles() const { return toggles_; }

 private:
  std::vector<Index> toggles_;
};

// Symbolic subset of a ladder presentation's universe.
class SymSet {
 public:
  SymSet() = default;
  SymSet(int num_base, int num_ladders)
      : base_(static_cast<std::size_t>(num_base), false), ladders_(static_cast<std::size_t>(num_ladders)) {}
  static SymSet universe(int num_base, int num_ladders);
  static SymSet singleton(int num_base, int num_ladders, Elem e);

  int num_base() const { return static_cast<int>(base_.size()); }
  int num_ladders() const { return static_cast<int>(ladders_.size()); }

  bool contains(Elem e) const;
  void insert(Elem e);
  bool has_base(int b) const { return base_[static_cast<std::size_t>(b)]; }
  void set_base(int b, bool v) { base_[static_cast<std::size_t>(b)] = v; }
  const IndexSet& ladder(int i) const { return ladders_[static_cast<std::size_t>(i)]; }
  IndexSet& ladder(int i) { return ladders_[static_cast<std::size_t>(i)]; }

  bool empty() const;
  bool finite() const;
  std::optional<Elem> first() const;
  // Members with ladder indices <= max_index, in scan order.
  std::vector<Elem> points(Index max_index) const;
  std::vector<int> base_members() const;
  Index max_constant() const;

  SymSet complement() const;
  friend SymSet operator&(const SymSet& a, const SymSet& b);
  friend SymSet operator|(const SymSet& a, const SymSet& b);
  friend SymSet operator-(const SymSet& a, const SymSet& b) { return a & b.complement(); }
  bool subset_of(const SymSet& b) const { return (*this - b).empty(); }
  bool intersects(const SymSet& b) const { return !(*this & b).empty(); }
  friend bool operator==(const SymSet&, const SymSet&) = default;

 private:
  std::vector<bool> base_;
  std::vector<IndexSet> ladders_;
};

}  // namespace posetlab
