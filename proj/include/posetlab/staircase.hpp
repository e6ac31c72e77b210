#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

namespace posetlab {

using Index = std::int64_t;
inline constexpr Index kInf = std::numeric_limits<Index>::max();

// A monotone map f: N -> N u {inf}.  Lad(i,n) <= Lad(j,m) iff m >= f(n).
// Stored as an explicit prefix followed by an eventual tail that is either
// inf, a constant, or a shift n + c.
class Staircase {
 public:
  enum class Tail : std::uint8_t { kInf, kConst, kShift };

  Staircase() = default;  // never
  static Staircase never() { return {}; }
  static Staircase constant(Index c);
  static Staircase shift(Index c);          // max(0, n + c)
  static Staircase upto(Index theta, Index value);  // value for n <= theta, inf after

  Index operator()(Index n) const;
  // n -> g(f(n)), i.e. follow *this and then g.
  Staircase then(const Staircase& g) const;
  static Staircase min(const Staircase& f, const Staircase& g);

  bool is_never() const { return prefix_.empty() && tail_ == Tail::kInf; }
  bool is_total() const { return tail_ != Tail::kInf; }
  bool is_constant() const { return prefix_.empty() && tail_ == Tail::kConst; }
  bool is_shift() const;
  Tail tail() const { return tail_; }
  Index tail_value() const { return c_; }
  const std::vector<Index>& prefix() const { return prefix_; }

  // Largest n with f(n) <= m; -1 if none, kInf if every n qualifies.
  Index last_at_most(Index m) const;
  // Largest n with f(n) finite, with the same conventions.
  Index last_finite() const;
  // Some n with f(n) <= n exists.
  bool has_fixpoint_or_below() const;
  // Largest finite constant occurring in the description.
  Index max_constant() const;

  std::string debug_string() const;
  friend bool operator==(const Staircase&, const Staircase&) = default;

 private:
  Index tail_at(Index n) const;
  void normalize();

  std::vector<Index> prefix_;
  Tail tail_ = Tail::kInf;
  Index c_ = 0;
};

}  // namespace posetlab
