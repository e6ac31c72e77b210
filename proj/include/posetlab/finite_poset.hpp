#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace posetlab {

// Index into FinPoset::elements(); elements are kept in lexicographic order,
// so comparing indices is comparing names.
using FinIndex = std::size_t;
using FinSubset = std::vector<FinIndex>;

class FinPoset {
 public:
  using Pair = std::pair<std::string, std::string>;

  // Reflexive-transitive closure of the cover pairs (lower, upper).
  static FinPoset build(std::vector<std::string> elements, const std::vector<Pair>& cover_pairs);

  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& elements() const { return names_; }
  const std::string& name(FinIndex i) const { return names_.at(i); }
  std::optional<FinIndex> find(const std::string& name) const;
  FinIndex index(const std::string& name) const;  // throws UnknownElement
  FinSubset subset(const std::vector<std::string>& names) const;

  bool leq(FinIndex a, FinIndex b) const { return leq_[a * names_.size() + b] != 0; }
  bool less(FinIndex a, FinIndex b) const { return a != b && leq(a, b); }

  std::vector<Pair> leq_pairs() const;
  // Hasse diagram edges (lower, upper).
  std::vector<std::pair<FinIndex, FinIndex>> covers() const;

  bool in_up(std::span<const FinIndex> a, FinIndex x) const;
  bool in_down(std::span<const FinIndex> a, FinIndex x) const;
  FinSubset up_set(std::span<const FinIndex> a) const;
  FinSubset down_set(std::span<const FinIndex> a) const;

 private:
  std::vector<std::string> names_;
  std::vector<char> leq_;
};

// A finite family of nonempty finite subsets of a FinPoset.
struct FiniteFamily {
  std::vector<FinSubset> sets;
};

bool fin_directed(const FinPoset& p, std::span<const FinIndex> d);
std::optional<FinIndex> fin_sup(const FinPoset& p, std::span<const FinIndex> a);
std::vector<FinIndex> fin_upper_bounds(const FinPoset& p, std::span<const FinIndex> a);

// True iff up(h) is contained in up(g).
bool smyth_leq(const FinPoset& p, std::span<const FinIndex> g, std::span<const FinIndex> h);

// Every pair of members is refined by a third member inside both up-sets.
bool family_directed(const FinPoset& p, const FiniteFamily& fam);

// Smallest (then lexicographically first) directed D inside the union of the
// family meeting every member.
FinSubset rudin_extract(const FinPoset& p, const FiniteFamily& fam);

// On a finite poset every directed set has a maximum, so G << x iff x in up(G).
bool fin_way_below(const FinPoset& p, std::span<const FinIndex> g, FinIndex x);

}  // namespace posetlab
