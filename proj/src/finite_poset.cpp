#include "posetlab/finite_poset.hpp"

#include <algorithm>

#include "posetlab/error.hpp"

namespace posetlab {

namespace {

void require_nonempty(std::span<const FinIndex> s, const char* what) {
  if (s.empty()) throw Error(ErrorKind::kEmptySet, what);
}

// Visits every k-combination of [0, n) in lexicographic order until f returns true.
template <class F>
bool for_each_combination(std::size_t n, std::size_t k, F&& f) {
  if (k > n) return false;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    if (f(idx)) return true;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) return false;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

FinPoset FinPoset::build(std::vector<std::string> elements, const std::vector<Pair>& cover_pairs) {
  std::sort(elements.begin(), elements.end());
  if (std::adjacent_find(elements.begin(), elements.end()) != elements.end())
    throw Error(ErrorKind::kDuplicateId, "duplicate element");
  FinPoset p;
  p.names_ = std::move(elements);
  const std::size_t n = p.names_.size();
  p.leq_.assign(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) p.leq_[i * n + i] = 1;
  for (const auto& [lo, hi] : cover_pairs) p.leq_[p.index(lo) * n + p.index(hi)] = 1;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (p.leq_[i * n + k])
        for (std::size_t j = 0; j < n; ++j)
          if (p.leq_[k * n + j]) p.leq_[i * n + j] = 1;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (p.leq_[i * n + j] && p.leq_[j * n + i])
        throw Error(ErrorKind::kCycle, p.names_[i] + " and " + p.names_[j] + " ordered both ways");
  return p;
}

std::optional<FinIndex> FinPoset::find(const std::string& name) const {
  auto it = std::lower_bound(names_.begin(), names_.end(), name);
  if (it == names_.end() || *it != name) return std::nullopt;
  return static_cast<FinIndex>(it - names_.begin());
}

FinIndex FinPoset::index(const std::string& name) const {
  if (auto i = find(name)) return *i;
  throw Error(ErrorKind::kUnknownElement, name);
}

FinSubset FinPoset::subset(const std::vector<std::string>& names) const {
  FinSubset out;
  for (const auto& n : names) out.push_back(index(n));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<FinPoset::Pair> FinPoset::leq_pairs() const {
  std::vector<Pair> out;
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = 0; j < size(); ++j)
      if (leq(i, j)) out.emplace_back(names_[i], names_[j]);
  return out;
}

std::vector<std::pair<FinIndex, FinIndex>> FinPoset::covers() const {
  std::vector<std::pair<FinIndex, FinIndex>> out;
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = 0; j < size(); ++j) {
      if (!less(i, j)) continue;
      bool cover = true;
      for (std::size_t k = 0; k < size() && cover; ++k)
        if (less(i, k) && less(k, j)) cover = false;
      if (cover) out.emplace_back(i, j);
    }
  return out;
}

bool FinPoset::in_up(std::span<const FinIndex> a, FinIndex x) const {
  return std::any_of(a.begin(), a.end(), [&](FinIndex y) { return leq(y, x); });
}

bool FinPoset::in_down(std::span<const FinIndex> a, FinIndex x) const {
  return std::any_of(a.begin(), a.end(), [&](FinIndex y) { return leq(x, y); });
}

FinSubset FinPoset::up_set(std::span<const FinIndex> a) const {
  FinSubset out;
  for (FinIndex x = 0; x < size(); ++x)
    if (in_up(a, x)) out.push_back(x);
  return out;
}

FinSubset FinPoset::down_set(std::span<const FinIndex> a) const {
  FinSubset out;
  for (FinIndex x = 0; x < size(); ++x)
    if (in_down(a, x)) out.push_back(x);
  return out;
}

bool fin_directed(const FinPoset& p, std::span<const FinIndex> d) {
  require_nonempty(d, "directed test on empty set");
  for (FinIndex a : d)
    for (FinIndex b : d) {
      bool ub = std::any_of(d.begin(), d.end(), [&](FinIndex c) { return p.leq(a, c) && p.leq(b, c); });
      if (!ub) return false;
    }
  return true;
}

std::vector<FinIndex> fin_upper_bounds(const FinPoset& p, std::span<const FinIndex> a) {
  std::vector<FinIndex> out;
  for (FinIndex u = 0; u < p.size(); ++u)
    if (std::all_of(a.begin(), a.end(), [&](FinIndex x) { return p.leq(x, u); })) out.push_back(u);
  return out;
}

std::optional<FinIndex> fin_sup(const FinPoset& p, std::span<const FinIndex> a) {
  require_nonempty(a, "supremum of empty set");
  auto ub = fin_upper_bounds(p, a);
  for (FinIndex u : ub)
    if (std::all_of(ub.begin(), ub.end(), [&](FinIndex v) { return p.leq(u, v); })) return u;
  return std::nullopt;
}

bool smyth_leq(const FinPoset& p, std::span<const FinIndex> g, std::span<const FinIndex> h) {
  require_nonempty(g, "smyth_leq: empty G");
  require_nonempty(h, "smyth_leq: empty H");
  return std::all_of(h.begin(), h.end(), [&](FinIndex y) { return p.in_up(g, y); });
}

bool family_directed(const FinPoset& p, const FiniteFamily& fam) {
  if (fam.sets.empty()) return false;
  for (const auto& f1 : fam.sets)
    for (const auto& f2 : fam.sets) {
      bool refined = std::any_of(fam.sets.begin(), fam.sets.end(), [&](const FinSubset& f3) {
        return smyth_leq(p, f1, f3) && smyth_leq(p, f2, f3);
      });
      if (!refined) return false;
    }
  return true;
}

FinSubset rudin_extract(const FinPoset& p, const FiniteFamily& fam) {
  for (const auto& f : fam.sets) {
    if (f.empty()) throw Error(ErrorKind::kEmptySet, "family member is empty");
    for (FinIndex x : f)
      if (x >= p.size()) throw Error(ErrorKind::kUnknownElement, "family member outside poset");
  }
  if (!family_directed(p, fam)) throw Error(ErrorKind::kNotDirectedFamily, "family is not directed");

  FinSubset pool;
  for (const auto& f : fam.sets) pool.insert(pool.end(), f.begin(), f.end());
  std::sort(pool.begin(), pool.end());
  pool.erase(std::unique(pool.begin(), pool.end()), pool.end());

  FinSubset found;
  for (std::size_t k = 1; k <= pool.size(); ++k) {
    bool ok = for_each_combination(pool.size(), k, [&](const std::vector<std::size_t>& idx) {
      FinSubset d;
      for (std::size_t i : idx) d.push_back(pool[i]);
      for (const auto& f : fam.sets)
        if (std::none_of(f.begin(), f.end(), [&](FinIndex x) { return std::binary_search(d.begin(), d.end(), x); }))
          return false;
      if (!fin_directed(p, d)) return false;
      found = std::move(d);
      return true;
    });
    if (ok) return found;
  }
  throw Error(ErrorKind::kNotDirectedFamily, "no directed transversal");
}

bool fin_way_below(const FinPoset& p, std::span<const FinIndex> g, FinIndex x) {
  require_nonempty(g, "way-below with empty G");
  return p.in_up(g, x);
}

}  // namespace posetlab
