#include "posetlab/oracle.hpp"

#include <algorithm>

#include "posetlab/error.hpp"

namespace posetlab {

namespace {

struct Setup {
  std::vector<Elem> below;  // down(x) inside the truncation
  std::vector<Elem> g_points;
  Index deep = 0;
};

Setup prepare(const LadderPresentation& p, const SymSet& g, Elem x, Index depth) {
  if (g.empty()) throw Error(ErrorKind::kEmptySet, "oracle with empty G");
  if (depth < p.uniformity_threshold())
    throw Error(ErrorKind::kDepthTooSmall, "depth " + std::to_string(depth) + " below N*");
  p.check(x);
  Setup s;
  s.deep = 3 * depth + 3;
  for (Elem e : p.scan_points(depth))
    if (p.leq(e, x)) s.below.push_back(e);
  s.g_points = g.points(s.deep);
  return s;
}

bool in_up_g(const LadderPresentation& p, const Setup& s, Elem e) {
  return std::any_of(s.g_points.begin(), s.g_points.end(), [&](Elem g) { return p.leq(g, e); });
}

// Finite directed D with supremum x: checks pairs and the supremum literally.
bool finite_set_ok(const LadderPresentation& p, const Setup& s, const std::vector<Elem>& d, Elem x) {
  for (Elem a : d)
    for (Elem b : d)
      if (std::none_of(d.begin(), d.end(), [&](Elem c) { return p.leq(a, c) && p.leq(b, c); })) return true;
  bool is_sup = std::any_of(d.begin(), d.end(), [&](Elem c) { return c == x; });
  if (!is_sup) return true;  // maximum of a finite directed set is its supremum
  return std::any_of(d.begin(), d.end(), [&](Elem c) { return in_up_g(p, s, c); });
}

bool finite_sets_from(const LadderPresentation& p, const Setup& s, std::size_t i, Elem x) {
  const auto& v = s.below;
  const std::size_t n = v.size();
  if (!finite_set_ok(p, s, {v[i]}, x)) return false;
  for (std::size_t j = i + 1; j < n; ++j) {
    if (!finite_set_ok(p, s, {v[i], v[j]}, x)) return false;
    for (std::size_t k = j + 1; k < n; ++k)
      if (!finite_set_ok(p, s, {v[i], v[j], v[k]}, x)) return false;
  }
  return true;
}

bool tails_ok(const LadderPresentation& p, const Setup& s, Elem x, Index depth) {
  const int nl = p.num_ladders();
  const auto cand = p.scan_points(depth);
  for (unsigned mask = 1; mask < (1u << nl); ++mask) {
    std::vector<int> sl;
    for (int i = 0; i < nl; ++i)
      if (mask & (1u << i)) sl.push_back(i);
    bool directed = true;
    for (int i : sl)
      for (int j : sl)
        for (Index a = 0; a <= depth && directed; ++a)
          for (Index b = 0; b <= depth && directed; ++b) {
            bool ub = false;
            for (int l : sl)
              for (Index r = 0; r <= s.deep && !ub; ++r)
                ub = p.leq(Elem::ladder(i, a), Elem::ladder(l, r)) && p.leq(Elem::ladder(j, b), Elem::ladder(l, r));
            directed = ub;
          }
    if (!directed) continue;
    std::vector<Elem> ubs;
    for (Elem u : cand) {
      bool ub = true;
      for (int i : sl)
        for (Index n = 0; n <= s.deep && ub; ++n) ub = p.leq(Elem::ladder(i, n), u);
      if (ub) ubs.push_back(u);
    }
    std::optional<Elem> sup;
    for (Elem u : ubs)
      if (std::all_of(ubs.begin(), ubs.end(), [&](Elem v) { return p.leq(u, v); })) sup = u;
    if (sup != x) continue;
    bool meets = false;
    for (int i : sl)
      for (Index n = 0; n <= s.deep && !meets; ++n) meets = in_up_g(p, s, Elem::ladder(i, n));
    if (!meets) return false;
  }
  return true;
}

}  // namespace

bool oracle_wwb_serial(const LadderPresentation& p, const SymSet& g, Elem x, Index depth) {
  Setup s = prepare(p, g, x, depth);
  for (std::size_t i = 0; i < s.below.size(); ++i)
    if (!finite_sets_from(p, s, i, x)) return false;
  return tails_ok(p, s, x, depth);
}

bool oracle_wwb(const LadderPresentation& p, const SymSet& g, Elem x, Index depth) {
  Setup s = prepare(p, g, x, depth);
  const long n = static_cast<long>(s.below.size());
  bool ok = true;
#pragma omp parallel for reduction(&& : ok) schedule(dynamic)
  for (long i = 0; i < n; ++i) ok = ok && finite_sets_from(p, s, static_cast<std::size_t>(i), x);
  return ok && tails_ok(p, s, x, depth);
}

namespace {

template <class F>
bool oracle_wb_with(const LadderPresentation& p, const SymSet& g, Elem x, Index depth, F&& wwb) {
  for (Elem z : p.scan_points(depth))
    if (p.leq(x, z) && !wwb(p, g, z, depth)) return false;
  return true;
}

}  // namespace

bool oracle_wb_serial(const LadderPresentation& p, const SymSet& g, Elem x, Index depth) {
  return oracle_wb_with(p, g, x, depth, oracle_wwb_serial);
}

bool oracle_wb(const LadderPresentation& p, const SymSet& g, Elem x, Index depth) {
  return oracle_wb_with(p, g, x, depth, oracle_wwb);
}

}  // namespace posetlab
