#pragma once

// Test-side oracles.  They use nothing but the order relation of a
// presentation: an infinite directed set in a ladder presentation is cofinal
// in the union of the ladders it meets infinitely often, and it misses up(G)
// only if each of those ladders misses up(G) entirely.

#include <algorithm>
#include <optional>
#include <vector>

#include "posetlab/ladder.hpp"

namespace brute {

using posetlab::Elem;
using posetlab::Index;
using posetlab::LadderPresentation;

class Oracle {
 public:
  Oracle(const LadderPresentation& p, Index depth) : p_(p), depth_(depth), deep_(3 * depth + 3) {
    for (int b = 0; b < p.num_base(); ++b) pts_.push_back(Elem::base(b));
    for (int l = 0; l < p.num_ladders(); ++l)
      for (Index n = 0; n <= depth; ++n) pts_.push_back(Elem::ladder(l, n));
    const int nl = p.num_ladders();
    for (unsigned mask = 1; mask < (1u << nl); ++mask) {
      Shape sh{mask, {}, std::nullopt};
      for (int l = 0; l < nl; ++l)
        if (mask & (1u << l)) sh.ladders.push_back(l);
      if (!directed(sh.ladders)) continue;
      sh.sup = sup(sh.ladders);
      shapes_.push_back(sh);
    }
  }

  // Directed unions of whole ladders.
  struct Shape {
    unsigned mask;
    std::vector<int> ladders;
    std::optional<Elem> sup;
  };
  const std::vector<Shape>& shapes() const { return shapes_; }

  const std::vector<Elem>& points() const { return pts_; }

  bool directed(const std::vector<int>& s) const {
    for (int i : s)
      for (int j : s)
        for (Index n = 0; n <= depth_; ++n) {
          bool ub = false;
          for (int l : s)
            for (Index m = 0; m <= deep_ && !ub; ++m)
              ub = p_.leq(Elem::ladder(i, n), Elem::ladder(l, m)) && p_.leq(Elem::ladder(j, n), Elem::ladder(l, m));
          if (!ub) return false;
        }
    return true;
  }

  std::optional<Elem> sup(const std::vector<int>& s) const {
    std::vector<Elem> ub;
    for (Elem u : pts_) {
      bool above = true;
      for (int i : s)
        for (Index n = 0; n <= deep_ && above; ++n) above = p_.leq(Elem::ladder(i, n), u);
      if (above) ub.push_back(u);
    }
    for (Elem u : ub) {
      bool least = true;
      for (Elem v : ub) least = least && p_.leq(u, v);
      if (least) return u;
    }
    return std::nullopt;
  }

  bool meets_up(const std::vector<Elem>& g, int ladder) const {
    for (Elem e : g)
      if (p_.leq(e, Elem::ladder(ladder, deep_))) return true;
    return false;
  }

  // Some directed set with sup z misses up(G).
  bool escapes(const std::vector<Elem>& g, Elem z) const {
    bool z_above = false;
    for (Elem e : g) z_above = z_above || p_.leq(e, z);
    if (!z_above) return true;
    for (const auto& sh : shapes_) {
      if (!sh.sup || *sh.sup != z) continue;
      bool misses = true;
      for (int l : sh.ladders) misses = misses && !meets_up(g, l);
      if (misses) return true;
    }
    return false;
  }

  bool wwb(const std::vector<Elem>& g, Elem x) const { return !escapes(g, x); }

  bool wb(const std::vector<Elem>& g, Elem x) const {
    for (Elem z : pts_)
      if (p_.leq(x, z) && escapes(g, z)) return false;
    return true;
  }

 private:
  const LadderPresentation& p_;
  Index depth_;
  Index deep_;
  std::vector<Elem> pts_;
  std::vector<Shape> shapes_;
};

}  // namespace brute

namespace brute {

// Meet continuity from the definition: for every directed union of ladders D
// with sup u and every x <= u, x lies in the closure of down(D) n down(x).
// Scott closure is built by closing under sups of directed ladder unions;
// wf closure tests every basic open wwb_up(F) with |F| <= 2 around x.
class MeetOracle {
 public:
  MeetOracle(const LadderPresentation& p, Index depth) : p_(p), o_(p, depth), deep_(3 * depth + 3) {}

  bool meet_continuous(bool wf) const {
    for (const auto& sh : o_.shapes()) {
      if (!sh.sup) continue;
      for (Elem x : o_.points()) {
        if (!p_.leq(x, *sh.sup)) continue;
        std::vector<Elem> t;
        for (Elem y : o_.points())
          if (p_.leq(y, x) && below_shape(y, sh)) t.push_back(y);
        for (int l : sh.ladders)
          if (p_.leq(Elem::ladder(l, deep_), x)) t.push_back(Elem::ladder(l, deep_));
        if (!(wf ? in_wf_closure(x, t) : in_scott_closure(x, t))) return false;
      }
    }
    return true;
  }

 private:
  bool below_shape(Elem y, const Oracle::Shape& sh) const {
    for (int l : sh.ladders)
      if (p_.leq(y, Elem::ladder(l, deep_))) return true;
    return false;
  }

  // The closure is down(gens); a whole ladder lies in it iff a point far past
  // every generator's index does.
  bool in_scott_closure(Elem x, std::vector<Elem> gens) const {
    auto in = [&](Elem e) {
      for (Elem g : gens)
        if (p_.leq(e, g)) return true;
      return false;
    };
    for (bool grew = true; grew;) {
      grew = false;
      for (const auto& sh : o_.shapes()) {
        if (!sh.sup || in(*sh.sup)) continue;
        bool inside = true;
        for (int l : sh.ladders) inside = inside && in(Elem::ladder(l, deep_));
        if (!inside) continue;
        gens.push_back(*sh.sup);
        grew = true;
      }
    }
    return in(x);
  }

  bool in_wf_closure(Elem x, const std::vector<Elem>& t) const {
    const auto& pts = o_.points();
    for (std::size_t i = 0; i < pts.size(); ++i)
      for (std::size_t j = i; j < pts.size(); ++j) {
        std::vector<Elem> f{pts[i]};
        if (j != i) f.push_back(pts[j]);
        if (!o_.wwb(f, x)) continue;
        bool meets = false;
        for (Elem y : t) meets = meets || o_.wwb(f, y);
        if (!meets) return false;
      }
    return true;
  }

  const LadderPresentation& p_;
  Oracle o_;
  Index deep_;
};

}  // namespace brute
