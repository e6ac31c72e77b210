#include "posetlab/relations.hpp"

#include <algorithm>

#include "posetlab/error.hpp"

namespace posetlab {

namespace {

void require_nonempty(const SymSet& s, const char* what) {
  if (s.empty()) throw Error(ErrorKind::kEmptySet, what);
}

// up(G) is an upper set, so it meets a tail shape iff it meets one of its ladders.
bool shape_meets_upper(const DirectedShape& e, const SymSet& up_g) {
  if (e.is_max()) return up_g.contains(e.max);
  return std::any_of(e.ladders.begin(), e.ladders.end(), [&](int i) { return !up_g.ladder(i).empty(); });
}

RelationExplanation explain_at(const LadderPresentation& p, const SymSet& up_g, Elem x) {
  for (const auto& e : sup_basis(p, x))
    if (!shape_meets_upper(e, up_g)) return {false, x, e};
  return {};
}

}  // namespace

Index horizon(const LadderPresentation& p, const std::vector<const SymSet*>& sets) {
  Index m = 0;
  for (const SymSet* s : sets) m = std::max(m, s->max_constant());
  return p.uniformity_threshold() + m + 1;
}

std::vector<Elem> representatives(const LadderPresentation& p, const SymSet& h, Index hz) {
  (void)p;
  return h.points(hz);
}

RelationExplanation explain_weak_way_below(const LadderPresentation& p, const SymSet& g, Elem x) {
  require_nonempty(g, "weak way-below from empty set");
  p.check(x);
  return explain_at(p, p.up_set(g), x);
}

bool weak_way_below(const LadderPresentation& p, const SymSet& g, Elem x) {
  return explain_weak_way_below(p, g, x).holds;
}

bool weak_way_below_set(const LadderPresentation& p, const SymSet& g, const SymSet& h) {
  require_nonempty(g, "weak way-below from empty set");
  require_nonempty(h, "weak way-below to empty set");
  SymSet up_g = p.up_set(g);
  for (Elem x : representatives(p, h, horizon(p, {&g, &h})))
    if (!explain_at(p, up_g, x).holds) return false;
  return true;
}

RelationExplanation explain_way_below(const LadderPresentation& p, const SymSet& g, Elem x) {
  require_nonempty(g, "way-below from empty set");
  p.check(x);
  SymSet up_g = p.up_set(g);
  if (!up_g.contains(x)) return {false, x, DirectedShape::max_of(x)};
  // every z >= x is in up(G); only limit points have further basis shapes
  for (Elem z : p.limit_points()) {
    if (!p.leq(x, z)) continue;
    auto r = explain_at(p, up_g, z);
    if (!r.holds) return r;
  }
  return {};
}

bool way_below(const LadderPresentation& p, const SymSet& g, Elem x) { return explain_way_below(p, g, x).holds; }

bool way_below_set(const LadderPresentation& p, const SymSet& g, const SymSet& h) {
  require_nonempty(g, "way-below from empty set");
  require_nonempty(h, "way-below to empty set");
  for (Elem x : representatives(p, h, horizon(p, {&g, &h})))
    if (!way_below(p, g, x)) return false;
  return true;
}

SymSet limit_set(const LadderPresentation& p) { return p.set_of(p.limit_points()); }

SymSet wwb_down(const LadderPresentation& p, Elem x) {
  SymSet out = p.down(x);
  for (int k : p.ladders_with_sup(x)) out = out & p.approach(k);
  return out;
}

SymSet wb_down(const LadderPresentation& p, Elem x) {
  SymSet out = p.down(x);
  for (int k = 0; k < p.num_ladders(); ++k) {
    const auto& s = p.ladder_sup(k);
    if (s && p.leq(x, *s)) out = out & p.approach(k);
  }
  return out;
}

SymSet wwb_up(const LadderPresentation& p, const SymSet& f) {
  require_nonempty(f, "wwb_up of empty set");
  SymSet out = p.up_set(f);
  for (int k = 0; k < p.num_ladders(); ++k) {
    const auto& s = p.ladder_sup(k);
    if (s && !f.intersects(p.approach(k))) out = out - p.singleton(*s);
  }
  return out;
}

SymSet wb_up(const LadderPresentation& p, const SymSet& f) {
  require_nonempty(f, "wb_up of empty set");
  SymSet out = p.up_set(f);
  for (int k = 0; k < p.num_ladders(); ++k) {
    const auto& s = p.ladder_sup(k);
    if (s && !f.intersects(p.approach(k))) out = out - p.down(*s);
  }
  return out;
}

HittingSpec fin_w_spec(const LadderPresentation& p, Elem x) {
  HittingSpec spec{x, {}, {}};
  for (auto& e : sup_basis(p, x)) {
    if (e.is_max()) continue;
    spec.conditions.push_back(shape_down(p, e));
    spec.shapes.push_back(std::move(e));
  }
  return spec;
}

HittingSpec fin_spec(const LadderPresentation& p, Elem x) {
  HittingSpec spec{x, {}, {}};
  for (Elem z : p.limit_points()) {
    if (!p.leq(x, z)) continue;
    for (auto& e : sup_basis(p, z)) {
      if (e.is_max()) continue;
      spec.conditions.push_back(shape_down(p, e));
      spec.shapes.push_back(std::move(e));
    }
  }
  return spec;
}

bool satisfies(const LadderPresentation& p, const HittingSpec& spec, const SymSet& f) {
  if (f.empty() || !f.finite()) return false;
  if (!p.up_set(f).contains(spec.anchor)) return false;
  return std::all_of(spec.conditions.begin(), spec.conditions.end(), [&](const SymSet& c) { return f.intersects(c); });
}

Verdict<WitnessQuadruple> weakly_increasing(const LadderPresentation& p) {
  // For non-limit z, wwb_down(z) = down(z) absorbs wwb_down(y) for every y <= z,
  // so only limit points can break the property.
  const SymSet lim = limit_set(p);
  for (Elem z : p.limit_points()) {
    auto u = wwb_up(p, p.singleton(z)).first();
    if (!u) continue;
    SymSet wd_z = wwb_down(p, z);
    SymSet reach = p.down_set(p.down(z) - lim);
    for (Elem y : p.limit_points())
      if (p.leq(y, z)) reach = reach | wwb_down(p, y);
    if (reach.subset_of(wd_z)) continue;
    Index hz = horizon(p, {&wd_z, &reach});
    for (Elem y : p.downward_points(hz)) {
      if (!p.leq(y, z)) continue;
      SymSet bad = wwb_down(p, y) - wd_z;
      if (auto x = bad.first()) return Verdict<WitnessQuadruple>::no({*x, y, z, *u});
    }
    throw Error(ErrorKind::kSuiteFailure, "weakly_increasing: refutation without witness at " + p.format(z));
  }
  return Verdict<WitnessQuadruple>::yes();
}

}  // namespace posetlab
