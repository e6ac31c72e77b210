#pragma once

#include <optional>
#include <vector>

#include "posetlab/ladder.hpp"

namespace posetlab {

bool weak_way_below(const LadderPresentation& p, const SymSet& g, Elem x);
bool weak_way_below_set(const LadderPresentation& p, const SymSet& g, const SymSet& h);
bool way_below(const LadderPresentation& p, const SymSet& g, Elem x);
bool way_below_set(const LadderPresentation& p, const SymSet& g, const SymSet& h);

// Verdict with the basis shape that misses up(G), when the relation fails.
struct RelationExplanation {
  bool holds = true;
  std::optional<Elem> sup;
  std::optional<DirectedShape> shape;
};
RelationExplanation explain_weak_way_below(const LadderPresentation& p, const SymSet& g, Elem x);
RelationExplanation explain_way_below(const LadderPresentation& p, const SymSet& g, Elem x);

SymSet wwb_down(const LadderPresentation& p, Elem x);
SymSet wwb_up(const LadderPresentation& p, const SymSet& f);
SymSet wb_down(const LadderPresentation& p, Elem x);
SymSet wb_up(const LadderPresentation& p, const SymSet& f);
// Limit points as a set.
SymSet limit_set(const LadderPresentation& p);

// Finite F is in the family iff anchor in up(F) and F meets every condition.
struct HittingSpec {
  Elem anchor;
  std::vector<DirectedShape> shapes;
  std::vector<SymSet> conditions;
};
HittingSpec fin_w_spec(const LadderPresentation& p, Elem x);
// Way-below variant: one condition per non-Max shape of every z >= x.
HittingSpec fin_spec(const LadderPresentation& p, Elem x);
bool satisfies(const LadderPresentation& p, const HittingSpec& spec, const SymSet& f);

struct WitnessQuadruple {
  Elem x, y, z, u;
  friend bool operator==(const WitnessQuadruple&, const WitnessQuadruple&) = default;
};
Verdict<WitnessQuadruple> weakly_increasing(const LadderPresentation& p);

// Index bound past which every ladder predicate built from p and the given
// sets is constant.
Index horizon(const LadderPresentation& p, const std::vector<const SymSet*>& sets = {});
// Base members plus ladder members up to the horizon.
std::vector<Elem> representatives(const LadderPresentation& p, const SymSet& h, Index horizon);

}  // namespace posetlab
