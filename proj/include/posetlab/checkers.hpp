#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "posetlab/ladder.hpp"
#include "posetlab/relations.hpp"
#include "posetlab/report.hpp"

namespace posetlab {

bool exact_at(const LadderPresentation& p, Elem x);
// Some basis shape of x lies inside wwb_down(x); agrees with exact_at on dcpos.
bool exact_at_shapes(const LadderPresentation& p, Elem x);
Verdict<Elem> is_exact(const LadderPresentation& p);

bool quasiexact_at(const LadderPresentation& p, Elem x);
Verdict<Elem> is_quasiexact(const LadderPresentation& p);

// The four equivalent forms: full family, family restricted to down(x), and a
// directed subfamily of each.  Throws ImplicationViolation if they disagree.
std::array<bool, 4> quasiexact_equiv_suite(const LadderPresentation& p);

bool quasicontinuous_at(const LadderPresentation& p, Elem x);
Verdict<Elem> is_quasicontinuous(const LadderPresentation& p);
Verdict<Elem> is_continuous(const LadderPresentation& p);

struct MeetWitness {
  Elem x;
  DirectedShape shape;
  friend bool operator==(const MeetWitness&, const MeetWitness&) = default;
};
Verdict<MeetWitness> meet_continuous(const LadderPresentation& p);
Verdict<MeetWitness> moderately_meet_continuous(const LadderPresentation& p);

// Finite F inside up(H) with F weakly way below x, searched smallest first.
std::optional<SymSet> finitary_wwb_reduction(const LadderPresentation& p, const SymSet& h, Elem x);

Index antichain_bound(const LadderPresentation& p);

PropertyReport property_report(const LadderPresentation& p);

struct SuiteOptions {
  std::size_t max_opens = 64;
};
// Property report plus every implication the theory guarantees; throws
// ImplicationViolation on the first broken one.
PropertyReport theorem_suite(const LadderPresentation& p, const SuiteOptions& opts = {});

}  // namespace posetlab
