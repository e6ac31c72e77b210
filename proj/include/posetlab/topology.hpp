#pragma once

#include <cstddef>
#include <vector>

#include "posetlab/ladder.hpp"

namespace posetlab {

enum class TopologyTag { kScott, kWwb, kWf };
const char* to_string(TopologyTag t);

struct BasicOpen {
  TopologyTag tag = TopologyTag::kWf;
  std::vector<Elem> generator;
  SymSet realized;
};

bool is_scott_open(const LadderPresentation& p, const SymSet& u);
SymSet scott_closure(const LadderPresentation& p, const SymSet& a);

// Cover plus point-filteredness of {wwb_up(x)}; witness is the offending point.
Verdict<Elem> wwb_topology_exists(const LadderPresentation& p);

BasicOpen wf_basic(const LadderPresentation& p, const std::vector<Elem>& f);
BasicOpen wwb_basic(const LadderPresentation& p, Elem x);

// Smallest wf-basic neighbourhood of a at level r: wwb_up({a}) for non-limit a,
// otherwise wwb_up of the level-r points of the ladders converging to a.
SymSet wf_neighbourhood(const LadderPresentation& p, Elem a, Index r);
bool in_wf_closure(const LadderPresentation& p, Elem x, const SymSet& s);

SymSet interior(const LadderPresentation& p, TopologyTag tag, const SymSet& a);
SymSet closure(const LadderPresentation& p, TopologyTag tag, const SymSet& a);

// Shape-canonical opens: tail starts up to N*+1.  max_opens > 0 keeps an
// evenly spaced deterministic sample of that size.
std::vector<SymSet> canonical_opens(const LadderPresentation& p, TopologyTag tag, std::size_t max_opens = 0);
Verdict<SymSet> inclusion_check(const LadderPresentation& p, TopologyTag sub, TopologyTag super,
                                std::size_t max_opens = 0);

// wwb_up(F) = union of wwb_up({x}) over F = wf-interior of up(F).
bool basic_interior_identity(const LadderPresentation& p, const std::vector<Elem>& f);

namespace detail {
SymSet wf_interior(const LadderPresentation& p, const SymSet& b);
SymSet wwb_interior(const LadderPresentation& p, const SymSet& b);
void require_topology(const LadderPresentation& p, TopologyTag tag);
}  // namespace detail

}  // namespace posetlab
