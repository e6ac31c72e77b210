#pragma once

#include "posetlab/ladder.hpp"

namespace posetlab {

// Bounded brute-force deciders on truncations.  They only use the order
// relation: directed subsets are enumerated explicitly (up to three elements)
// and tail shapes get their directedness and suprema from a deeper truncation.
// Used for differential testing; never called by the symbolic deciders.
bool oracle_wwb(const LadderPresentation& p, const SymSet& g, Elem x, Index depth);
bool oracle_wwb_serial(const LadderPresentation& p, const SymSet& g, Elem x, Index depth);
bool oracle_wb(const LadderPresentation& p, const SymSet& g, Elem x, Index depth);
bool oracle_wb_serial(const LadderPresentation& p, const SymSet& g, Elem x, Index depth);

}  // namespace posetlab
