#pragma once

#include "pdcost/core.hpp"
#include "pdcost/grammar.hpp"

namespace pdcost {

/// Is inf over nonempty w in L(cfg) of avg lc(w) ⋈ λ. The grammar is brought
/// to pruned CNF first and ε is dropped. Throws PreconditionError ("no word to
/// average") when no nonempty word remains.
Decision decide_avg_lc(const Cfg& cfg, const LetterCost& lc, const Threshold& th);

/// The same test on a grammar already in pruned CNF without ε.
bool avg_lc_holds(const Cfg& pruned_cnf, const LetterCost& lc, const Threshold& th);

}  // namespace pdcost
