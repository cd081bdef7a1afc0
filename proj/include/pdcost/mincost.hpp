#pragma once

#include "pdcost/core.hpp"
#include "pdcost/ext_rational.hpp"
#include "pdcost/grammar.hpp"

#include <vector>

namespace pdcost {

/// inf over w in L(cfg) of lc(w): +∞ for an empty language, −∞ when some
/// reachable pump has negative cost. Accepts any production shapes.
ExtendedRational min_letter_cost(const Cfg& cfg, const LetterCost& lc);

/// The same infimum for every nonterminal (as a start symbol).
std::vector<ExtendedRational> nonterminal_min_costs(const Cfg& cfg, const LetterCost& lc);

/// Literal variant: N+1 relaxation rounds over all productions, −∞ when the
/// last round still changed a value. Expects a pruned grammar.
ExtendedRational min_letter_cost_global_rounds(const Cfg& cfg, const LetterCost& lc);

/// lc^λ(a) = lc(a) − λ.
LetterCost shifted_cost(const LetterCost& lc, const Rational& lambda);

}  // namespace pdcost
