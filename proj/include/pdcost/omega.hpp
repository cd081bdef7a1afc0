#pragma once

#include "pdcost/core.hpp"

#include <vector>

namespace pdcost {

enum class LimitMode { Inf, Sup };  // liminf / limsup of prefix averages

std::string to_string(LimitMode m);  // "inf" / "sup"

/// One piece V (U)^ω of the language of an ω-PDA, generated by the pair
/// (state, symbol) with symbol == kBottom for the empty-stack pieces.
struct FactorComponent {
    StateId state = 0;
    SymbolId symbol = kBottom;
    Pda v_rec;  // prefixes reaching `state` with `symbol` on top
    Pda u_rec;  // loops from there back to `state` with `symbol` on top,
                // never below the starting level, entering an accepting state
};

struct Factorization {
    std::vector<FactorComponent> components;
};

/// Finite-word recognizer for the prefixes ending in state q with γ on top.
Pda prefix_recognizer(const Pda& a, StateId q, SymbolId gamma);

/// Finite-word recognizer for the loops of (q, γ) described above.
Pda loop_recognizer(const Pda& a, StateId q, SymbolId gamma);

/// All pairs (q, γ) whose prefix and loop languages are both nonempty.
Factorization factorize(const Pda& a);

/// Is there an accepting run whose word w has avgSup lc(w) ⋈ λ.
Decision decide_avgsup_lc(const Pda& a, const LetterCost& lc, const Threshold& th);
/// Same with avgInf.
Decision decide_avginf_lc(const Pda& a, const LetterCost& lc, const Threshold& th);

Decision decide_avg_lc_omega(const Pda& a, const LetterCost& lc, const Threshold& th, LimitMode mode);

/// Reference route through the explicit factorization: one grammar per loop
/// language, pruned CNF, the finite-word test and (for avgInf) the left pump
/// grammars. Exponentially slower; meant for cross-checks on small automata.
Decision decide_avgsup_lc_componentwise(const Pda& a, const LetterCost& lc, const Threshold& th);
Decision decide_avginf_lc_componentwise(const Pda& a, const LetterCost& lc, const Threshold& th);

}  // namespace pdcost
