#pragma once

#include "pdcost/core.hpp"
#include "pdcost/omega.hpp"

#include <cstdint>
#include <vector>

namespace pdcost {

/// (max symbol cost)·3·|Q|·|Γ|·|δ| + ⌈λ⌉. Requires λ ≥ 0.
std::uint64_t cost_bound(const Pda& a, const StackPricing& c, const Rational& lambda);

struct MetaLetter {
    std::uint32_t transition;  // index into the source automaton's transitions
    std::uint64_t cost;        // stack cost of the configuration it enters

    friend bool operator==(const MetaLetter&, const MetaLetter&) = default;
    friend auto operator<=>(const MetaLetter&, const MetaLetter&) = default;
};

/// The source automaton with the running stack cost (at most N) kept in the
/// state and exposed on every letter. letters[i] describes letter i of pda.
struct MetaAutomaton {
    Pda pda;
    LetterCost lc;
    std::vector<MetaLetter> letters;
    std::vector<std::pair<StateId, std::uint64_t>> state_info;  // (source state, cost)
};

/// Only states reachable from (q0, 0) are built.
MetaAutomaton meta_automaton(const Pda& a, const StackPricing& c, std::uint64_t bound);

/// Is there an accepting run π with IASC(π, c) ⋈ λ.
Decision decide_iasc(const Pda& a, const StackPricing& c, const Threshold& th);
/// Same with SASC.
Decision decide_sasc(const Pda& a, const StackPricing& c, const Threshold& th);

Decision decide_asc(const Pda& a, const StackPricing& c, const Threshold& th, LimitMode mode);
/// With an explicit cost bound instead of cost_bound().
Decision decide_asc_with_bound(const Pda& a, const StackPricing& c, const Threshold& th, LimitMode mode,
                               std::uint64_t bound);

/// Throws ModelError unless every stack symbol has a price.
void require_pricing(const Pda& a, const StackPricing& c);

}  // namespace pdcost
