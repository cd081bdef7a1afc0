#pragma once

#include "pdcost/art.hpp"
#include "pdcost/core.hpp"
#include "pdcost/grammar.hpp"

#include <random>

namespace pdcost::test {

using Rng = std::mt19937_64;

int uniform(Rng& rng, int lo, int hi);  // inclusive
bool coin(Rng& rng, double p);

struct PdaShape {
    int max_states = 4;
    int max_transitions = 8;
    int letters = 2;
    int symbols = 0;     // 0 gives a finite-state automaton
    int max_push = 2;
    bool omega = true;
    bool all_accepting = false;
};

// Transitions leave states already reached by earlier ones, so most
// instances are connected.
Pda random_pda(Rng& rng, const PdaShape& shape);

LetterCost random_letter_cost(Rng& rng, std::size_t letters, int lo, int hi);
StackPricing random_pricing(Rng& rng, std::size_t symbols, int lo, int hi);

// Arbitrary bodies of length up to 3, ε allowed.
Cfg random_cfg(Rng& rng, int nonterminals, int terminals, int max_productions);
// A → B C and A → a only, then pruned; may come back empty.
Cfg random_cnf(Rng& rng, int nonterminals, int terminals, int max_productions);

Wps random_wps(Rng& rng, int max_states, int max_transitions, int symbols, int weight_lo, int weight_hi);

ClientServerSpec random_client_server(Rng& rng, int max_states, int max_transitions);

}  // namespace pdcost::test
