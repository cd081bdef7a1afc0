#pragma once

// Slow reference computations used only to check the library.

#include "pdcost/core.hpp"
#include "pdcost/grammar.hpp"
#include "pdcost/oracle.hpp"

#include <optional>
#include <set>
#include <vector>

namespace pdcost::test {

using WordSet = std::set<Word>;

// Words of length <= max_len derivable from every nonterminal (least fixpoint
// over the productions, so ε and unit rules are fine).
std::vector<WordSet> derivable_words(const Cfg& g, std::size_t max_len);

// CYK membership for a grammar satisfying satisfies_cnf.
bool cyk(const Cfg& cnf, const Word& w);

// Words of length <= max_len accepted by a finite-word automaton, by a plain
// search over sets of configurations.
WordSet accepted_words(const Pda& p, std::size_t max_len);

// Cheapest derivation tree of height <= h per nonterminal (a leaf rule A -> a
// has height 1); nullopt when no such tree exists.
std::vector<std::optional<Rational>> tree_minima(const Cfg& g, const LetterCost& lc, int h);

// Looks for A =>+ uL A uR with lc(uL uR) < 0 among contexts of height <= max_height.
bool negative_pump(const Cfg& g, const LetterCost& lc, int max_height);

// { uL uR : a =>+ uL a uR }, |uL uR| <= max_len, ε left out. Pruned grammars only.
WordSet pump_pairs(const Cfg& g, NonterminalId a, std::size_t max_len);
// { uL : a =>+ uL a uR for some uR }, |uL| <= max_len, ε left out. Pruned grammars only.
WordSet pump_lefts(const Cfg& g, NonterminalId a, std::size_t max_len);

// Minimum mean weight over simple cycles lying in a strongly connected piece
// reachable from an initial vertex and holding an accepting vertex.
ExtendedRational simple_cycle_min_mean(const ConfigGraph& g);

// Configurations reachable from the initial ones reading w (stack height capped).
std::vector<Configuration> configurations_after(const Pda& a, const Word& w, std::size_t height_cap = 40);

// Can u be read from c, coming back to exactly c and visiting an accepting
// state on the way (the state after some step is accepting)?
bool loops_back(const Pda& a, const Configuration& c, const Word& u, std::size_t height_cap = 40);
// Reading u from c keeps c's top cell in place (possibly rewritten), ends in c's state with c's top
// symbol, and visits an accepting state.
bool repeats_on_top(const Pda& a, const Configuration& c, const Word& u, std::size_t height_cap = 40);

}  // namespace pdcost::test
