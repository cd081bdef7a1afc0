#pragma once

#include "pdcost/core.hpp"
#include "pdcost/grammar.hpp"
#include "pdcost/omega.hpp"

#include <map>
#include <optional>
#include <set>
#include <vector>

namespace pdcost {

/// Cost attached to each step: the letter read, or the stack cost of the
/// configuration entered.
struct StepCosts {
    enum class Rule { Letter, Stack } rule = Rule::Letter;
    LetterCost lc;
    StackPricing pricing;

    static StepCosts letters(LetterCost lc) { return {Rule::Letter, std::move(lc), {}}; }
    static StepCosts stack(StackPricing c) { return {Rule::Stack, {}, std::move(c)}; }
};

struct ConfigGraph {
    struct Edge {
        std::uint32_t from;
        std::uint32_t to;
        std::uint32_t transition;
        Rational cost;
    };
    std::vector<Configuration> vertices;  // last_letter unused
    std::vector<bool> accepting;
    std::vector<std::uint32_t> initial;
    std::vector<Edge> edges;
};

/// All configurations of height at most H reachable from the initial ones.
ConfigGraph bounded_config_graph(const Pda& a, const StepCosts& costs, std::size_t height);

/// Minimum over reachable strongly connected pieces holding an accepting
/// vertex and a cycle of the minimum mean cycle weight; +∞ when there is none.
ExtendedRational min_mean_buchi(const ConfigGraph& g);

using Word = std::vector<std::uint32_t>;

/// Words of length at most max_len accepted by a finite-word automaton.
std::set<Word> enumerate_words(const Pda& p, std::size_t max_len);
/// Words of length at most max_len derivable from the start symbol.
std::set<Word> enumerate_words(const Cfg& g, std::size_t max_len);

enum class OracleAnswer { Yes, No, Unknown };
std::string to_string(OracleAnswer a);

struct OracleResult {
    OracleAnswer answer = OracleAnswer::Unknown;
    ExtendedRational value;  // min_mean_buchi of the bounded graph
    bool complete = false;   // the bounded graph is the whole configuration space
};

/// YES when a lasso of height at most H meets the threshold; NO only when the
/// automaton never pushes (the bounded graph is then complete).
OracleResult oracle_decide(const Pda& a, const StepCosts& costs, const Threshold& th, LimitMode mode,
                           std::size_t height);

}  // namespace pdcost
