#pragma once

#include "pdcost/core.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace pdcost {

using NonterminalId = std::uint32_t;
using TerminalId = std::uint32_t;

struct GSymbol {
    bool terminal = false;
    std::uint32_t id = 0;

    static GSymbol t(TerminalId id) { return {true, id}; }
    static GSymbol n(NonterminalId id) { return {false, id}; }

    friend bool operator==(const GSymbol&, const GSymbol&) = default;
    friend auto operator<=>(const GSymbol&, const GSymbol&) = default;
};

struct Production {
    NonterminalId head = 0;
    std::vector<GSymbol> body;  // empty body is ε

    friend bool operator==(const Production&, const Production&) = default;
    friend auto operator<=>(const Production&, const Production&) = default;
};

/// G = (Σ, V, S, P). Terminal ids coincide with the letter ids of the
/// automaton the grammar came from, so letter costs apply unchanged.
struct Cfg {
    std::vector<std::string> terminals;
    std::vector<std::string> nonterminals;
    NonterminalId start = 0;
    std::vector<Production> productions;
    bool is_cnf = false;
    bool is_pruned = false;

    std::size_t num_terminals() const noexcept { return terminals.size(); }
    std::size_t num_nonterminals() const noexcept { return nonterminals.size(); }

    NonterminalId add_nonterminal(std::string name);
    void add(NonterminalId head, std::vector<GSymbol> body);
    std::optional<NonterminalId> find_nonterminal(std::string_view name) const;

    friend bool operator==(const Cfg&, const Cfg&) = default;
};

/// Throws ModelError on out-of-range symbols or start.
void require_well_formed(const Cfg& cfg);

/// Grammar of the finite-word language (acceptance by final state, any stack).
Cfg pda_to_cfg(const Pda& pda);

/// Chomsky normal form with the same language. S → ε is kept only for the
/// start symbol, which then occurs in no body.
Cfg to_cnf(const Cfg& cfg);

/// Drops non-productive, then unreachable nonterminals. An empty language
/// leaves only the start symbol and no productions.
Cfg prune(const Cfg& cfg);

bool cfg_nonempty(const Cfg& cfg);

/// Nonterminals deriving at least one terminal word.
std::vector<bool> productive_nonterminals(const Cfg& cfg);

/// Structural CNF check (does not trust the flag).
bool satisfies_cnf(const Cfg& cfg);
/// Every nonterminal productive and reachable (does not trust the flag).
bool satisfies_pruned(const Cfg& cfg);

/// { u_L u_R : A ⇒⁺ u_L A u_R }, ε removed. Requires a CNF, pruned grammar.
Cfg pump_grammar_pair(const Cfg& cfg, NonterminalId a);

/// { u_L : A ⇒⁺ u_L A u_R for some u_R }, ε removed. Same precondition.
Cfg pump_grammar_left(const Cfg& cfg, NonterminalId a);

/// Removes the S → ε production if present (language minus ε).
Cfg without_epsilon(const Cfg& cfg);

std::string to_string(const Cfg& cfg);

}  // namespace pdcost
