#pragma once

// Pop summaries of a pushdown automaton: the triples (p, X, r) such that from
// state p with X on top some run reaches r having popped exactly that X and
// never touched the cells below. Each triple also records whether such a run
// can enter an accepting state (the end state r included).

#include "pdcost/core.hpp"
#include "pdcost/grammar.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <unordered_map>
#include <vector>

namespace pdcost::detail {

struct Triple {
    StateId p;
    SymbolId x;
    StateId r;
    bool visit;  // some run for this triple enters an accepting state
};

class PopSummary {
public:
    explicit PopSummary(const Pda& pda);

    struct End {
        StateId r;
        std::uint32_t index;  // into triples()
    };

    const std::vector<Triple>& triples() const noexcept { return triples_; }
    const std::vector<End>& ends(StateId p, SymbolId x) const { return ends_[p * nsym_ + x]; }
    std::optional<std::uint32_t> find(StateId p, SymbolId x, StateId r) const;

private:
    std::size_t nsym_;
    std::vector<Triple> triples_;
    std::vector<std::vector<End>> ends_;
    std::unordered_map<std::uint64_t, std::uint32_t> index_;
};

/// Adds the productions of the pop-summary grammar to `g`: one nonterminal per
/// triple (ids returned, indexed like summary.triples()) plus helper
/// nonterminals for long push strings. Bodies have length at most 3 and there
/// are no unit or ε productions. Terminal ids are the automaton's letter ids.
/// `name` is called for each created nonterminal; it may return "".
struct TripleNaming {
    std::function<std::string(const Triple&)> triple;
    std::function<std::string(std::size_t transition, std::size_t level, StateId s, StateId r)> helper;
};

std::vector<NonterminalId> append_triple_grammar(const Pda& pda, const PopSummary& summary, Cfg& g,
                                                 const TripleNaming* naming = nullptr);

inline std::uint64_t pack3(std::uint64_t a, std::uint64_t b, std::uint64_t c) {
    return (a << 42) ^ (b << 21) ^ c;
}

}  // namespace pdcost::detail
