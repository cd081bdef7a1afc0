#pragma once

// Infimum of the terminal-cost sum over the words derivable from each
// nonterminal, with −∞ for nonterminals that can pump below any bound.
// Works on arbitrary bodies (ε and unit productions included).

#include "pdcost/detail/graph.hpp"
#include "pdcost/detail/num.hpp"
#include "pdcost/grammar.hpp"

#include <vector>

namespace pdcost::detail {

template <class Num>
Ext<Num> body_cost(const Production& p, const std::vector<Num>& term, const std::vector<Ext<Num>>& val) {
    Ext<Num> sum = Ext<Num>::fin(Num{});
    for (const auto& s : p.body) {
        sum = sum + (s.terminal ? Ext<Num>::fin(term[s.id]) : val[s.id]);
        if (sum.is_pos()) break;
    }
    return sum;
}

/// Relaxation rounds per strongly connected component of the dependency
/// graph, callee components first. A component still changing in round
/// |component|+1, or depending on a −∞ value, is −∞ as a whole.
template <class Num>
std::vector<Ext<Num>> min_costs(const Cfg& g, const std::vector<Num>& term) {
    const auto n = g.num_nonterminals();
    std::vector<Ext<Num>> val(n, Ext<Num>::pos());
    auto prod = productive_nonterminals(g);

    std::vector<std::vector<std::uint32_t>> rules_of(n);
    Adjacency dep(n);
    for (std::uint32_t i = 0; i < g.productions.size(); ++i) {
        const auto& p = g.productions[i];
        if (!prod[p.head]) continue;
        bool ok = true;
        for (const auto& s : p.body)
            if (!s.terminal && !prod[s.id]) ok = false;
        if (!ok) continue;
        rules_of[p.head].push_back(i);
        for (const auto& s : p.body)
            if (!s.terminal) dep[p.head].push_back(s.id);
    }
    Sccs sccs = strongly_connected(dep);
    std::vector<std::vector<std::uint32_t>> members(sccs.count);
    for (std::uint32_t a = 0; a < n; ++a)
        if (prod[a]) members[sccs.comp[a]].push_back(a);

    for (std::uint32_t c = 0; c < sccs.count; ++c) {
        const auto& mem = members[c];
        if (mem.empty()) continue;
        auto inside = [&](const Production& p) {
            for (const auto& s : p.body)
                if (!s.terminal && sccs.comp[s.id] == c) return true;
            return false;
        };
        bool minus_inf = false;
        for (auto a : mem)
            for (auto i : rules_of[a]) {
                const auto& p = g.productions[i];
                if (inside(p)) continue;
                auto v = body_cost(p, term, val);
                if (v < val[a]) val[a] = v;
                if (v.is_neg()) minus_inf = true;
            }
        bool changed = false;
        for (std::size_t round = 0; round <= mem.size() && !minus_inf; ++round) {
            changed = false;
            for (auto a : mem)
                for (auto i : rules_of[a]) {
                    const auto& p = g.productions[i];
                    if (!inside(p)) continue;
                    auto v = body_cost(p, term, val);
                    if (v < val[a]) {
                        val[a] = v;
                        changed = true;
                        if (v.is_neg()) minus_inf = true;
                    }
                }
        }
        if (changed || minus_inf)
            for (auto a : mem) val[a] = Ext<Num>::neg();
    }
    return val;
}

}  // namespace pdcost::detail
