#include "pdcost/oracle.hpp"

#include "pdcost/detail/graph.hpp"
#include "pdcost/error.hpp"

#include <algorithm>
#include <deque>

namespace pdcost {

std::string to_string(OracleAnswer a) {
    switch (a) {
    case OracleAnswer::Yes: return "YES";
    case OracleAnswer::No: return "NO";
    case OracleAnswer::Unknown: return "UNKNOWN";
    }
    return "?";
}

ConfigGraph bounded_config_graph(const Pda& a, const StepCosts& costs, std::size_t height) {
    require_valid(a);
    if (costs.rule == StepCosts::Rule::Letter && costs.lc.size() < a.num_letters())
        throw ModelError("letter cost missing for some letter");
    ConfigGraph g;
    std::map<std::pair<StateId, std::vector<SymbolId>>, std::uint32_t> ids;
    std::deque<std::uint32_t> work;
    const auto accepting = a.accepting_mask();
    auto vertex = [&](StateId q, const std::vector<SymbolId>& stack) {
        auto [it, inserted] = ids.try_emplace({q, stack}, static_cast<std::uint32_t>(g.vertices.size()));
        if (inserted) {
            g.vertices.push_back(Configuration{q, stack, std::nullopt});
            g.accepting.push_back(accepting[q]);
            work.push_back(it->second);
        }
        return it->second;
    };
    for (StateId q0 : a.initial_states) g.initial.push_back(vertex(q0, {}));
    while (!work.empty()) {
        auto u = work.front();
        work.pop_front();
        for (std::uint32_t i = 0; i < a.transitions.size(); ++i) {
            const auto& t = a.transitions[i];
            Configuration cur = g.vertices[u];
            if (!applicable(cur, t)) continue;
            Configuration next = step(cur, t);
            if (next.stack.size() > height) continue;
            auto v = vertex(next.state, next.stack);
            Rational cost = costs.rule == StepCosts::Rule::Letter
                                ? costs.lc[t.letter]
                                : Rational(Integer(std::to_string(stack_cost(costs.pricing, next))));
            g.edges.push_back(ConfigGraph::Edge{u, v, i, cost});
        }
    }
    return g;
}

namespace {

// Karp: for a strongly connected vertex set with source s, the minimum cycle
// mean is min_v max_k (D_n(v) − D_k(v)) / (n − k).
ExtendedRational karp(const std::vector<std::uint32_t>& verts, const std::vector<const ConfigGraph::Edge*>& edges,
                      const std::vector<std::uint32_t>& local) {
    const std::size_t n = verts.size();
    std::vector<std::vector<std::optional<Rational>>> d(n + 1, std::vector<std::optional<Rational>>(n));
    d[0][0] = Rational(0);
    for (std::size_t k = 1; k <= n; ++k) {
        for (const auto* e : edges) {
            const auto& prev = d[k - 1][local[e->from]];
            if (!prev) continue;
            Rational cand = *prev + e->cost;
            auto& cur = d[k][local[e->to]];
            if (!cur || cand < *cur) cur = cand;
        }
    }
    std::optional<Rational> best;
    for (std::size_t v = 0; v < n; ++v) {
        if (!d[n][v]) continue;
        std::optional<Rational> worst;
        for (std::size_t k = 0; k < n; ++k) {
            if (!d[k][v]) continue;
            Rational m = (*d[n][v] - *d[k][v]) / Rational(static_cast<long>(n - k));
            if (!worst || m > *worst) worst = m;
        }
        if (worst && (!best || *worst < *best)) best = worst;
    }
    if (!best) return ExtendedRational::pos_infinity();
    return ExtendedRational(*best);
}

}  // namespace

ExtendedRational min_mean_buchi(const ConfigGraph& g) {
    const auto n = g.vertices.size();
    detail::Adjacency adj(n);
    for (const auto& e : g.edges) adj[e.from].push_back(e.to);
    auto reach = detail::reachable_from(adj, g.initial);
    auto sccs = detail::strongly_connected(adj);

    std::vector<std::vector<std::uint32_t>> members(sccs.count);
    std::vector<std::vector<const ConfigGraph::Edge*>> inner(sccs.count);
    for (std::uint32_t v = 0; v < n; ++v)
        if (reach[v]) members[sccs.comp[v]].push_back(v);
    for (const auto& e : g.edges)
        if (reach[e.from] && sccs.comp[e.from] == sccs.comp[e.to]) inner[sccs.comp[e.from]].push_back(&e);

    ExtendedRational best = ExtendedRational::pos_infinity();
    std::vector<std::uint32_t> local(n, 0);
    for (std::uint32_t c = 0; c < sccs.count; ++c) {
        if (inner[c].empty()) continue;
        bool acc = std::any_of(members[c].begin(), members[c].end(), [&](auto v) { return g.accepting[v]; });
        if (!acc) continue;
        for (std::uint32_t i = 0; i < members[c].size(); ++i) local[members[c][i]] = i;
        auto m = karp(members[c], inner[c], local);
        if (m < best) best = m;
    }
    return best;
}

std::set<Word> enumerate_words(const Pda& p, std::size_t max_len) {
    require_valid(p);
    const auto accepting = p.accepting_mask();
    using Conf = std::pair<StateId, std::vector<SymbolId>>;
    std::map<Word, std::set<Conf>> layer;
    for (StateId q : p.initial_states) layer[{}].insert({q, {}});
    std::set<Word> out;
    for (std::size_t len = 0;; ++len) {
        for (const auto& [w, confs] : layer)
            for (const auto& c : confs)
                if (accepting[c.first]) {
                    out.insert(w);
                    break;
                }
        if (len == max_len) break;
        std::map<Word, std::set<Conf>> next;
        for (const auto& [w, confs] : layer) {
            for (const auto& [q, stack] : confs) {
                Configuration cur{q, stack, std::nullopt};
                for (const auto& t : p.transitions) {
                    if (!applicable(cur, t)) continue;
                    Configuration nc = step(cur, t);
                    Word w2 = w;
                    w2.push_back(t.letter);
                    next[w2].insert({nc.state, nc.stack});
                }
            }
        }
        layer = std::move(next);
    }
    return out;
}

std::set<Word> enumerate_words(const Cfg& g, std::size_t max_len) {
    require_well_formed(g);
    std::vector<std::set<Word>> lang(g.num_nonterminals());
    for (bool changed = true; changed;) {
        changed = false;
        for (const auto& p : g.productions) {
            // all concatenations of body languages within the length bound
            std::set<Word> partial{Word{}};
            for (const auto& s : p.body) {
                std::set<Word> grown;
                for (const auto& x : partial) {
                    if (s.terminal) {
                        if (x.size() + 1 > max_len) continue;
                        Word y = x;
                        y.push_back(s.id);
                        grown.insert(std::move(y));
                    } else {
                        for (const auto& z : lang[s.id]) {
                            if (x.size() + z.size() > max_len) continue;
                            Word y = x;
                            y.insert(y.end(), z.begin(), z.end());
                            grown.insert(std::move(y));
                        }
                    }
                }
                partial = std::move(grown);
                if (partial.empty()) break;
            }
            for (auto& w : partial)
                if (lang[p.head].insert(w).second) changed = true;
        }
    }
    return lang[g.start];
}

OracleResult oracle_decide(const Pda& a, const StepCosts& costs, const Threshold& th, LimitMode mode,
                           std::size_t height) {
    (void)mode;  // on a finite graph liminf and limsup optima coincide
    if (!a.omega) throw PreconditionError("expected an automaton over infinite words");
    OracleResult r;
    r.complete = std::all_of(a.transitions.begin(), a.transitions.end(),
                             [](const Transition& t) { return t.push.empty(); });
    r.value = min_mean_buchi(bounded_config_graph(a, costs, height));
    if (th.holds(r.value))
        r.answer = OracleAnswer::Yes;
    else
        r.answer = r.complete ? OracleAnswer::No : OracleAnswer::Unknown;
    return r;
}

}  // namespace pdcost
