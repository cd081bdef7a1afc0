#include "pdcost/grammar.hpp"

#include "pdcost/detail/summary.hpp"
#include "pdcost/error.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_set>

namespace pdcost {

NonterminalId Cfg::add_nonterminal(std::string name) {
    nonterminals.push_back(std::move(name));
    return static_cast<NonterminalId>(nonterminals.size() - 1);
}

void Cfg::add(NonterminalId head, std::vector<GSymbol> body) {
    productions.push_back(Production{head, std::move(body)});
}

std::optional<NonterminalId> Cfg::find_nonterminal(std::string_view name) const {
    auto it = std::find(nonterminals.begin(), nonterminals.end(), name);
    if (it == nonterminals.end()) return std::nullopt;
    return static_cast<NonterminalId>(it - nonterminals.begin());
}

void require_well_formed(const Cfg& cfg) {
    if (cfg.start >= cfg.num_nonterminals()) throw ModelError("start symbol is not a nonterminal");
    for (const auto& p : cfg.productions) {
        if (p.head >= cfg.num_nonterminals()) throw ModelError("production head out of range");
        for (const auto& s : p.body) {
            if (s.terminal ? s.id >= cfg.num_terminals() : s.id >= cfg.num_nonterminals())
                throw ModelError("production body refers to an undeclared symbol");
        }
    }
}

namespace {

class NameSet {
public:
    explicit NameSet(const Cfg& g) : used_(g.nonterminals.begin(), g.nonterminals.end()) {}

    std::string fresh(std::string base) {
        while (used_.count(base)) base += '\'';
        used_.insert(base);
        return base;
    }

private:
    std::unordered_set<std::string> used_;
};

void dedupe(Cfg& g) {
    std::sort(g.productions.begin(), g.productions.end());
    g.productions.erase(std::unique(g.productions.begin(), g.productions.end()), g.productions.end());
}

std::vector<bool> reachable_nonterminals(const Cfg& g) {
    std::vector<std::vector<NonterminalId>> uses(g.num_nonterminals());
    for (const auto& p : g.productions)
        for (const auto& s : p.body)
            if (!s.terminal) uses[p.head].push_back(s.id);
    std::vector<bool> seen(g.num_nonterminals(), false);
    std::vector<NonterminalId> work{g.start};
    seen[g.start] = true;
    while (!work.empty()) {
        auto a = work.back();
        work.pop_back();
        for (auto b : uses[a])
            if (!seen[b]) {
                seen[b] = true;
                work.push_back(b);
            }
    }
    return seen;
}

/// Keeps the nonterminals flagged in `keep` (start always kept) and the
/// productions using only kept nonterminals; renumbers in original order.
Cfg restrict_to(const Cfg& g, const std::vector<bool>& keep) {
    Cfg out;
    out.terminals = g.terminals;
    std::vector<NonterminalId> map(g.num_nonterminals(), 0);
    for (NonterminalId a = 0; a < g.num_nonterminals(); ++a)
        if (keep[a] || a == g.start) map[a] = out.add_nonterminal(g.nonterminals[a]);
    out.start = map[g.start];
    for (const auto& p : g.productions) {
        if (!keep[p.head]) continue;
        bool ok = std::all_of(p.body.begin(), p.body.end(),
                              [&](const GSymbol& s) { return s.terminal || keep[s.id]; });
        if (!ok) continue;
        Production q{map[p.head], p.body};
        for (auto& s : q.body)
            if (!s.terminal) s.id = map[s.id];
        out.productions.push_back(std::move(q));
    }
    out.is_cnf = g.is_cnf;
    return out;
}

bool start_in_body(const Cfg& g) {
    for (const auto& p : g.productions)
        for (const auto& s : p.body)
            if (!s.terminal && s.id == g.start) return true;
    return false;
}

}  // namespace

std::vector<bool> productive_nonterminals(const Cfg& cfg) {
    const auto n = cfg.num_nonterminals();
    std::vector<bool> prod(n, false);
    // missing[i] counts the not-yet-productive nonterminal occurrences of
    // production i
    std::vector<std::size_t> missing(cfg.productions.size(), 0);
    std::vector<std::vector<std::size_t>> occurs(n);
    std::vector<NonterminalId> work;
    for (std::size_t i = 0; i < cfg.productions.size(); ++i) {
        for (const auto& s : cfg.productions[i].body)
            if (!s.terminal) {
                ++missing[i];
                occurs[s.id].push_back(i);
            }
        if (missing[i] == 0 && !prod[cfg.productions[i].head]) {
            prod[cfg.productions[i].head] = true;
            work.push_back(cfg.productions[i].head);
        }
    }
    while (!work.empty()) {
        auto a = work.back();
        work.pop_back();
        for (auto i : occurs[a]) {
            if (--missing[i] == 0) {
                auto h = cfg.productions[i].head;
                if (!prod[h]) {
                    prod[h] = true;
                    work.push_back(h);
                }
            }
        }
    }
    return prod;
}

bool cfg_nonempty(const Cfg& cfg) {
    require_well_formed(cfg);
    return productive_nonterminals(cfg)[cfg.start];
}

Cfg prune(const Cfg& cfg) {
    require_well_formed(cfg);
    auto prod = productive_nonterminals(cfg);
    if (!prod[cfg.start]) {
        Cfg out;
        out.terminals = cfg.terminals;
        out.start = out.add_nonterminal(cfg.nonterminals[cfg.start]);
        out.is_cnf = true;
        out.is_pruned = true;
        return out;
    }
    Cfg g = restrict_to(cfg, prod);
    Cfg out = restrict_to(g, reachable_nonterminals(g));
    dedupe(out);
    out.is_pruned = true;
    return out;
}

bool satisfies_cnf(const Cfg& cfg) {
    bool start_used = start_in_body(cfg);
    for (const auto& p : cfg.productions) {
        const auto& b = p.body;
        if (b.empty()) {
            if (p.head != cfg.start || start_used) return false;
        } else if (b.size() == 1) {
            if (!b[0].terminal) return false;
        } else if (b.size() == 2) {
            if (b[0].terminal || b[1].terminal) return false;
        } else {
            return false;
        }
    }
    return true;
}

bool satisfies_pruned(const Cfg& cfg) {
    if (cfg.productions.empty()) return cfg.num_nonterminals() == 1;
    auto prod = productive_nonterminals(cfg);
    auto reach = reachable_nonterminals(cfg);
    for (NonterminalId a = 0; a < cfg.num_nonterminals(); ++a)
        if (!prod[a] || !reach[a]) return false;
    return true;
}

Cfg to_cnf(const Cfg& input) {
    require_well_formed(input);
    Cfg g = input;
    NameSet names(g);

    // fresh start symbol if the old one occurs in a body
    if (start_in_body(g)) {
        NonterminalId s = g.add_nonterminal(names.fresh(g.nonterminals[g.start] + "0"));
        g.add(s, {GSymbol::n(g.start)});
        g.start = s;
    }

    // terminals inside long bodies get their own nonterminal
    std::map<TerminalId, NonterminalId> term_nt;
    const std::size_t original = g.productions.size();
    for (std::size_t i = 0; i < original; ++i) {
        if (g.productions[i].body.size() < 2) continue;
        for (auto& s : g.productions[i].body) {
            if (!s.terminal) continue;
            auto it = term_nt.find(s.id);
            if (it == term_nt.end()) {
                NonterminalId x = g.add_nonterminal(names.fresh("<" + g.terminals[s.id] + ">"));
                it = term_nt.emplace(s.id, x).first;
            }
            s = GSymbol::n(it->second);
        }
    }
    for (auto [t, x] : term_nt) g.add(x, {GSymbol::t(t)});

    // binarize
    std::vector<Production> binary;
    for (std::size_t i = 0; i < g.productions.size(); ++i) {
        Production p = g.productions[i];
        if (p.body.size() <= 2) {
            binary.push_back(std::move(p));
            continue;
        }
        NonterminalId head = p.head;
        for (std::size_t j = 0; j + 2 < p.body.size(); ++j) {
            NonterminalId rest = g.add_nonterminal(
                names.fresh(g.nonterminals[p.head] + "." + std::to_string(i) + "." + std::to_string(j + 1)));
            binary.push_back(Production{head, {p.body[j], GSymbol::n(rest)}});
            head = rest;
        }
        binary.push_back(Production{head, {p.body[p.body.size() - 2], p.body.back()}});
    }
    g.productions = std::move(binary);

    // ε elimination
    const auto n = g.num_nonterminals();
    std::vector<bool> nullable(n, false);
    for (bool changed = true; changed;) {
        changed = false;
        for (const auto& p : g.productions) {
            if (nullable[p.head]) continue;
            bool all = std::all_of(p.body.begin(), p.body.end(),
                                   [&](const GSymbol& s) { return !s.terminal && nullable[s.id]; });
            if (all) {
                nullable[p.head] = true;
                changed = true;
            }
        }
    }
    std::vector<Production> no_eps;
    for (const auto& p : g.productions) {
        if (p.body.empty()) continue;
        no_eps.push_back(p);
        if (p.body.size() == 2) {
            const auto& b = p.body;
            if (!b[0].terminal && nullable[b[0].id]) no_eps.push_back(Production{p.head, {b[1]}});
            if (!b[1].terminal && nullable[b[1].id]) no_eps.push_back(Production{p.head, {b[0]}});
        }
    }

    // unit elimination: A gets every non-unit body of each B with A ⇒* B
    std::vector<std::vector<NonterminalId>> unit(n);
    for (const auto& p : no_eps)
        if (p.body.size() == 1 && !p.body[0].terminal) unit[p.head].push_back(p.body[0].id);
    std::vector<std::vector<const Production*>> by_head(n);
    for (const auto& p : no_eps)
        if (!(p.body.size() == 1 && !p.body[0].terminal)) by_head[p.head].push_back(&p);
    std::vector<Production> out;
    for (NonterminalId a = 0; a < n; ++a) {
        std::vector<bool> seen(n, false);
        std::vector<NonterminalId> work{a};
        seen[a] = true;
        while (!work.empty()) {
            auto b = work.back();
            work.pop_back();
            for (const auto* p : by_head[b]) out.push_back(Production{a, p->body});
            for (auto c : unit[b])
                if (!seen[c]) {
                    seen[c] = true;
                    work.push_back(c);
                }
        }
    }
    if (nullable[g.start]) out.push_back(Production{g.start, {}});
    g.productions = std::move(out);
    dedupe(g);
    g.is_cnf = true;
    g.is_pruned = false;
    return g;
}

Cfg without_epsilon(const Cfg& cfg) {
    Cfg g = satisfies_cnf(cfg) ? cfg : to_cnf(cfg);
    std::erase_if(g.productions, [&](const Production& p) { return p.body.empty(); });
    g = prune(g);
    g.is_cnf = true;
    return g;
}

namespace {

enum class PumpKind { Pair, Left };

Cfg pump_grammar(const Cfg& cfg, NonterminalId a, PumpKind kind) {
    require_well_formed(cfg);
    if (a >= cfg.num_nonterminals()) throw PreconditionError("nonterminal not in grammar");
    if (!satisfies_cnf(cfg)) throw PreconditionError("pump grammar needs a grammar in Chomsky normal form");
    if (!satisfies_pruned(cfg)) throw PreconditionError("pump grammar needs a pruned grammar");

    const auto n = static_cast<NonterminalId>(cfg.num_nonterminals());
    Cfg h;
    h.terminals = cfg.terminals;
    h.nonterminals = cfg.nonterminals;
    NameSet names(h);
    for (NonterminalId b = 0; b < n; ++b) h.add_nonterminal(names.fresh("Z[" + cfg.nonterminals[b] + "]"));
    auto z = [n](NonterminalId b) { return GSymbol::n(n + b); };
    h.start = h.add_nonterminal(names.fresh("Pump[" + cfg.nonterminals[a] + "]"));
    for (const auto& p : cfg.productions) h.productions.push_back(p);

    auto spine_steps = [&](NonterminalId head_sym, const Production& p) {
        GSymbol c = p.body[0], d = p.body[1];
        h.add(head_sym, {c, z(d.id)});
        if (kind == PumpKind::Pair)
            h.add(head_sym, {z(c.id), d});
        else
            h.add(head_sym, {z(c.id)});
    };
    for (const auto& p : cfg.productions) {
        if (p.body.size() != 2) continue;
        spine_steps(n + p.head, p);
        if (p.head == a) spine_steps(h.start, p);
    }
    h.add(n + a, {});
    return without_epsilon(to_cnf(h));
}

}  // namespace

Cfg pump_grammar_pair(const Cfg& cfg, NonterminalId a) { return pump_grammar(cfg, a, PumpKind::Pair); }
Cfg pump_grammar_left(const Cfg& cfg, NonterminalId a) { return pump_grammar(cfg, a, PumpKind::Left); }

Cfg pda_to_cfg(const Pda& pda) {
    require_valid(pda);
    if (pda.omega) throw PreconditionError("pda_to_cfg needs a finite-word automaton");
    Cfg g;
    g.terminals = pda.input_alphabet;
    g.start = g.add_nonterminal("S");

    detail::PopSummary summary(pda);
    detail::TripleNaming naming{
        [&](const detail::Triple& t) {
            return "T[" + pda.states[t.p] + "," + pda.symbol_name(t.x) + "," + pda.states[t.r] + "]";
        },
        [&](std::size_t t, std::size_t l, StateId s, StateId r) {
            return "H[" + std::to_string(t) + "," + std::to_string(l) + "," + pda.states[s] + "," +
                   pda.states[r] + "]";
        }};
    auto triple_nt = detail::append_triple_grammar(pda, summary, g, &naming);

    const std::size_t nsym = pda.num_symbols();
    auto xi = [nsym](SymbolId x) { return x == kBottom ? nsym : x; };
    std::vector<NonterminalId> acc(pda.num_states() * (nsym + 1));
    for (StateId p = 0; p < pda.num_states(); ++p)
        for (std::size_t x = 0; x <= nsym; ++x)
            acc[p * (nsym + 1) + x] = g.add_nonterminal(
                "A[" + pda.states[p] + "," + pda.symbol_name(x == nsym ? kBottom : SymbolId(x)) + "]");
    auto A = [&](StateId p, SymbolId x) { return GSymbol::n(acc[p * (nsym + 1) + xi(x)]); };

    // C[t,l,s]: after t, in state s with y_1..y_l of its push still on the stack
    std::map<std::tuple<std::size_t, std::size_t, StateId>, NonterminalId> chain;
    std::function<NonterminalId(std::size_t, std::size_t, StateId)> C = [&](std::size_t ti, std::size_t l,
                                                                             StateId s) -> NonterminalId {
        auto key = std::make_tuple(ti, l, s);
        if (auto it = chain.find(key); it != chain.end()) return it->second;
        NonterminalId c = g.add_nonterminal("C[" + std::to_string(ti) + "," + std::to_string(l) + "," +
                                            pda.states[s] + "]");
        chain.emplace(key, c);
        const auto& t = pda.transitions[ti];
        SymbolId y = t.push[l - 1];
        g.add(c, {A(s, y)});
        for (const auto& e : summary.ends(s, y)) {
            if (l >= 2)
                g.add(c, {GSymbol::n(triple_nt[e.index]), GSymbol::n(C(ti, l - 1, e.r))});
            else if (t.reads_bottom())
                g.add(c, {GSymbol::n(triple_nt[e.index]), A(e.r, kBottom)});
        }
        return c;
    };

    const auto accepting = pda.accepting_mask();
    for (StateId p = 0; p < pda.num_states(); ++p) {
        if (!accepting[p]) continue;
        for (std::size_t x = 0; x <= nsym; ++x) g.add(acc[p * (nsym + 1) + x], {});
    }
    for (std::size_t ti = 0; ti < pda.transitions.size(); ++ti) {
        const auto& t = pda.transitions[ti];
        GSymbol a = GSymbol::t(t.letter);
        if (t.push.empty()) {
            if (t.reads_bottom()) g.add(A(t.from, kBottom).id, {a, A(t.to, kBottom)});
            continue;
        }
        g.add(A(t.from, t.top).id, {a, GSymbol::n(C(ti, t.push.size(), t.to))});
    }
    for (StateId q : pda.initial_states) g.add(g.start, {A(q, kBottom)});
    dedupe(g);
    return g;
}

std::string to_string(const Cfg& cfg) {
    std::string out;
    for (const auto& p : cfg.productions) {
        out += cfg.nonterminals[p.head] + " ->";
        if (p.body.empty()) out += " -";
        for (const auto& s : p.body) {
            out += ' ';
            out += s.terminal ? cfg.terminals[s.id] : cfg.nonterminals[s.id];
        }
        out += '\n';
    }
    return out;
}

}  // namespace pdcost
