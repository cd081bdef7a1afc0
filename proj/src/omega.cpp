#include "pdcost/omega.hpp"

#include "pdcost/avglc.hpp"
#include "pdcost/detail/graph.hpp"
#include "pdcost/detail/relax.hpp"
#include "pdcost/detail/summary.hpp"
#include "pdcost/error.hpp"
#include "pdcost/grammar.hpp"
#include "pdcost/mincost.hpp"

#include <limits>
#include <unordered_map>

namespace pdcost {

std::string to_string(LimitMode m) { return m == LimitMode::Inf ? "inf" : "sup"; }

namespace {

void require_omega(const Pda& a) {
    require_valid(a);
    if (!a.omega) throw PreconditionError("expected an automaton over infinite words");
}

std::vector<std::string> flagged_names(const Pda& a, const std::vector<std::string>& tops, bool with_flag) {
    std::vector<std::string> out;
    for (const auto& p : a.states)
        for (const auto& t : tops) {
            if (with_flag) {
                out.push_back(p + "|" + t + "|0");
                out.push_back(p + "|" + t + "|1");
            } else {
                out.push_back(p + "|" + t);
            }
        }
    return out;
}

// Recognizer over the cells below the tracked top, top symbol in the state.
// Used for the prefix languages and for the empty-stack loops.
Pda top_in_control(const Pda& a, bool loop) {
    const std::size_t nsym = a.num_symbols();
    const std::size_t ntop = nsym + 1;  // index nsym stands for ⊥
    std::vector<std::string> tops = a.stack_alphabet;
    tops.push_back("_");
    const auto accepting = a.accepting_mask();

    Pda r;
    r.input_alphabet = a.input_alphabet;
    r.stack_alphabet = a.stack_alphabet;
    r.states = flagged_names(a, tops, loop);
    const std::size_t width = loop ? 2 : 1;
    auto id = [&](StateId p, std::size_t top, bool f) {
        return static_cast<StateId>((p * ntop + top) * width + (loop && f ? 1 : 0));
    };
    auto ti = [&](SymbolId x) { return x == kBottom ? nsym : std::size_t(x); };

    for (const auto& t : a.transitions) {
        const std::size_t k = t.push.size();
        for (bool f : {false, true}) {
            if (!loop && f) continue;
            const bool f2 = loop && (f || accepting[t.to]);
            auto add = [&](SymbolId rec_top, std::size_t new_top, std::vector<SymbolId> push) {
                r.transitions.push_back(Transition{id(t.from, ti(t.top), f), t.letter, rec_top,
                                                   id(t.to, new_top, f2), std::move(push)});
            };
            if (t.reads_bottom()) {
                if (k == 0)
                    add(kBottom, nsym, {});
                else
                    add(kBottom, t.push[k - 1], {t.push.begin(), t.push.end() - 1});
                continue;
            }
            for (std::size_t z = 0; z <= nsym; ++z) {
                SymbolId zs = z == nsym ? kBottom : SymbolId(z);
                if (k == 0) {
                    add(zs, z, {});
                } else {
                    std::vector<SymbolId> push;
                    if (zs != kBottom) push.push_back(zs);
                    push.insert(push.end(), t.push.begin(), t.push.end() - 1);
                    add(zs, t.push[k - 1], std::move(push));
                }
            }
        }
    }
    return r;
}

}  // namespace

Pda prefix_recognizer(const Pda& a, StateId q, SymbolId gamma) {
    require_omega(a);
    if (q >= a.num_states() || (gamma != kBottom && gamma >= a.num_symbols()))
        throw PreconditionError("factor pair out of range");
    Pda r = top_in_control(a, false);
    const std::size_t ntop = a.num_symbols() + 1;
    for (StateId q0 : a.initial_states) r.initial_states.push_back(static_cast<StateId>(q0 * ntop + a.num_symbols()));
    std::size_t g = gamma == kBottom ? a.num_symbols() : gamma;
    r.accepting_states.push_back(static_cast<StateId>(q * ntop + g));
    return r;
}

Pda loop_recognizer(const Pda& a, StateId q, SymbolId gamma) {
    require_omega(a);
    if (q >= a.num_states() || (gamma != kBottom && gamma >= a.num_symbols()))
        throw PreconditionError("factor pair out of range");
    const std::size_t nsym = a.num_symbols();
    if (gamma == kBottom) {
        Pda r = top_in_control(a, true);
        const std::size_t ntop = nsym + 1;
        r.initial_states.push_back(static_cast<StateId>((q * ntop + nsym) * 2));
        r.accepting_states.push_back(static_cast<StateId>((q * ntop + nsym) * 2 + 1));
        return r;
    }

    // Relative stack above a protected base cell. Control tracks the top;
    // symbols nsym + y mark the base cell (hat copies).
    const std::size_t ntop = 2 * nsym;
    const auto accepting = a.accepting_mask();
    Pda r;
    r.input_alphabet = a.input_alphabet;
    r.stack_alphabet = a.stack_alphabet;
    for (const auto& s : a.stack_alphabet) r.stack_alphabet.push_back("^" + s);
    r.states = flagged_names(a, r.stack_alphabet, true);
    auto id = [&](StateId p, std::size_t top, bool f) {
        return static_cast<StateId>((p * ntop + top) * 2 + (f ? 1 : 0));
    };
    for (const auto& t : a.transitions) {
        if (t.reads_bottom()) continue;
        const std::size_t k = t.push.size();
        for (bool f : {false, true}) {
            const bool f2 = f || accepting[t.to];
            // top is an ordinary cell: the recognizer's own top is the cell below
            for (std::size_t z = 0; z < ntop; ++z) {
                Transition u{id(t.from, t.top, f), t.letter, SymbolId(z), 0, {}};
                if (k == 0) {
                    u.to = id(t.to, z, f2);
                } else {
                    u.push.push_back(SymbolId(z));
                    u.push.insert(u.push.end(), t.push.begin(), t.push.end() - 1);
                    u.to = id(t.to, t.push[k - 1], f2);
                }
                r.transitions.push_back(std::move(u));
            }
            // top is the protected base: it may be rewritten, never popped
            if (k == 0) continue;
            Transition u{id(t.from, nsym + t.top, f), t.letter, kBottom, 0, {}};
            if (k == 1) {
                u.to = id(t.to, nsym + t.push[0], f2);
            } else {
                u.push.push_back(SymbolId(nsym + t.push[0]));
                u.push.insert(u.push.end(), t.push.begin() + 1, t.push.end() - 1);
                u.to = id(t.to, t.push[k - 1], f2);
            }
            r.transitions.push_back(std::move(u));
        }
    }
    r.initial_states.push_back(id(q, nsym + gamma, false));
    r.accepting_states.push_back(id(q, gamma, true));
    r.accepting_states.push_back(id(q, nsym + gamma, true));
    return r;
}

Factorization factorize(const Pda& a) {
    require_omega(a);
    Factorization fac;
    for (StateId q = 0; q < a.num_states(); ++q) {
        for (std::size_t g = 0; g <= a.num_symbols(); ++g) {
            SymbolId gamma = g == a.num_symbols() ? kBottom : SymbolId(g);
            Pda v = prefix_recognizer(a, q, gamma);
            if (!cfg_nonempty(pda_to_cfg(v))) continue;
            Pda u = loop_recognizer(a, q, gamma);
            if (!cfg_nonempty(pda_to_cfg(u))) continue;
            fac.components.push_back(FactorComponent{q, gamma, std::move(v), std::move(u)});
        }
    }
    return fac;
}

namespace {

// Decision engine on the pop summary. Heads (p, X) stand for a configuration
// whose top cell X is never popped again while the walk stays at or above it;
// closed walks through heads are exactly the loop words of the factorization.
template <class Num>
class Engine {
public:
    Engine(const Pda& a, const detail::PopSummary& summary, const std::vector<Num>& letter)
        : a_(a), summary_(summary), letter_(letter), nsym_(a.num_symbols()) {}

    bool decide(bool strict, LimitMode mode) {
        grammar_values();
        build_head_graph();
        auto sccs = detail::strongly_connected(adj_);
        auto flags = detail::cycle_flags<Num>(nodes_.size(), edges_, sccs);
        std::vector<char> accepting(sccs.count, 0);
        for (std::size_t i = 0; i < edges_.size(); ++i)
            if (visit_[i] && sccs.comp[edges_[i].from] == sccs.comp[edges_[i].to])
                accepting[sccs.comp[edges_[i].from]] = 1;

        for (std::uint32_t c = 0; c < sccs.count; ++c) {
            if (!accepting[c]) continue;
            if (strict ? flags[c].has_negative : flags[c].has_nonpositive) return true;
        }
        if (strict && mode == LimitMode::Sup) return false;

        // pumps inside the summaries used on accepting cycles
        std::vector<bool> good;
        if (!strict) {
            good = pump_sources(Spine::Pair, false);
            if (internal_triple_reaches(sccs, accepting, good)) return true;
        }
        if (mode == LimitMode::Inf) {
            good = pump_sources(Spine::Left, strict);
            if (internal_triple_reaches(sccs, accepting, good)) return true;
        }
        return false;
    }

private:
    enum class Spine { Pair, Left };

    struct Node {
        bool head;
        std::uint32_t a, b, c;  // head: p, top; chain: transition, level, state
    };

    void grammar_values() {
        g_.terminals = a_.input_alphabet;
        nt_ = detail::append_triple_grammar(a_, summary_, g_);
        val_ = detail::min_costs(g_, letter_);
    }

    std::uint32_t head(StateId p, SymbolId x) {
        std::size_t xi = x == kBottom ? nsym_ : x;
        std::size_t key = p * (nsym_ + 1) + xi;
        if (head_id_[key] == kNone) {
            head_id_[key] = static_cast<std::uint32_t>(nodes_.size());
            nodes_.push_back(Node{true, p, static_cast<std::uint32_t>(xi), 0});
            work_.push_back(head_id_[key]);
        }
        return head_id_[key];
    }
    std::uint32_t chain(std::uint32_t t, std::uint32_t l, StateId s) {
        auto [it, inserted] = chain_id_.try_emplace(detail::pack3(t, l, s), static_cast<std::uint32_t>(nodes_.size()));
        if (inserted) {
            nodes_.push_back(Node{false, t, l, s});
            work_.push_back(it->second);
        }
        return it->second;
    }
    void edge(std::uint32_t u, std::uint32_t v, detail::Ext<Num> w, bool visit, std::int64_t triple) {
        edges_.push_back(detail::WEdge<Num>{u, v, std::move(w)});
        visit_.push_back(visit);
        triple_.push_back(triple);
    }

    void build_head_graph() {
        const auto accepting = a_.accepting_mask();
        head_id_.assign(a_.num_states() * (nsym_ + 1), kNone);
        std::vector<std::vector<std::uint32_t>> by_head(a_.num_states() * (nsym_ + 1));
        for (std::uint32_t i = 0; i < a_.transitions.size(); ++i) {
            const auto& t = a_.transitions[i];
            std::size_t xi = t.reads_bottom() ? nsym_ : t.top;
            by_head[t.from * (nsym_ + 1) + xi].push_back(i);
        }
        for (StateId q0 : a_.initial_states) head(q0, kBottom);
        using E = detail::Ext<Num>;
        while (!work_.empty()) {
            std::uint32_t u = work_.back();
            work_.pop_back();
            Node n = nodes_[u];
            if (n.head) {
                for (auto ti : by_head[n.a * (nsym_ + 1) + n.b]) {
                    const auto& t = a_.transitions[ti];
                    E w = E::fin(letter_[t.letter]);
                    if (t.push.empty()) {
                        if (t.reads_bottom()) edge(u, head(t.to, kBottom), w, accepting[t.to], -1);
                    } else {
                        edge(u, chain(ti, static_cast<std::uint32_t>(t.push.size()), t.to), w, accepting[t.to], -1);
                    }
                }
            } else {
                const auto& t = a_.transitions[n.a];
                SymbolId y = t.push[n.b - 1];
                edge(u, head(n.c, y), E::fin(Num{}), false, -1);
                for (const auto& e : summary_.ends(n.c, y)) {
                    const auto& tr = summary_.triples()[e.index];
                    const auto& w = val_[nt_[e.index]];
                    if (n.b >= 2)
                        edge(u, chain(n.a, n.b - 1, e.r), w, tr.visit, e.index);
                    else if (t.reads_bottom())
                        edge(u, head(e.r, kBottom), w, tr.visit, e.index);
                }
            }
        }
        adj_.assign(nodes_.size(), {});
        for (const auto& e : edges_) adj_[e.from].push_back(e.to);
    }

    // Nonterminals of the summary grammar that can derive a nonterminal with
    // a pump of nonpositive (negative if `strict`) cost: pair pumps count
    // u_L u_R, left pumps count u_L only.
    std::vector<bool> pump_sources(Spine spine, bool strict) {
        using E = detail::Ext<Num>;
        const auto n = g_.num_nonterminals();
        detail::Adjacency adj(n), rev(n);
        std::vector<detail::WEdge<Num>> edges;
        for (const auto& p : g_.productions) {
            for (std::size_t j = 0; j < p.body.size(); ++j) {
                if (p.body[j].terminal) continue;
                E w = E::fin(Num{});
                for (std::size_t i = 0; i < p.body.size(); ++i) {
                    if (i == j || (spine == Spine::Left && i > j)) continue;
                    const auto& s = p.body[i];
                    w = w + (s.terminal ? E::fin(letter_[s.id]) : val_[s.id]);
                }
                edges.push_back(detail::WEdge<Num>{p.head, p.body[j].id, w});
                adj[p.head].push_back(p.body[j].id);
                rev[p.body[j].id].push_back(p.head);
            }
        }
        auto sccs = detail::strongly_connected(adj);
        auto flags = detail::cycle_flags<Num>(n, edges, sccs);
        std::vector<std::uint32_t> good;
        for (std::uint32_t b = 0; b < n; ++b) {
            const auto& f = flags[sccs.comp[b]];
            if (strict ? f.has_negative : f.has_nonpositive) good.push_back(b);
        }
        return detail::reachable_from(rev, good);
    }

    bool internal_triple_reaches(const detail::Sccs& sccs, const std::vector<char>& accepting,
                                 const std::vector<bool>& good) const {
        for (std::size_t i = 0; i < edges_.size(); ++i) {
            if (triple_[i] < 0) continue;
            auto c = sccs.comp[edges_[i].from];
            if (c != sccs.comp[edges_[i].to] || !accepting[c]) continue;
            if (good[nt_[triple_[i]]]) return true;
        }
        return false;
    }

    static constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();

    const Pda& a_;
    const detail::PopSummary& summary_;
    const std::vector<Num>& letter_;
    const std::size_t nsym_;

    Cfg g_;
    std::vector<NonterminalId> nt_;
    std::vector<detail::Ext<Num>> val_;

    std::vector<Node> nodes_;
    std::vector<std::uint32_t> head_id_;
    std::unordered_map<std::uint64_t, std::uint32_t> chain_id_;
    std::vector<std::uint32_t> work_;
    std::vector<detail::WEdge<Num>> edges_;
    std::vector<char> visit_;
    std::vector<std::int64_t> triple_;
    detail::Adjacency adj_;
};

bool engine_decide(const Pda& a, const LetterCost& lc, const Threshold& th, LimitMode mode) {
    require_omega(a);
    if (lc.size() < a.num_letters()) throw ModelError("letter cost missing for some letter");
    // lc^λ scaled to integers; only signs of sums matter
    std::vector<Rational> shifted;
    Integer den = 1;
    for (std::size_t i = 0; i < a.num_letters(); ++i) {
        shifted.push_back(Rational(lc[i] - th.bound));
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), shifted.back().get_den_mpz_t());
    }
    std::vector<Integer> scaled;
    bool small = true;
    for (const auto& r : shifted) {
        Integer v = r.get_num() * (den / r.get_den());
        if (!v.fits_slong_p() || abs(v) > Integer("1000000000000")) small = false;
        scaled.push_back(v);
    }
    detail::PopSummary summary(a);
    if (small) {
        std::vector<std::int64_t> w;
        for (const auto& v : scaled) w.push_back(v.get_si());
        try {
            return Engine<std::int64_t>(a, summary, w).decide(th.strict(), mode);
        } catch (const detail::Overflow&) {
            // fall through to exact big integers
        }
    }
    return Engine<Integer>(a, summary, scaled).decide(th.strict(), mode);
}

Decision make_decision(std::string problem, const Threshold& th, bool answer) {
    Decision d;
    d.problem = std::move(problem);
    d.inputs = {{"relation", to_string(th.relation)}, {"lambda", to_string(th.bound)}};
    d.answer = answer;
    return d;
}

}  // namespace

Decision decide_avg_lc_omega(const Pda& a, const LetterCost& lc, const Threshold& th, LimitMode mode) {
    return make_decision(mode == LimitMode::Inf ? "avginf" : "avgsup", th, engine_decide(a, lc, th, mode));
}

Decision decide_avgsup_lc(const Pda& a, const LetterCost& lc, const Threshold& th) {
    return decide_avg_lc_omega(a, lc, th, LimitMode::Sup);
}

Decision decide_avginf_lc(const Pda& a, const LetterCost& lc, const Threshold& th) {
    return decide_avg_lc_omega(a, lc, th, LimitMode::Inf);
}

namespace {

bool componentwise(const Pda& a, const LetterCost& lc, const Threshold& th, LimitMode mode) {
    for (const auto& comp : factorize(a).components) {
        Cfg g = without_epsilon(prune(to_cnf(pda_to_cfg(comp.u_rec))));
        if (!cfg_nonempty(g)) continue;
        if (avg_lc_holds(g, lc, th)) return true;
        if (mode == LimitMode::Sup) continue;
        for (NonterminalId n = 0; n < g.num_nonterminals(); ++n) {
            Cfg left = pump_grammar_left(g, n);
            if (cfg_nonempty(left) && avg_lc_holds(left, lc, th)) return true;
        }
    }
    return false;
}

}  // namespace

Decision decide_avgsup_lc_componentwise(const Pda& a, const LetterCost& lc, const Threshold& th) {
    return make_decision("avgsup", th, componentwise(a, lc, th, LimitMode::Sup));
}

Decision decide_avginf_lc_componentwise(const Pda& a, const LetterCost& lc, const Threshold& th) {
    return make_decision("avginf", th, componentwise(a, lc, th, LimitMode::Inf));
}

}  // namespace pdcost
