#include "pdcost/asc.hpp"

#include "pdcost/error.hpp"

#include <deque>
#include <map>

namespace pdcost {

void require_pricing(const Pda& a, const StackPricing& c) {
    if (c.cost.size() < a.num_symbols())
        throw ModelError("stack symbol " + a.stack_alphabet[c.cost.size()] + " has no price");
}

std::uint64_t cost_bound(const Pda& a, const StackPricing& c, const Rational& lambda) {
    require_pricing(a, c);
    if (sgn(lambda) < 0) throw PreconditionError("cost bound needs a nonnegative threshold");
    Integer n = Integer(std::to_string(c.max_cost()));
    n *= 3;
    n *= static_cast<unsigned long>(a.num_states());
    n *= static_cast<unsigned long>(a.num_symbols());
    n *= static_cast<unsigned long>(a.transitions.size());
    n += ceil(lambda);
    return to_u64(n);
}

MetaAutomaton meta_automaton(const Pda& a, const StackPricing& c, std::uint64_t bound) {
    require_valid(a);
    require_pricing(a, c);
    MetaAutomaton m;
    m.pda.omega = a.omega;
    m.pda.stack_alphabet = a.stack_alphabet;

    std::vector<std::int64_t> delta(a.transitions.size());
    for (std::size_t i = 0; i < a.transitions.size(); ++i) {
        const auto& t = a.transitions[i];
        std::int64_t d = t.reads_bottom() ? 0 : -static_cast<std::int64_t>(c.cost[t.top]);
        for (SymbolId y : t.push) d += static_cast<std::int64_t>(c.cost[y]);
        delta[i] = d;
    }
    std::vector<std::vector<std::uint32_t>> out(a.num_states());
    for (std::uint32_t i = 0; i < a.transitions.size(); ++i) out[a.transitions[i].from].push_back(i);
    const auto accepting = a.accepting_mask();

    std::map<std::pair<StateId, std::uint64_t>, StateId> state_id;
    std::map<MetaLetter, LetterId> letter_id;
    std::deque<StateId> work;
    auto state = [&](StateId q, std::uint64_t x) {
        auto [it, inserted] = state_id.try_emplace({q, x}, static_cast<StateId>(m.pda.states.size()));
        if (inserted) {
            m.pda.states.push_back(a.states[q] + "@" + std::to_string(x));
            m.state_info.emplace_back(q, x);
            if (accepting[q]) m.pda.accepting_states.push_back(it->second);
            work.push_back(it->second);
        }
        return it->second;
    };
    for (StateId q0 : a.initial_states) m.pda.initial_states.push_back(state(q0, 0));

    while (!work.empty()) {
        StateId s = work.front();
        work.pop_front();
        auto [q, x] = m.state_info[s];
        for (auto i : out[q]) {
            const auto& t = a.transitions[i];
            if (!t.reads_bottom() && x < c.cost[t.top]) continue;
            std::int64_t nx = static_cast<std::int64_t>(x) + delta[i];
            if (nx < 0 || static_cast<std::uint64_t>(nx) > bound) continue;
            MetaLetter ml{i, static_cast<std::uint64_t>(nx)};
            auto [lit, fresh] = letter_id.try_emplace(ml, static_cast<LetterId>(m.letters.size()));
            if (fresh) {
                m.letters.push_back(ml);
                m.pda.input_alphabet.push_back("t" + std::to_string(i) + ":" + std::to_string(nx));
                m.lc.cost.emplace_back(static_cast<unsigned long>(nx));
            }
            StateId target = state(t.to, ml.cost);
            m.pda.transitions.push_back(Transition{s, lit->second, t.top, target, t.push});
        }
    }
    return m;
}

namespace {

Decision asc_decision(const Threshold& th, LimitMode mode, bool answer, std::uint64_t bound) {
    Decision d;
    d.problem = mode == LimitMode::Inf ? "iasc" : "sasc";
    d.inputs = {{"relation", to_string(th.relation)}, {"lambda", to_string(th.bound)},
                {"bound", std::to_string(bound)}};
    d.answer = answer;
    return d;
}

}  // namespace

Decision decide_asc_with_bound(const Pda& a, const StackPricing& c, const Threshold& th, LimitMode mode,
                               std::uint64_t bound) {
    if (!a.omega) throw PreconditionError("expected an automaton over infinite words");
    // stack costs are nonnegative
    if (sgn(th.bound) < 0) return asc_decision(th, mode, false, bound);
    MetaAutomaton m = meta_automaton(a, c, bound);
    bool answer = decide_avg_lc_omega(m.pda, m.lc, th, mode).answer;
    return asc_decision(th, mode, answer, bound);
}

Decision decide_asc(const Pda& a, const StackPricing& c, const Threshold& th, LimitMode mode) {
    require_pricing(a, c);
    if (sgn(th.bound) < 0) return asc_decision(th, mode, false, 0);
    return decide_asc_with_bound(a, c, th, mode, cost_bound(a, c, th.bound));
}

Decision decide_iasc(const Pda& a, const StackPricing& c, const Threshold& th) {
    return decide_asc(a, c, th, LimitMode::Inf);
}

Decision decide_sasc(const Pda& a, const StackPricing& c, const Threshold& th) {
    return decide_asc(a, c, th, LimitMode::Sup);
}

}  // namespace pdcost
