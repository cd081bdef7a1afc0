#include "pdcost/art.hpp"

#include "pdcost/error.hpp"
#include "pdcost/omega.hpp"

namespace pdcost {

std::string to_string(CsLabel l) {
    switch (l) {
    case CsLabel::Request: return "r";
    case CsLabel::Grant: return "g";
    case CsLabel::Null: return "#";
    }
    return "?";
}

std::string to_string(CsGuard g) {
    switch (g) {
    case CsGuard::None: return "";
    case CsGuard::Zero: return "zero";
    case CsGuard::Nonzero: return "nonzero";
    }
    return "?";
}

void require_valid(const ClientServerSpec& spec) {
    const auto n = spec.states.size();
    if (spec.initial >= n) throw ModelError("initial state is not declared");
    for (std::size_t i = 0; i < spec.transitions.size(); ++i) {
        const auto& t = spec.transitions[i];
        if (t.from >= n || t.to >= n)
            throw ModelError("transition " + std::to_string(i) + " refers to an undeclared state");
        if (t.label == CsLabel::Grant && t.guard != CsGuard::Nonzero)
            throw ModelError("grant transition " + std::to_string(i) + " needs the nonzero guard");
    }
}

namespace {

// monitor phases: waiting for a request, waiting for a grant, just granted
enum Phase : std::uint32_t { kIdle = 0, kWaiting = 1, kGranted = 2 };

std::uint32_t monitor(std::uint32_t m, CsLabel l) {
    switch (l) {
    case CsLabel::Request: return kWaiting;
    case CsLabel::Grant: return m == kWaiting ? kGranted : kIdle;
    case CsLabel::Null: return m == kWaiting ? kWaiting : kIdle;
    }
    return m;
}

}  // namespace

ClientServerAutomaton build_client_server(const ClientServerSpec& spec) {
    require_valid(spec);
    ClientServerAutomaton m;
    Pda& a = m.pda;
    a.omega = true;
    a.input_alphabet = {"r", "g", "#"};
    a.stack_alphabet = {"P"};
    m.pricing.cost = {1};
    const char* phase_name[] = {"idle", "wait", "done"};
    for (const auto& s : spec.states)
        for (auto ph : phase_name) a.states.push_back(s + "/" + ph);
    auto id = [](StateId s, std::uint32_t ph) { return static_cast<StateId>(s * 3 + ph); };
    for (StateId s = 0; s < spec.states.size(); ++s) a.accepting_states.push_back(id(s, kGranted));
    a.initial_states = {id(spec.initial, kIdle)};

    const SymbolId P = 0;
    for (const auto& t : spec.transitions) {
        LetterId letter = static_cast<LetterId>(t.label);
        for (std::uint32_t ph = 0; ph < 3; ++ph) {
            StateId from = id(t.from, ph), to = id(t.to, monitor(ph, t.label));
            auto add = [&](SymbolId top, std::vector<SymbolId> push) {
                a.transitions.push_back(Transition{from, letter, top, to, std::move(push)});
                m.label.push_back(t.label);
            };
            bool empty_ok = t.guard != CsGuard::Nonzero;
            bool nonempty_ok = t.guard != CsGuard::Zero;
            switch (t.label) {
            case CsLabel::Request:
                if (empty_ok) add(kBottom, {P});
                if (nonempty_ok) add(P, {P, P});
                break;
            case CsLabel::Grant:
                add(P, {});
                break;
            case CsLabel::Null:
                if (empty_ok) add(kBottom, {});
                if (nonempty_ok) add(P, {P});
                break;
            }
        }
    }
    return m;
}

std::uint64_t art_cost_bound(const ClientServerAutomaton& m, const Rational& lambda) {
    if (sgn(lambda) < 0) throw PreconditionError("cost bound needs a nonnegative threshold");
    Integer top_cost = ceil(lambda) + 1;
    Integer n = top_cost * 3;
    n *= static_cast<unsigned long>(m.pda.num_states());
    n *= static_cast<unsigned long>(m.pda.num_symbols() + 1);
    n *= static_cast<unsigned long>(2 * m.pda.transitions.size());
    n += ceil(lambda);
    return to_u64(n);
}

LetterCost response_time_costs(const ClientServerAutomaton& cs, const MetaAutomaton& meta, const Rational& lambda) {
    LetterCost lc = meta.lc;
    for (std::size_t i = 0; i < meta.letters.size(); ++i)
        if (cs.label[meta.letters[i].transition] != CsLabel::Grant) lc.cost[i] += lambda;
    return lc;
}

Decision decide_art(const ClientServerSpec& spec, const Threshold& th) {
    Decision d;
    d.problem = "art";
    d.inputs = {{"relation", to_string(th.relation)}, {"lambda", to_string(th.bound)}};
    // every response takes at least one step
    if (sgn(th.bound) < 0) {
        require_valid(spec);
        d.answer = false;
        return d;
    }
    ClientServerAutomaton cs = build_client_server(spec);
    std::uint64_t bound = art_cost_bound(cs, th.bound);
    d.inputs.emplace_back("bound", std::to_string(bound));
    MetaAutomaton meta = meta_automaton(cs.pda, cs.pricing, bound);
    d.answer = decide_avginf_lc(meta.pda, response_time_costs(cs, meta, th.bound), th).answer;
    return d;
}

}  // namespace pdcost
