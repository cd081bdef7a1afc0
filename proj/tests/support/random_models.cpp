#include "random_models.hpp"

#include <algorithm>

namespace pdcost::test {

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

bool coin(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

Pda random_pda(Rng& rng, const PdaShape& shape) {
    Pda a;
    a.omega = shape.omega;
    int nq = uniform(rng, 1, shape.max_states);
    for (int i = 0; i < nq; ++i) a.states.push_back("q" + std::to_string(i));
    for (int i = 0; i < shape.letters; ++i) a.input_alphabet.push_back(std::string(1, static_cast<char>('a' + i)));
    for (int i = 0; i < shape.symbols; ++i) a.stack_alphabet.push_back(std::string(1, static_cast<char>('X' + i)));
    a.initial_states = {0};
    for (int i = 0; i < nq; ++i)
        if (shape.all_accepting || coin(rng, 0.4)) a.accepting_states.push_back(static_cast<StateId>(i));

    std::vector<StateId> reached = {0};
    int nt = uniform(rng, 1, shape.max_transitions);
    for (int i = 0; i < nt; ++i) {
        Transition t;
        t.from = reached[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(reached.size()) - 1))];
        t.to = static_cast<StateId>(uniform(rng, 0, nq - 1));
        t.letter = static_cast<LetterId>(uniform(rng, 0, shape.letters - 1));
        if (shape.symbols > 0) {
            int top = uniform(rng, -1, shape.symbols - 1);
            t.top = top < 0 ? kBottom : static_cast<SymbolId>(top);
            int len = uniform(rng, 0, shape.max_push);
            for (int k = 0; k < len; ++k) t.push.push_back(static_cast<SymbolId>(uniform(rng, 0, shape.symbols - 1)));
        }
        if (std::find(reached.begin(), reached.end(), t.to) == reached.end()) reached.push_back(t.to);
        a.transitions.push_back(std::move(t));
    }
    return a;
}

LetterCost random_letter_cost(Rng& rng, std::size_t letters, int lo, int hi) {
    LetterCost lc;
    for (std::size_t i = 0; i < letters; ++i) lc.cost.emplace_back(uniform(rng, lo, hi));
    return lc;
}

StackPricing random_pricing(Rng& rng, std::size_t symbols, int lo, int hi) {
    StackPricing c;
    for (std::size_t i = 0; i < symbols; ++i) c.cost.push_back(static_cast<std::uint64_t>(uniform(rng, lo, hi)));
    return c;
}

namespace {

Cfg empty_grammar(int nonterminals, int terminals) {
    Cfg g;
    for (int i = 0; i < terminals; ++i) g.terminals.push_back(std::string(1, static_cast<char>('a' + i)));
    for (int i = 0; i < nonterminals; ++i) g.nonterminals.push_back(std::string(1, static_cast<char>('S' + i)));
    g.start = 0;
    return g;
}

}  // namespace

Cfg random_cfg(Rng& rng, int nonterminals, int terminals, int max_productions) {
    int nn = uniform(rng, 1, nonterminals);
    Cfg g = empty_grammar(nn, terminals);
    int np = uniform(rng, 1, max_productions);
    for (int i = 0; i < np; ++i) {
        auto head = static_cast<NonterminalId>(uniform(rng, 0, nn - 1));
        std::vector<GSymbol> body;
        int len = uniform(rng, 0, 3);
        for (int k = 0; k < len; ++k) {
            if (coin(rng, 0.5))
                body.push_back(GSymbol::t(static_cast<TerminalId>(uniform(rng, 0, terminals - 1))));
            else
                body.push_back(GSymbol::n(static_cast<NonterminalId>(uniform(rng, 0, nn - 1))));
        }
        g.add(head, std::move(body));
    }
    return g;
}

Cfg random_cnf(Rng& rng, int nonterminals, int terminals, int max_productions) {
    int nn = uniform(rng, 1, nonterminals);
    Cfg g = empty_grammar(nn, terminals);
    int np = uniform(rng, 1, max_productions);
    for (int i = 0; i < np; ++i) {
        auto head = static_cast<NonterminalId>(uniform(rng, 0, nn - 1));
        if (coin(rng, 0.4)) {
            g.add(head, {GSymbol::t(static_cast<TerminalId>(uniform(rng, 0, terminals - 1)))});
        } else {
            g.add(head, {GSymbol::n(static_cast<NonterminalId>(uniform(rng, 0, nn - 1))),
                         GSymbol::n(static_cast<NonterminalId>(uniform(rng, 0, nn - 1)))});
        }
    }
    g.is_cnf = true;
    return prune(g);
}

Wps random_wps(Rng& rng, int max_states, int max_transitions, int symbols, int weight_lo, int weight_hi) {
    PdaShape shape;
    shape.max_states = max_states;
    shape.max_transitions = max_transitions;
    shape.letters = 1;
    shape.symbols = symbols;
    shape.all_accepting = true;
    Wps w;
    w.pda = random_pda(rng, shape);
    w.pda.input_alphabet = {"a"};
    for (std::size_t i = 0; i < w.pda.transitions.size(); ++i) w.weights.emplace_back(uniform(rng, weight_lo, weight_hi));
    for (StateId s = 0; s < w.pda.num_states(); ++s)
        if (coin(rng, 0.5)) w.buchi.push_back(s);
    return w;
}

ClientServerSpec random_client_server(Rng& rng, int max_states, int max_transitions) {
    ClientServerSpec s;
    int n = uniform(rng, 1, max_states);
    for (int i = 0; i < n; ++i) s.states.push_back("s" + std::to_string(i));
    int nt = uniform(rng, 2, max_transitions);
    for (int i = 0; i < nt; ++i) {
        CsTransition t;
        t.from = static_cast<StateId>(uniform(rng, 0, n - 1));
        t.to = static_cast<StateId>(uniform(rng, 0, n - 1));
        t.label = static_cast<CsLabel>(uniform(rng, 0, 2));
        t.guard = t.label == CsLabel::Grant ? CsGuard::Nonzero : static_cast<CsGuard>(uniform(rng, 0, 2));
        s.transitions.push_back(t);
    }
    return s;
}

}  // namespace pdcost::test
