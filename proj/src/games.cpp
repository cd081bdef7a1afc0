#include "pdcost/games.hpp"

#include "pdcost/error.hpp"

#include <algorithm>

namespace pdcost {

void require_valid(const Wps& w) {
    require_valid(w.pda);
    if (w.pda.num_letters() != 1) throw ModelError("a weighted pushdown system has a single-letter alphabet");
    if (w.weights.size() != w.pda.transitions.size())
        throw ModelError("every transition needs exactly one weight");
    for (StateId q : w.buchi)
        if (q >= w.pda.num_states()) throw ModelError("Büchi state " + std::to_string(q) + " is not declared");
}

std::pair<Pda, LetterCost> wps_to_letter(const Wps& w, const std::vector<StateId>& buchi) {
    require_valid(w);
    for (StateId q : buchi)
        if (q >= w.pda.num_states()) throw ModelError("Büchi state " + std::to_string(q) + " is not declared");
    Pda a;
    a.omega = true;
    a.states = w.pda.states;
    a.stack_alphabet = w.pda.stack_alphabet;
    a.initial_states = w.pda.initial_states;
    a.accepting_states = buchi;
    std::sort(a.accepting_states.begin(), a.accepting_states.end());
    a.accepting_states.erase(std::unique(a.accepting_states.begin(), a.accepting_states.end()),
                             a.accepting_states.end());
    LetterCost lc;
    for (std::size_t i = 0; i < w.pda.transitions.size(); ++i) {
        a.input_alphabet.push_back("t" + std::to_string(i));
        Transition t = w.pda.transitions[i];
        t.letter = static_cast<LetterId>(i);
        a.transitions.push_back(std::move(t));
        lc.cost.emplace_back(w.weights[i]);
    }
    return {std::move(a), std::move(lc)};
}

Decision solve_wps_game(const Wps& w, const GameObjective& obj) {
    auto [a, lc] = wps_to_letter(w, obj.buchi);
    Decision d = decide_avg_lc_omega(a, lc, obj.threshold, obj.mode);
    d.problem = "game";
    d.inputs.emplace_back("mode", to_string(obj.mode));
    return d;
}

}  // namespace pdcost
