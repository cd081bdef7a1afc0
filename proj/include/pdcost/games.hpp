#pragma once

#include "pdcost/core.hpp"
#include "pdcost/omega.hpp"

#include <utility>
#include <vector>

namespace pdcost {

struct GameObjective {
    LimitMode mode = LimitMode::Inf;
    Threshold threshold;
    std::vector<StateId> buchi;
};

/// Letters are the transitions of the system (letter i reads transition i),
/// accepting states are `buchi`, lc(t) = wt(t).
std::pair<Pda, LetterCost> wps_to_letter(const Wps& w, const std::vector<StateId>& buchi);

/// Can the player build a run visiting `buchi` infinitely often whose
/// liminf / limsup mean weight is ⋈ λ.
Decision solve_wps_game(const Wps& w, const GameObjective& obj);

/// Throws ModelError on a malformed system.
void require_valid(const Wps& w);

}  // namespace pdcost
