#pragma once

#include "pdcost/asc.hpp"
#include "pdcost/core.hpp"

#include <string>
#include <utility>
#include <vector>

namespace pdcost {

enum class CsLabel { Request, Grant, Null };  // r, g, #
enum class CsGuard { None, Zero, Nonzero };   // test on the pending-request count

struct CsTransition {
    StateId from = 0;
    CsLabel label = CsLabel::Null;
    CsGuard guard = CsGuard::None;
    StateId to = 0;

    friend bool operator==(const CsTransition&, const CsTransition&) = default;
};

/// Finite-state server model; the pending-request count is implicit.
struct ClientServerSpec {
    std::vector<std::string> states;
    StateId initial = 0;
    std::vector<CsTransition> transitions;

    friend bool operator==(const ClientServerSpec&, const ClientServerSpec&) = default;
};

std::string to_string(CsLabel l);  // "r", "g", "#"
std::string to_string(CsGuard g);  // "", "zero", "nonzero"

/// Throws ModelError (grants must carry the nonzero guard, ids in range).
void require_valid(const ClientServerSpec& spec);

struct ClientServerAutomaton {
    Pda pda;  // Σ = {r, g, #}, Γ = {P}
    StackPricing pricing;  // c(P) = 1
    std::vector<CsLabel> label;  // per transition of pda
};

/// Counter as a unary stack, in product with a fairness monitor that accepts
/// after every request that is later followed by a grant.
ClientServerAutomaton build_client_server(const ClientServerSpec& spec);

/// Cost bound used for the response-time decision: the stack-cost bound of
/// the built automaton computed as if the +λ surcharge were a stack symbol of
/// cost ⌈λ⌉+1 that can sit on top of the stack.
std::uint64_t art_cost_bound(const ClientServerAutomaton& m, const Rational& lambda);

/// c*: the pending count entered by each meta letter, plus λ unless the
/// letter comes from a grant.
LetterCost response_time_costs(const ClientServerAutomaton& cs, const MetaAutomaton& meta, const Rational& lambda);

/// Is there a fair computation whose average response time has liminf ⋈ λ.
Decision decide_art(const ClientServerSpec& spec, const Threshold& th);

}  // namespace pdcost
