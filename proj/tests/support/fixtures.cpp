#include "fixtures.hpp"

namespace pdcost::test {

Pda e1() {
    Pda a;
    a.omega = true;
    a.states = {"A", "U", "B"};
    a.input_alphabet = {"a"};
    a.stack_alphabet = {"alpha", "beta"};
    a.initial_states = {0};
    a.accepting_states = {0};
    const SymbolId alpha = 0, beta = 1;
    a.transitions = {
        {0, 0, kBottom, 1, {alpha}},
        {1, 0, alpha, 1, {alpha, alpha}},
        {1, 0, alpha, 2, {beta}},
        {2, 0, beta, 2, {}},
        {2, 0, beta, 0, {}},
        {2, 0, alpha, 2, {beta}},
    };
    return a;
}

StackPricing e1_pricing() { return StackPricing{{0, 3}}; }

Pda blocks() {
    Pda a;
    a.omega = true;
    a.states = {"s", "p", "q"};
    a.input_alphabet = {"0", "2"};
    a.stack_alphabet = {"X"};
    a.initial_states = {0};
    a.accepting_states = {2};
    a.transitions = {
        {0, 0, kBottom, 1, {0}},
        {1, 0, 0, 1, {0, 0}},
        {1, 1, 0, 2, {}},
        {2, 1, 0, 2, {}},
        {2, 0, kBottom, 1, {0}},
    };
    return a;
}

LetterCost blocks_costs() { return LetterCost{{q(0), q(2)}}; }

ClientServerSpec immediate_grant() {
    ClientServerSpec s;
    s.states = {"ask", "serve"};
    s.transitions = {
        {0, CsLabel::Request, CsGuard::None, 1},
        {1, CsLabel::Grant, CsGuard::Nonzero, 0},
    };
    return s;
}

ClientServerSpec batch_grant() {
    ClientServerSpec s;
    s.states = {"r1", "r2", "g1", "g2"};
    s.transitions = {
        {0, CsLabel::Request, CsGuard::None, 1},
        {1, CsLabel::Request, CsGuard::None, 2},
        {2, CsLabel::Grant, CsGuard::Nonzero, 3},
        {3, CsLabel::Grant, CsGuard::Nonzero, 0},
    };
    return s;
}

ClientServerSpec lazy_grant() {
    ClientServerSpec s;
    s.states = {"loop"};
    s.transitions = {
        {0, CsLabel::Request, CsGuard::None, 0},
        {0, CsLabel::Grant, CsGuard::Nonzero, 0},
        {0, CsLabel::Null, CsGuard::None, 0},
    };
    return s;
}

Threshold le(const Rational& bound) { return Threshold{Relation::NonStrict, bound}; }
Threshold lt(const Rational& bound) { return Threshold{Relation::Strict, bound}; }
Rational q(long num, long den) { return make_rational(num, den); }

}  // namespace pdcost::test
