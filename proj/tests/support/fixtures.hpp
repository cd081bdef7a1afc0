#pragma once

#include "pdcost/art.hpp"
#include "pdcost/core.hpp"

namespace pdcost::test {

// Three states A U B, stack alpha beta; IASC 0 and SASC 1 under alpha=0 beta=3.
Pda e1();
StackPricing e1_pricing();

// Infinite concatenations of 0^n 2^n blocks with lc(x) = x.
Pda blocks();
LetterCost blocks_costs();

// r g r g ...
ClientServerSpec immediate_grant();
// r r g g r r g g ...
ClientServerSpec batch_grant();
// may grant at once or keep collecting requests first
ClientServerSpec lazy_grant();

Threshold le(const Rational& bound);
Threshold lt(const Rational& bound);
Rational q(long num, long den = 1);

}  // namespace pdcost::test
