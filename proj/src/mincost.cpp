#include "pdcost/mincost.hpp"

#include "pdcost/detail/relax.hpp"
#include "pdcost/error.hpp"

namespace pdcost {

namespace {

std::vector<Rational> terminal_costs(const Cfg& cfg, const LetterCost& lc) {
    require_well_formed(cfg);
    if (lc.size() < cfg.num_terminals())
        throw ModelError("letter cost missing for terminal " + cfg.terminals[lc.size()]);
    return std::vector<Rational>(lc.cost.begin(), lc.cost.begin() + cfg.num_terminals());
}

}  // namespace

std::vector<ExtendedRational> nonterminal_min_costs(const Cfg& cfg, const LetterCost& lc) {
    auto vals = detail::min_costs(cfg, terminal_costs(cfg, lc));
    std::vector<ExtendedRational> out;
    out.reserve(vals.size());
    for (const auto& v : vals) out.push_back(detail::to_extended(v));
    return out;
}

ExtendedRational min_letter_cost(const Cfg& cfg, const LetterCost& lc) {
    return nonterminal_min_costs(cfg, lc)[cfg.start];
}

ExtendedRational min_letter_cost_global_rounds(const Cfg& cfg, const LetterCost& lc) {
    auto term = terminal_costs(cfg, lc);
    using E = detail::Ext<Rational>;
    std::vector<E> val(cfg.num_nonterminals(), E::pos());
    bool changed = false;
    for (std::size_t round = 0; round <= cfg.num_nonterminals(); ++round) {
        changed = false;
        for (const auto& p : cfg.productions) {
            auto v = detail::body_cost(p, term, val);
            if (v < val[p.head]) {
                val[p.head] = v;
                changed = true;
            }
        }
    }
    if (changed) return ExtendedRational::neg_infinity();
    return detail::to_extended(val[cfg.start]);
}

LetterCost shifted_cost(const LetterCost& lc, const Rational& lambda) {
    LetterCost out = lc;
    for (auto& c : out.cost) c -= lambda;
    return out;
}

}  // namespace pdcost
