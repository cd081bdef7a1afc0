#include "pdcost/avglc.hpp"

#include "pdcost/error.hpp"
#include "pdcost/mincost.hpp"

namespace pdcost {

bool avg_lc_holds(const Cfg& g, const LetterCost& lc, const Threshold& th) {
    if (!cfg_nonempty(g)) throw PreconditionError("no word to average");
    LetterCost shifted = shifted_cost(lc, th.bound);
    ExtendedRational best = min_letter_cost(g, shifted);
    if (th.strict()) return best.is_negative();
    if (best.is_nonpositive()) return true;
    // infimum not attained: some pump u_L u_R brings the average down to λ
    for (NonterminalId a = 0; a < g.num_nonterminals(); ++a) {
        Cfg pump = pump_grammar_pair(g, a);
        if (min_letter_cost(pump, shifted).is_nonpositive()) return true;
    }
    return false;
}

Decision decide_avg_lc(const Cfg& cfg, const LetterCost& lc, const Threshold& th) {
    Cfg g = without_epsilon(prune(to_cnf(cfg)));
    Decision d;
    d.problem = "avglc";
    d.inputs = {{"relation", to_string(th.relation)}, {"lambda", to_string(th.bound)}};
    d.answer = avg_lc_holds(g, lc, th);
    return d;
}

}  // namespace pdcost
