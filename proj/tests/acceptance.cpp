// Acceptance checks: one PASS/FAIL line per criterion, nonzero exit on failure.

#include "pdcost/art.hpp"
#include "pdcost/asc.hpp"
#include "pdcost/grammar.hpp"
#include "pdcost/mincost.hpp"
#include "pdcost/omega.hpp"
#include "pdcost/oracle.hpp"

#include "support/brute.hpp"
#include "support/fixtures.hpp"
#include "support/random_models.hpp"

#include <chrono>
#include <cstdio>
#include <deque>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

using namespace pdcost;
using namespace pdcost::test;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

const std::vector<Rational> kLetterGrid = {q(-3), q(-1), q(-1, 2), q(0), q(1, 3), q(1), q(5, 2)};
const std::vector<Rational> kStackGrid = {q(0), q(1, 2), q(1), q(3, 2), q(2), q(3), q(5)};
const Relation kRelations[] = {Relation::Strict, Relation::NonStrict};
const LimitMode kModes[] = {LimitMode::Inf, LimitMode::Sup};

// Collects the monotonicity, strict-implies-nonstrict and scaling checks run
// inside the random suites.
struct Criterion7 {
    long monotone = 0, strictness = 0, scaling = 0, failures = 0;
    std::string first_failure;

    void fail(const std::string& what) {
        if (failures++ == 0) first_failure = what;
    }

    // row[rel][i]: decision at grid point i (grid ascending)
    void check_row(const std::map<Relation, std::vector<bool>>& row, const std::string& where) {
        for (const auto& [rel, answers] : row)
            for (std::size_t i = 0; i + 1 < answers.size(); ++i) {
                ++monotone;
                if (answers[i] && !answers[i + 1]) fail("monotonicity, " + where);
            }
        const auto& strict = row.at(Relation::Strict);
        const auto& loose = row.at(Relation::NonStrict);
        for (std::size_t i = 0; i < strict.size(); ++i) {
            ++strictness;
            if (strict[i] && !loose[i]) fail("strict without nonstrict, " + where);
        }
    }
};

Criterion7 c7;

std::string str(std::size_t n) { return std::to_string(n); }

Outcome criterion1() {
    Pda a = e1();
    StackPricing c = e1_pricing();
    Outcome out;
    auto expect = [&](const char* what, bool got, bool want) {
        if (got != want) {
            out.pass = false;
            out.detail += std::string(what) + " gave " + (got ? "YES " : "NO ");
        }
    };
    expect("sasc <= 1", decide_sasc(a, c, le(q(1))).answer, true);
    expect("sasc < 1", decide_sasc(a, c, lt(q(1))).answer, false);
    expect("sasc <= 0", decide_sasc(a, c, le(q(0))).answer, false);
    expect("iasc <= 0", decide_iasc(a, c, le(q(0))).answer, true);
    expect("iasc < 0", decide_iasc(a, c, lt(q(0))).answer, false);
    if (out.pass) out.detail = "SASC = 1, IASC = 0";
    return out;
}

Outcome criterion2() {
    Pda a = blocks();
    LetterCost lc = blocks_costs();
    Outcome out;
    auto expect = [&](const char* what, bool got, bool want) {
        if (got != want) {
            out.pass = false;
            out.detail += std::string(what) + " gave " + (got ? "YES " : "NO ");
        }
    };
    expect("avgsup <= 1", decide_avgsup_lc(a, lc, le(q(1))).answer, true);
    expect("avgsup < 1", decide_avgsup_lc(a, lc, lt(q(1))).answer, false);
    expect("avginf <= 0", decide_avginf_lc(a, lc, le(q(0))).answer, true);
    expect("avginf < 0", decide_avginf_lc(a, lc, lt(q(0))).answer, false);
    if (out.pass) out.detail = "avgSup = 1, avgInf = 0";
    return out;
}

LetterCost scaled(const LetterCost& lc, long k) {
    LetterCost out = lc;
    for (auto& x : out.cost) x *= k;
    return out;
}

StackPricing scaled(const StackPricing& c, std::uint64_t k) {
    StackPricing out = c;
    for (auto& x : out.cost) x *= k;
    return out;
}

Outcome criterion3() {
    Rng rng(3003);
    PdaShape shape;
    shape.max_states = 6;
    shape.max_transitions = 10;
    shape.letters = 3;
    const int instances = 500;
    long compared = 0, mismatches = 0, yes = 0;
    std::string first;
    for (int n = 0; n < instances; ++n) {
        Pda a = random_pda(rng, shape);
        LetterCost lc = random_letter_cost(rng, a.num_letters(), -5, 5);
        ConfigGraph g = bounded_config_graph(a, StepCosts::letters(lc), 0);
        ExtendedRational best = min_mean_buchi(g);
        for (LimitMode mode : kModes) {
            std::map<Relation, std::vector<bool>> row;
            for (Relation rel : kRelations)
                for (const auto& lambda : kLetterGrid) {
                    Threshold th{rel, lambda};
                    bool got = decide_avg_lc_omega(a, lc, th, mode).answer;
                    OracleResult o = oracle_decide(a, StepCosts::letters(lc), th, mode, 0);
                    bool want = th.holds(best);
                    ++compared;
                    yes += want;
                    if (!o.complete || (o.answer == OracleAnswer::Yes) != want) {
                        ++mismatches;
                        if (first.empty()) first = "oracle disagrees with its own graph, instance " + std::to_string(n);
                    }
                    if (got != want) {
                        ++mismatches;
                        if (first.empty())
                            first = "instance " + std::to_string(n) + " mode " + to_string(mode) + " " +
                                    to_string(th) + ": pipeline " + (got ? "YES" : "NO");
                    }
                    row[rel].push_back(got);
                    for (long k : {2L, 3L}) {
                        ++c7.scaling;
                        Threshold tk{rel, lambda * k};
                        if (decide_avg_lc_omega(a, scaled(lc, k), tk, mode).answer != got)
                            c7.fail("letter scaling by " + std::to_string(k) + ", no-push instance " +
                                    std::to_string(n));
                    }
                }
            c7.check_row(row, "no-push instance " + std::to_string(n));
        }
    }
    Outcome out;
    out.pass = mismatches == 0;
    out.detail = str(instances) + " instances, " + std::to_string(compared) + " decisions (" +
                 std::to_string(yes) + " YES), " + std::to_string(mismatches) + " mismatches";
    if (!first.empty()) out.detail += "; first: " + first;
    return out;
}

Outcome criterion4() {
    Rng rng(4004);
    PdaShape shape;
    shape.max_states = 4;
    shape.max_transitions = 7;
    shape.letters = 2;
    shape.symbols = 2;
    shape.max_push = 2;
    const int instances = 300;
    const std::size_t height = 4;
    long oracle_yes = 0, checked = 0, violations = 0;
    std::string first;
    auto record = [&](bool oracle, bool pipeline, const std::string& where) {
        ++checked;
        if (!oracle) return;
        ++oracle_yes;
        if (!pipeline) {
            ++violations;
            if (first.empty()) first = where;
        }
    };
    for (int n = 0; n < instances; ++n) {
        Pda a = random_pda(rng, shape);
        LetterCost lc = random_letter_cost(rng, a.num_letters(), -5, 5);
        StackPricing c = random_pricing(rng, a.num_symbols(), 0, 3);
        std::string tag = "pushdown instance " + std::to_string(n);
        for (LimitMode mode : kModes) {
            std::map<Relation, std::vector<bool>> letter_row, stack_row;
            for (Relation rel : kRelations) {
                for (const auto& lambda : kLetterGrid) {
                    Threshold th{rel, lambda};
                    bool got = decide_avg_lc_omega(a, lc, th, mode).answer;
                    bool oracle = oracle_decide(a, StepCosts::letters(lc), th, mode, height).answer == OracleAnswer::Yes;
                    record(oracle, got, tag + " letters " + to_string(mode) + " " + to_string(th));
                    letter_row[rel].push_back(got);
                    ++c7.scaling;
                    if (decide_avg_lc_omega(a, scaled(lc, 2), Threshold{rel, lambda * 2}, mode).answer != got)
                        c7.fail("letter scaling, " + tag);
                }
                for (const auto& lambda : kStackGrid) {
                    Threshold th{rel, lambda};
                    bool got = decide_asc(a, c, th, mode).answer;
                    bool oracle = oracle_decide(a, StepCosts::stack(c), th, mode, height).answer == OracleAnswer::Yes;
                    record(oracle, got, tag + " stack " + to_string(mode) + " " + to_string(th));
                    stack_row[rel].push_back(got);
                    for (std::uint64_t k : {2u, 3u}) {
                        ++c7.scaling;
                        Threshold tk{rel, lambda * static_cast<unsigned long>(k)};
                        if (decide_asc(a, scaled(c, k), tk, mode).answer != got)
                            c7.fail("pricing scaling by " + std::to_string(k) + ", " + tag);
                    }
                }
            }
            c7.check_row(letter_row, tag + " letters");
            c7.check_row(stack_row, tag + " stack");
        }
    }
    Outcome out;
    out.pass = violations == 0;
    out.detail = str(instances) + " instances, H = " + str(height) + ", " + std::to_string(checked) +
                 " decisions, " + std::to_string(oracle_yes) + " oracle YES, " + std::to_string(violations) +
                 " unsound";
    if (!first.empty()) out.detail += "; first: " + first;
    return out;
}

Outcome criterion5() {
    Rng rng(5005);
    const int instances = 300;
    int made = 0, finite = 0, minus_inf = 0, bad = 0;
    std::string first;
    while (made < instances) {
        Cfg g = random_cnf(rng, 3, 2, 6);
        if (g.productions.empty()) continue;
        ++made;
        LetterCost lc = random_letter_cost(rng, g.num_terminals(), -5, 5);
        ExtendedRational got = min_letter_cost(g, lc);
        const int n = static_cast<int>(g.num_nonterminals());
        std::string tag = "grammar " + std::to_string(made) + " (" + to_string(g) + ")";
        if (got.is_finite()) {
            ++finite;
            auto minima = tree_minima(g, lc, n + 1);
            if (!minima[g.start] || *minima[g.start] != got.value()) {
                ++bad;
                if (first.empty()) first = tag + ": " + to_string(got);
            }
        } else if (got.is_neg_infinity()) {
            ++minus_inf;
            if (!negative_pump(g, lc, 3 * (n + 1))) {
                ++bad;
                if (first.empty()) first = tag + ": -inf without a pump";
            }
        } else {
            ++bad;
            if (first.empty()) first = tag + ": +inf on a nonempty grammar";
        }
    }
    Outcome out;
    out.pass = bad == 0;
    out.detail = std::to_string(made) + " grammars (" + std::to_string(finite) + " finite, " +
                 std::to_string(minus_inf) + " -inf), " + std::to_string(bad) + " disagreements";
    if (!first.empty()) out.detail += "; first: " + first;
    return out;
}

Outcome criterion6() {
    Rng rng(6006);
    long compared = 0, mismatches = 0, yes = 0;
    std::string first;
    auto run = [&](const Pda& a, const StackPricing& c, const std::string& tag) {
        std::map<Relation, std::vector<bool>> inf_row, sup_row;
        for (Relation rel : kRelations)
            for (const auto& lambda : kStackGrid) {
                Threshold th{rel, lambda};
                bool i = decide_iasc(a, c, th).answer;
                bool s = decide_sasc(a, c, th).answer;
                ++compared;
                yes += i;
                if (i != s) {
                    ++mismatches;
                    if (first.empty()) first = tag + " " + to_string(th);
                }
                inf_row[rel].push_back(i);
                sup_row[rel].push_back(s);
            }
        c7.check_row(inf_row, tag + " iasc");
        c7.check_row(sup_row, tag + " sasc");
    };
    PdaShape shape;
    shape.max_states = 3;
    shape.max_transitions = 6;
    shape.letters = 1;
    shape.symbols = 2;
    shape.all_accepting = true;
    for (int n = 0; n < 100; ++n) {
        Pda a = random_pda(rng, shape);
        run(a, random_pricing(rng, a.num_symbols(), 0, 3), "all-accepting instance " + std::to_string(n));
    }
    shape.all_accepting = false;
    for (int n = 0; n < 100; ++n) {
        Pda a = random_pda(rng, shape);
        run(a, random_pricing(rng, a.num_symbols(), 1, 3), "positive-pricing instance " + std::to_string(n));
    }
    Outcome out;
    out.pass = mismatches == 0;
    out.detail = "200 instances, " + std::to_string(compared) + " threshold pairs (" + std::to_string(yes) +
                 " YES), " + std::to_string(mismatches) + " disagreements";
    if (!first.empty()) out.detail += "; first: " + first;
    return out;
}

Outcome criterion7() {
    Outcome out;
    out.pass = c7.failures == 0;
    out.detail = std::to_string(c7.monotone) + " monotonicity, " + std::to_string(c7.strictness) +
                 " strictness and " + std::to_string(c7.scaling) + " scaling checks, " +
                 std::to_string(c7.failures) + " failures";
    if (!c7.first_failure.empty()) out.detail += "; first: " + c7.first_failure;
    return out;
}

// Random fair-looking run of the client-server automaton, checked against
// the c* letter costs used by the decision at every grant.
bool check_trace_identity(const ClientServerSpec& spec, const Rational& lambda, Rng& rng, std::size_t steps,
                          long& grants_checked, std::string& why) {
    ClientServerAutomaton cs = build_client_server(spec);
    std::uint64_t bound = art_cost_bound(cs, lambda);
    MetaAutomaton meta = meta_automaton(cs.pda, cs.pricing, bound);
    LetterCost star = response_time_costs(cs, meta, lambda);

    Configuration cur{cs.pda.initial_states[0], {}, std::nullopt};
    StateId meta_state = meta.pda.initial_states[0];
    Rational sum_c = 0, sum_star = 0;
    long requests = 0, grants = 0;
    std::deque<std::size_t> pending;  // positions of open requests, FCFS
    Rational sum_response = 0;
    for (std::size_t pos = 1; pos <= steps; ++pos) {
        std::vector<std::size_t> options;
        for (std::size_t i = 0; i < cs.pda.transitions.size(); ++i)
            if (applicable(cur, cs.pda.transitions[i])) options.push_back(i);
        if (options.empty()) break;
        // favour grants a little so the queue stays short
        std::size_t pick = options[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(options.size()) - 1))];
        for (auto i : options)
            if (cs.label[i] == CsLabel::Grant && coin(rng, 0.3)) pick = i;
        if (cur.stack.size() + 1 > bound && cs.label[pick] == CsLabel::Request) break;
        const Transition& t = cs.pda.transitions[pick];
        cur = step(cur, t);

        // follow the same step in the meta automaton
        std::optional<std::size_t> meta_t;
        for (std::size_t j = 0; j < meta.pda.transitions.size(); ++j) {
            const auto& mt = meta.pda.transitions[j];
            if (mt.from == meta_state && meta.letters[mt.letter].transition == pick) meta_t = j;
        }
        if (!meta_t) {
            why = "meta automaton cannot follow step " + std::to_string(pos);
            return false;
        }
        const auto& mt = meta.pda.transitions[*meta_t];
        meta_state = mt.to;

        Rational height(static_cast<unsigned long>(cur.stack.size()));
        bool is_grant = cs.label[pick] == CsLabel::Grant;
        if (meta.lc[mt.letter] != height) {
            why = "meta letter cost differs from the pending count at step " + std::to_string(pos);
            return false;
        }
        sum_c += height;
        sum_star += star[mt.letter];
        if (star[mt.letter] != height + (is_grant ? Rational(0) : lambda)) {
            why = "c* letter cost is not c plus the surcharge at step " + std::to_string(pos);
            return false;
        }
        if (cs.label[pick] == CsLabel::Request) {
            ++requests;
            pending.push_back(pos);
        }
        if (is_grant) {
            ++grants;
            sum_response += Rational(static_cast<unsigned long>(pos - pending.front()));
            pending.pop_front();
            ++grants_checked;
            Rational gn(static_cast<unsigned long>(pos)), n(grants);
            if (sum_star != sum_c + (gn - n) * lambda) {
                why = "sum identity fails at grant " + std::to_string(grants);
                return false;
            }
            // with nothing pending the response times add up to the pending-count sum
            if (pending.empty() && sum_response != sum_c) {
                why = "queue and stack sums differ at grant " + std::to_string(grants);
                return false;
            }
            for (Relation rel : kRelations) {
                Threshold th{rel, lambda};
                if (pending.empty() && th.holds(sum_star / gn) != th.holds(sum_response / n)) {
                    why = "averaged forms disagree at grant " + std::to_string(grants);
                    return false;
                }
            }
        }
    }
    (void)requests;
    return true;
}

Outcome criterion8() {
    Outcome out;
    auto expect = [&](const char* what, bool got, bool want) {
        if (got != want) {
            out.pass = false;
            out.detail += std::string(what) + " gave " + (got ? "YES; " : "NO; ");
        }
    };
    expect("immediate <= 1", decide_art(immediate_grant(), le(q(1))).answer, true);
    expect("immediate < 1", decide_art(immediate_grant(), lt(q(1))).answer, false);
    expect("batch <= 2", decide_art(batch_grant(), le(q(2))).answer, true);
    expect("batch < 2", decide_art(batch_grant(), lt(q(2))).answer, false);

    Rng rng(8008);
    long grants = 0;
    int traces = 0;
    std::vector<ClientServerSpec> specs = {immediate_grant(), batch_grant(), lazy_grant()};
    for (int i = 0; i < 20; ++i) specs.push_back(random_client_server(rng, 3, 6));
    for (const auto& spec : specs)
        for (const auto& lambda : {q(1, 2), q(1), q(2), q(7, 3)}) {
            std::string why;
            ++traces;
            if (!check_trace_identity(spec, lambda, rng, 1000, grants, why)) {
                out.pass = false;
                out.detail += "trace identity: " + why + "; ";
                break;
            }
        }
    if (out.pass)
        out.detail = "immediate grant ART = 1, batch ART = 2, identity held at " + std::to_string(grants) +
                     " grants over " + std::to_string(traces) + " traces";
    return out;
}

Outcome criterion9() {
    Rng rng(9009);
    const int instances = 200;
    const std::size_t len = 10, pump_len = 8;
    int bad = 0;
    long words = 0, pump_words = 0;
    std::string first;
    auto report = [&](const std::string& what) {
        if (bad++ == 0) first = what;
    };
    for (int n = 0; n < instances; ++n) {
        // automaton to grammar
        PdaShape shape;
        shape.max_states = 3;
        shape.max_transitions = 6;
        shape.symbols = 2;
        shape.omega = false;
        Pda p = random_pda(rng, shape);
        WordSet direct = accepted_words(p, len);
        Cfg from_pda = pda_to_cfg(p);
        WordSet derived = derivable_words(from_pda, len)[from_pda.start];
        words += static_cast<long>(direct.size());
        if (direct != derived) report("pda_to_cfg, instance " + std::to_string(n));

        // normal form and pruning
        Cfg g = random_cfg(rng, 3, 2, 6);
        WordSet lang = derivable_words(g, len)[g.start];
        Cfg cnf = to_cnf(g);
        if (!satisfies_cnf(cnf)) report("to_cnf shape, instance " + std::to_string(n));
        if (derivable_words(cnf, len)[cnf.start] != lang) report("to_cnf language, instance " + std::to_string(n));
        Cfg pruned = prune(cnf);
        if (!satisfies_pruned(pruned) && !pruned.productions.empty())
            report("prune shape, instance " + std::to_string(n));
        if (derivable_words(pruned, len)[pruned.start] != lang) report("prune language, instance " + std::to_string(n));
        for (const auto& w : lang)
            if (w.size() <= 6 && !cyk(pruned, w)) report("cyk rejects a derived word, instance " + std::to_string(n));

        // pump grammars of every nonterminal
        if (pruned.productions.empty()) continue;
        for (NonterminalId a = 0; a < pruned.num_nonterminals(); ++a) {
            Cfg pair = pump_grammar_pair(pruned, a);
            Cfg left = pump_grammar_left(pruned, a);
            WordSet pairs = pump_pairs(pruned, a, pump_len);
            pump_words += static_cast<long>(pairs.size());
            if (derivable_words(pair, pump_len)[pair.start] != pairs)
                report("pump pair, instance " + std::to_string(n) + " nonterminal " + pruned.nonterminals[a]);
            if (derivable_words(left, pump_len)[left.start] != pump_lefts(pruned, a, pump_len))
                report("pump left, instance " + std::to_string(n) + " nonterminal " + pruned.nonterminals[a]);
        }
    }
    Outcome out;
    out.pass = bad == 0;
    out.detail = std::to_string(instances) + " automata and " + std::to_string(instances) + " grammars, " +
                 std::to_string(words) + " accepted words and " +
                 std::to_string(pump_words) + " pump words compared, " + std::to_string(bad) + " failures";
    if (!first.empty()) out.detail += "; first: " + first;
    return out;
}

}  // namespace

int main() {
    struct Entry {
        int id;
        const char* name;
        std::function<Outcome()> run;
        double limit_s;  // 0 for no time limit
    };
    // criterion 7 summarizes checks made inside 3 and 4, so it runs after them
    std::vector<Entry> entries = {
        {1, "E1 stack cost separation", criterion1, 10},
        {2, "block language letter cost separation", criterion2, 10},
        {3, "no-push suite matches the graph oracle", criterion3, 0},
        {4, "pushdown suite: oracle YES implies pipeline YES", criterion4, 0},
        {5, "min_letter_cost against derivation trees", criterion5, 0},
        {6, "IASC equals SASC on accepting-only or positive pricing", criterion6, 0},
        {7, "monotonicity, strictness and scaling", criterion7, 0},
        {8, "average response time", criterion8, 0},
        {9, "grammar transformations by enumeration", criterion9, 0},
    };
    int failed = 0;
    for (const auto& e : entries) {
        auto started = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = e.run();
        } catch (const std::exception& ex) {
            o.pass = false;
            o.detail = std::string("exception: ") + ex.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
        if (e.limit_s > 0 && secs >= e.limit_s) {
            o.pass = false;
            o.detail += " (too slow)";
        }
        failed += !o.pass;
        char timing[32];
        std::snprintf(timing, sizeof timing, "%.2fs", secs);
        std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << e.id << ": " << e.name << " [" << timing
                  << "] " << o.detail << std::endl;
    }
    return failed == 0 ? 0 : 1;
}
