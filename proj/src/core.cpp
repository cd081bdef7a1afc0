#include "pdcost/core.hpp"

#include "pdcost/error.hpp"

#include <algorithm>
#include <numeric>

namespace pdcost {

namespace {

template <class Names>
std::optional<std::uint32_t> find_name(const Names& names, std::string_view name) {
    auto it = std::find(names.begin(), names.end(), name);
    if (it == names.end()) return std::nullopt;
    return static_cast<std::uint32_t>(it - names.begin());
}

}  // namespace

std::optional<StateId> Pda::find_state(std::string_view name) const {
    return find_name(states, name);
}
std::optional<LetterId> Pda::find_letter(std::string_view name) const {
    return find_name(input_alphabet, name);
}
std::optional<SymbolId> Pda::find_symbol(std::string_view name) const {
    return find_name(stack_alphabet, name);
}

std::vector<bool> Pda::accepting_mask() const {
    std::vector<bool> mask(states.size(), false);
    for (StateId q : accepting_states)
        if (q < mask.size()) mask[q] = true;
    return mask;
}

std::vector<bool> Pda::initial_mask() const {
    std::vector<bool> mask(states.size(), false);
    for (StateId q : initial_states)
        if (q < mask.size()) mask[q] = true;
    return mask;
}

std::string Pda::symbol_name(SymbolId s) const {
    if (s == kBottom) return "_";
    return s < stack_alphabet.size() ? stack_alphabet[s] : "?" + std::to_string(s);
}

std::uint64_t StackPricing::max_cost() const noexcept {
    std::uint64_t m = 0;
    for (auto v : cost) m = std::max(m, v);
    return m;
}

std::string to_string(Relation r) { return r == Relation::Strict ? "<" : "<="; }

std::string to_string(const Threshold& t) { return to_string(t.relation) + " " + to_string(t.bound); }

bool applicable(const Configuration& config, const Transition& t) {
    return config.state == t.from && config.top() == t.top;
}

Configuration step(const Configuration& config, const Transition& t) {
    if (config.state != t.from)
        throw PreconditionError("transition leaves state " + std::to_string(t.from) +
                                " but the configuration is in state " + std::to_string(config.state));
    if (config.top() != t.top)
        throw PreconditionError("transition expects a different top of stack");
    if (std::find(t.push.begin(), t.push.end(), kBottom) != t.push.end())
        throw PreconditionError("transition pushes the bottom marker");
    Configuration next;
    next.state = t.to;
    next.last_letter = t.letter;
    next.stack.reserve(config.stack.size() + t.push.size());
    next.stack.assign(config.stack.begin(), config.stack.end());
    if (!t.reads_bottom()) next.stack.pop_back();
    next.stack.insert(next.stack.end(), t.push.begin(), t.push.end());
    return next;
}

std::vector<Configuration> simulate(const Pda& pda, StateId initial, std::span<const Transition> ts) {
    auto initials = pda.initial_mask();
    if (initial >= initials.size() || !initials[initial])
        throw SimulationError(0, "run does not start in an initial state");
    std::vector<Configuration> run;
    run.reserve(ts.size() + 1);
    run.push_back(Configuration{initial, {}, std::nullopt});
    for (std::size_t i = 0; i < ts.size(); ++i) {
        if (!applicable(run.back(), ts[i]))
            throw SimulationError(i, "transition " + std::to_string(i) + " is not applicable");
        run.push_back(step(run.back(), ts[i]));
    }
    return run;
}

std::vector<Configuration> simulate(const Pda& pda, std::span<const Transition> ts) {
    if (pda.initial_states.empty()) throw SimulationError(0, "automaton has no initial state");
    StateId initial = ts.empty() ? pda.initial_states.front() : ts.front().from;
    return simulate(pda, initial, ts);
}

std::uint64_t stack_cost(const StackPricing& c, std::span<const SymbolId> stack) {
    std::uint64_t sum = 0;
    for (SymbolId s : stack) {
        if (s >= c.cost.size())
            throw ModelError("stack symbol " + std::to_string(s) + " has no price");
        sum += c.cost[s];
    }
    return sum;
}

std::uint64_t stack_cost(const StackPricing& c, const Configuration& config) {
    return stack_cost(c, config.stack);
}

Rational asc_prefix(std::span<const Configuration> run, const StackPricing& c, std::size_t k) {
    if (k == 0) throw RangeError("average over an empty prefix");
    if (k > run.size())
        throw RangeError("prefix length " + std::to_string(k) + " exceeds run length " +
                         std::to_string(run.size()));
    Integer total = 0;
    for (std::size_t i = 0; i < k; ++i) total += Integer(std::to_string(stack_cost(c, run[i])));
    Rational avg(total, Integer(static_cast<unsigned long>(k)));
    avg.canonicalize();
    return avg;
}

std::vector<Diagnostic> validate(const Pda& pda) {
    std::vector<Diagnostic> out;
    auto error = [&](std::string msg) { out.push_back({Severity::Error, std::move(msg)}); };
    const auto nq = pda.num_states();
    if (pda.initial_states.empty()) error("no initial state");
    for (StateId q : pda.initial_states)
        if (q >= nq) error("initial state " + std::to_string(q) + " is not declared");
    for (StateId q : pda.accepting_states)
        if (q >= nq) error("accepting state " + std::to_string(q) + " is not declared");
    for (std::size_t i = 0; i < pda.transitions.size(); ++i) {
        const auto& t = pda.transitions[i];
        std::string where = "transition " + std::to_string(i) + ": ";
        if (t.from >= nq) error(where + "source state is not declared");
        if (t.to >= nq) error(where + "target state is not declared");
        if (t.letter >= pda.num_letters()) error(where + "letter is not declared");
        if (!t.reads_bottom() && t.top >= pda.num_symbols())
            error(where + "unknown stack symbol " + std::to_string(t.top));
        for (SymbolId s : t.push) {
            if (s == kBottom)
                error(where + "pushes the bottom marker");
            else if (s >= pda.num_symbols())
                error(where + "pushes unknown stack symbol " + std::to_string(s));
        }
    }
    if (has_errors(out)) return out;

    // State-graph reachability, ignoring the stack: accepting states outside it
    // can never be visited.
    std::vector<std::vector<StateId>> succ(nq);
    for (const auto& t : pda.transitions) succ[t.from].push_back(t.to);
    std::vector<bool> seen(nq, false);
    std::vector<StateId> work(pda.initial_states.begin(), pda.initial_states.end());
    for (StateId q : work) seen[q] = true;
    while (!work.empty()) {
        StateId q = work.back();
        work.pop_back();
        for (StateId r : succ[q])
            if (!seen[r]) {
                seen[r] = true;
                work.push_back(r);
            }
    }
    for (StateId q : pda.accepting_states)
        if (!seen[q])
            out.push_back({Severity::Warning, "accepting state " + pda.states[q] + " is unreachable"});
    return out;
}

bool has_errors(std::span<const Diagnostic> diagnostics) {
    return std::any_of(diagnostics.begin(), diagnostics.end(),
                       [](const Diagnostic& d) { return d.severity == Severity::Error; });
}

void require_valid(const Pda& pda) {
    for (const auto& d : validate(pda))
        if (d.severity == Severity::Error) throw ModelError(d.message);
}

std::string to_string(const ExtendedRational& value) {
    switch (value.kind()) {
    case ExtendedRational::Kind::NegInfinity: return "-inf";
    case ExtendedRational::Kind::PosInfinity: return "+inf";
    case ExtendedRational::Kind::Finite: break;
    }
    return to_string(value.value());
}

}  // namespace pdcost
