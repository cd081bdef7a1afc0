#pragma once

#include "pdcost/ext_rational.hpp"
#include "pdcost/rational.hpp"

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace pdcost {

using StateId = std::uint32_t;
using LetterId = std::uint32_t;
using SymbolId = std::uint32_t;

/// Stands for ⊥ wherever a stack symbol is expected. Never stored in a stack.
inline constexpr SymbolId kBottom = std::numeric_limits<SymbolId>::max();

/// δ(from, letter, top, to, push). `push` is written bottom to top: the last
/// element becomes the new top. Every transition reads exactly one letter.
struct Transition {
    StateId from = 0;
    LetterId letter = 0;
    SymbolId top = kBottom;
    StateId to = 0;
    std::vector<SymbolId> push;

    bool reads_bottom() const noexcept { return top == kBottom; }

    friend bool operator==(const Transition&, const Transition&) = default;
};

/// Pushdown automaton over finite words (omega == false, acceptance by final
/// state) or Büchi pushdown automaton over infinite words (omega == true).
struct Pda {
    std::vector<std::string> states;
    std::vector<std::string> input_alphabet;
    std::vector<std::string> stack_alphabet;  // ⊥ is implicit
    std::vector<StateId> initial_states;
    std::vector<StateId> accepting_states;
    std::vector<Transition> transitions;
    bool omega = false;

    std::size_t num_states() const noexcept { return states.size(); }
    std::size_t num_letters() const noexcept { return input_alphabet.size(); }
    std::size_t num_symbols() const noexcept { return stack_alphabet.size(); }

    std::optional<StateId> find_state(std::string_view name) const;
    std::optional<LetterId> find_letter(std::string_view name) const;
    std::optional<SymbolId> find_symbol(std::string_view name) const;

    std::vector<bool> accepting_mask() const;
    std::vector<bool> initial_mask() const;

    /// Name of a stack symbol, "_" for ⊥.
    std::string symbol_name(SymbolId s) const;

    friend bool operator==(const Pda&, const Pda&) = default;
};

/// (q, a, u): the stack is stored bottom to top without ⊥.
struct Configuration {
    StateId state = 0;
    std::vector<SymbolId> stack;
    std::optional<LetterId> last_letter;

    SymbolId top() const noexcept { return stack.empty() ? kBottom : stack.back(); }

    friend bool operator==(const Configuration&, const Configuration&) = default;
};

/// c : Γ → ℕ, c(⊥) = 0.
struct StackPricing {
    std::vector<std::uint64_t> cost;  // indexed by SymbolId

    std::uint64_t max_cost() const noexcept;
    friend bool operator==(const StackPricing&, const StackPricing&) = default;
};

/// lc : Σ → ℚ, indexed by letter (or terminal) id.
struct LetterCost {
    std::vector<Rational> cost;

    const Rational& operator[](LetterId a) const { return cost.at(a); }
    std::size_t size() const noexcept { return cost.size(); }
    friend bool operator==(const LetterCost&, const LetterCost&) = default;
};

enum class Relation { Strict, NonStrict };  // <, ≤

struct Threshold {
    Relation relation = Relation::NonStrict;
    Rational bound;

    bool strict() const noexcept { return relation == Relation::Strict; }

    /// value ⋈ bound
    bool holds(const Rational& value) const {
        return strict() ? value < bound : value <= bound;
    }
    bool holds(const ExtendedRational& value) const {
        if (value.is_neg_infinity()) return true;
        if (value.is_pos_infinity()) return false;
        return holds(value.value());
    }

    friend bool operator==(const Threshold&, const Threshold&) = default;
};

std::string to_string(Relation r);        // "<" or "<="
std::string to_string(const Threshold& t);  // "<= 3/2"

/// Outcome of a decision procedure.
struct Decision {
    bool answer = false;
    std::string problem;
    std::vector<std::pair<std::string, std::string>> inputs;
    std::optional<std::string> witness;

    friend bool operator==(const Decision&, const Decision&) = default;
};

/// Weighted pushdown system: singleton alphabet, integer weight per
/// transition and a Büchi set for the game objective.
struct Wps {
    Pda pda;
    std::vector<Integer> weights;  // indexed like pda.transitions
    std::vector<StateId> buchi;

    friend bool operator==(const Wps&, const Wps&) = default;
};

// Run semantics --------------------------------------------------------------

bool applicable(const Configuration& config, const Transition& t);

/// Successor configuration. For t.top = ⊥ the bottom marker is kept and the
/// push lands above it. Throws PreconditionError when t does not apply.
Configuration step(const Configuration& config, const Transition& t);

/// The run prefix from (initial, ⊥) following `ts`. Throws SimulationError
/// carrying the index of the first inapplicable transition.
std::vector<Configuration> simulate(const Pda& pda, std::span<const Transition> ts);
std::vector<Configuration> simulate(const Pda& pda, StateId initial, std::span<const Transition> ts);

std::uint64_t stack_cost(const StackPricing& c, const Configuration& config);
std::uint64_t stack_cost(const StackPricing& c, std::span<const SymbolId> stack);

/// (1/k) Σ_{i<k} c(run[i]).
Rational asc_prefix(std::span<const Configuration> run, const StackPricing& c, std::size_t k);

// Validation -----------------------------------------------------------------

enum class Severity { Error, Warning };

struct Diagnostic {
    Severity severity;
    std::string message;
};

std::vector<Diagnostic> validate(const Pda& pda);
bool has_errors(std::span<const Diagnostic> diagnostics);

/// Throws ModelError listing the first error diagnostic, if any.
void require_valid(const Pda& pda);

}  // namespace pdcost
