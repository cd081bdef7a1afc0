#pragma once

#include "pdcost/art.hpp"
#include "pdcost/core.hpp"
#include "pdcost/grammar.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <variant>

namespace pdcost {

using Model = std::variant<Pda, Wps, ClientServerSpec, Cfg>;

/// A parsed model file: the model plus the optional cost sections.
struct ModelFile {
    Model model;
    std::optional<StackPricing> pricing;
    std::optional<LetterCost> costs;

    friend bool operator==(const ModelFile&, const ModelFile&) = default;
};

/// Line format, one section per header (`name:` as the first token):
///
///   kind: omega-pda
///   states: A U B
///   initial: A
///   accepting: A
///   input: a
///   stack: alpha beta
///   pricing: alpha=0 beta=3
///   costs: a=1/2
///   trans:
///     A a _ -> U alpha
///     U a alpha -> U alpha alpha
///
/// Kinds are pda, omega-pda, wps, client-server and cfg. A transition reads
/// `state letter top -> state push...`, with `_` for ⊥ and `-` for an empty
/// push. Weighted systems drop the letter and end each transition with `: weight`
/// and list the objective states under `buchi:`. Client-server models use
/// `s r|g|# [zero|nonzero] -> s'`. Grammars use `terminals:`, `nonterminals:`,
/// `start:` and `rules:` with lines `S -> a S b` (`-` for ε).
/// Lines whose first non-blank character is '#' are comments.
ModelFile parse_model(std::string_view text);

std::string serialize(const ModelFile& file);

/// Reads and parses a file; ParseError messages are prefixed with the path.
ModelFile load_model(const std::string& path);

std::string model_kind(const Model& m);

}  // namespace pdcost
