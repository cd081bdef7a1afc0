#pragma once

#include "pdcost/core.hpp"
#include "pdcost/omega.hpp"

#include <optional>
#include <string>

namespace pdcost {

enum class OutputFormat { Human, Json };

struct AnalysisRequest {
    std::string command;  // asc avglc mincost game art factorize oracle
    std::string input_path;
    std::optional<std::string> input_text;  // used instead of the file when set
    std::optional<LimitMode> mode;
    std::optional<Threshold> threshold;
    OutputFormat format = OutputFormat::Human;
    std::size_t stack_bound = 4;               // oracle only
    std::optional<std::string> cost_rule;      // oracle only: "letter" or "stack"
};

struct CommandResult {
    int exit_code = 2;  // 0 yes, 1 no, 2 error
    std::string output;
    std::string error;
};

/// Parses --rel / --lambda style values; nullopt on malformed input.
std::optional<Relation> parse_relation(std::string_view text);

CommandResult run_command(const AnalysisRequest& req);

inline constexpr const char* kReportSchema = "pdcost-report/1";

}  // namespace pdcost
