// pdcost: command-line front end for the average-cost decision procedures.

#include "pdcost/command.hpp"

#include <CLI11.hpp>
#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include <cstdlib>
#include <iostream>

int main(int argc, char** argv) {
    spdlog::set_default_logger(spdlog::stderr_color_mt("pdcost"));
    spdlog::set_level(spdlog::level::warn);
    if (const char* level = std::getenv("PDCOST_LOG")) spdlog::set_level(spdlog::level::from_str(level));

    CLI::App app{"Average stack cost and average letter cost decisions for pushdown models"};
    app.require_subcommand(1);

    pdcost::AnalysisRequest req;
    std::string mode, rel, lambda, format = "human", rule;

    auto add_common = [&](CLI::App* sub, bool threshold, bool with_mode) {
        sub->add_option("model", req.input_path, "model file")->required();
        if (with_mode) sub->add_option("--mode", mode, "inf or sup")->check(CLI::IsMember({"inf", "sup"}));
        if (threshold) {
            sub->add_option("--rel", rel, "lt or le")->check(CLI::IsMember({"lt", "le"}))->required();
            sub->add_option("--lambda", lambda, "threshold, p/q or decimal")->required();
        }
        sub->add_option("--format", format, "human or json")->check(CLI::IsMember({"human", "json"}));
    };
    add_common(app.add_subcommand("asc", "infimum/supremum average stack cost (IASC/SASC)"), true, true);
    add_common(app.add_subcommand("avglc", "average letter cost (finite words or, for omega-pda, infinite)"), true,
               true);
    add_common(app.add_subcommand("mincost", "minimum letter cost over a finite-word language"), false, false);
    add_common(app.add_subcommand("game", "one-player mean-payoff and Büchi game on a weighted pushdown system"),
               true, true);
    add_common(app.add_subcommand("art", "average response time of a client-server model"), true, false);
    add_common(app.add_subcommand("factorize", "list the components of the omega-language factorization"), false,
               false);
    auto* oracle = app.add_subcommand("oracle", "bounded-stack brute-force check");
    add_common(oracle, true, true);
    oracle->add_option("--stack-bound", req.stack_bound, "stack height bound H");
    oracle->add_option("--costs", rule, "letter or stack")->check(CLI::IsMember({"letter", "stack"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    req.command = app.get_subcommands().front()->get_name();
    if (!mode.empty()) req.mode = mode == "sup" ? pdcost::LimitMode::Sup : pdcost::LimitMode::Inf;
    if (!rule.empty()) req.cost_rule = rule;
    req.format = format == "json" ? pdcost::OutputFormat::Json : pdcost::OutputFormat::Human;
    if (!lambda.empty()) {
        auto bound = pdcost::parse_rational(lambda);
        if (!bound) {
            std::cerr << "error: --lambda expects p/q or a decimal, got '" << lambda << "'\n";
            return 2;
        }
        req.threshold = pdcost::Threshold{*pdcost::parse_relation(rel), *bound};
    }

    pdcost::CommandResult result = pdcost::run_command(req);
    std::cout << result.output;
    if (!result.error.empty()) std::cerr << "error: " << result.error << "\n";
    return result.exit_code;
}
