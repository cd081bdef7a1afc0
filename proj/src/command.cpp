#include "pdcost/command.hpp"

#include "pdcost/art.hpp"
#include "pdcost/asc.hpp"
#include "pdcost/avglc.hpp"
#include "pdcost/error.hpp"
#include "pdcost/games.hpp"
#include "pdcost/mincost.hpp"
#include "pdcost/model_io.hpp"
#include "pdcost/oracle.hpp"

#include <json.hpp>
#include <spdlog/spdlog.h>

#include <chrono>

namespace pdcost {

std::optional<Relation> parse_relation(std::string_view text) {
    if (text == "lt" || text == "<") return Relation::Strict;
    if (text == "le" || text == "<=") return Relation::NonStrict;
    return std::nullopt;
}

namespace {

using nlohmann::json;

struct Report {
    std::string problem;
    std::vector<std::pair<std::string, std::string>> inputs;
    std::string answer;  // YES / NO / UNKNOWN / "" for value-only commands
    std::optional<std::string> value;
    std::vector<std::string> details;
    int exit_code = 1;
};

const Threshold& need_threshold(const AnalysisRequest& req) {
    if (!req.threshold) throw PreconditionError("command '" + req.command + "' needs --lambda");
    return *req.threshold;
}

template <class T>
const T& need_model(const ModelFile& file, const std::string& command, const char* what) {
    const T* m = std::get_if<T>(&file.model);
    if (!m) throw PreconditionError("command '" + command + "' expects " + what + ", got " + model_kind(file.model));
    return *m;
}

const Pda& need_omega(const ModelFile& file, const std::string& command) {
    const Pda& a = need_model<Pda>(file, command, "an omega-pda model");
    if (!a.omega) throw PreconditionError("command '" + command + "' expects an omega-pda model, got pda");
    return a;
}

const LetterCost& need_costs(const ModelFile& file, const std::string& command) {
    if (!file.costs) throw PreconditionError("command '" + command + "' needs a costs: section");
    return *file.costs;
}

Report from_decision(const Decision& d) {
    Report r;
    r.problem = d.problem;
    r.inputs = d.inputs;
    r.answer = d.answer ? "YES" : "NO";
    r.exit_code = d.answer ? 0 : 1;
    return r;
}

Report dispatch(const AnalysisRequest& req, const ModelFile& file) {
    const std::string& cmd = req.command;
    LimitMode mode = req.mode.value_or(LimitMode::Inf);

    if (cmd == "asc") {
        const Pda& a = need_omega(file, cmd);
        if (!file.pricing) throw PreconditionError("command 'asc' needs a pricing: section");
        return from_decision(decide_asc(a, *file.pricing, need_threshold(req), mode));
    }
    if (cmd == "avglc") {
        const LetterCost& lc = need_costs(file, cmd);
        const Threshold& th = need_threshold(req);
        if (const Cfg* g = std::get_if<Cfg>(&file.model)) return from_decision(decide_avg_lc(*g, lc, th));
        const Pda& a = need_model<Pda>(file, cmd, "a cfg, pda or omega-pda model");
        if (a.omega) {
            Report r = from_decision(decide_avg_lc_omega(a, lc, th, mode));
            r.inputs.emplace_back("mode", to_string(mode));
            return r;
        }
        return from_decision(decide_avg_lc(pda_to_cfg(a), lc, th));
    }
    if (cmd == "mincost") {
        const LetterCost& lc = need_costs(file, cmd);
        Cfg g;
        if (const Cfg* c = std::get_if<Cfg>(&file.model)) {
            g = *c;
        } else {
            const Pda& a = need_model<Pda>(file, cmd, "a cfg or pda model");
            if (a.omega) throw PreconditionError("command 'mincost' expects a finite-word model");
            g = pda_to_cfg(a);
        }
        Report r;
        r.problem = "mincost";
        r.value = to_string(min_letter_cost(prune(g), lc));
        r.exit_code = 0;
        return r;
    }
    if (cmd == "game") {
        const Wps& w = need_model<Wps>(file, cmd, "a wps model");
        return from_decision(solve_wps_game(w, GameObjective{mode, need_threshold(req), w.buchi}));
    }
    if (cmd == "art") {
        if (mode == LimitMode::Sup) throw PreconditionError("average response time is decided for liminf only");
        const auto& spec = need_model<ClientServerSpec>(file, cmd, "a client-server model");
        return from_decision(decide_art(spec, need_threshold(req)));
    }
    if (cmd == "factorize") {
        const Pda& a = need_omega(file, cmd);
        Factorization fac = factorize(a);
        Report r;
        r.problem = "factorize";
        r.value = std::to_string(fac.components.size());
        for (const auto& c : fac.components)
            r.details.push_back(a.states[c.state] + " " + a.symbol_name(c.symbol));
        r.answer = fac.components.empty() ? "NO" : "YES";
        r.exit_code = fac.components.empty() ? 1 : 0;
        return r;
    }
    if (cmd == "oracle") {
        const Pda& a = need_omega(file, cmd);
        std::string rule = req.cost_rule.value_or(file.costs ? "letter" : "stack");
        StepCosts costs;
        if (rule == "letter") {
            costs = StepCosts::letters(need_costs(file, cmd));
        } else if (rule == "stack") {
            if (!file.pricing) throw PreconditionError("stack costs need a pricing: section");
            costs = StepCosts::stack(*file.pricing);
        } else {
            throw PreconditionError("cost rule must be letter or stack");
        }
        const Threshold& th = need_threshold(req);
        OracleResult o = oracle_decide(a, costs, th, mode, req.stack_bound);
        Report r;
        r.problem = "oracle";
        r.inputs = {{"relation", to_string(th.relation)},
                    {"lambda", to_string(th.bound)},
                    {"mode", to_string(mode)},
                    {"costs", rule},
                    {"stack_bound", std::to_string(req.stack_bound)}};
        r.answer = to_string(o.answer);
        r.value = to_string(o.value);
        r.exit_code = o.answer == OracleAnswer::Yes ? 0 : 1;
        return r;
    }
    throw PreconditionError("unknown command '" + cmd + "'");
}

std::string render_human(const Report& r) {
    std::string out;
    if (!r.answer.empty()) out += r.answer + "\n";
    out += "problem: " + r.problem + "\n";
    for (const auto& [k, v] : r.inputs) out += k + ": " + v + "\n";
    if (r.value) out += "value: " + *r.value + "\n";
    for (const auto& d : r.details) out += "  " + d + "\n";
    return out;
}

std::string render_json(const AnalysisRequest& req, const Report& r, double ms) {
    json j;
    j["schema"] = kReportSchema;
    j["command"] = req.command;
    j["problem"] = r.problem;
    json inputs = json::object();
    for (const auto& [k, v] : r.inputs) inputs[k] = v;
    j["inputs"] = inputs;
    if (!r.answer.empty()) j["answer"] = r.answer;
    if (r.value) j["value"] = *r.value;
    if (!r.details.empty()) j["components"] = r.details;
    j["elapsed_ms"] = ms;
    return j.dump(2) + "\n";
}

}  // namespace

CommandResult run_command(const AnalysisRequest& req) {
    CommandResult result;
    auto started = std::chrono::steady_clock::now();
    try {
        ModelFile file = req.input_text ? parse_model(*req.input_text) : load_model(req.input_path);
        spdlog::debug("parsed {} model", model_kind(file.model));
        Report r = dispatch(req, file);
        double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();
        spdlog::info("{} finished in {:.1f} ms", req.command, ms);
        result.exit_code = r.exit_code;
        result.output = req.format == OutputFormat::Json ? render_json(req, r, ms) : render_human(r);
    } catch (const std::exception& e) {
        result.exit_code = 2;
        result.error = e.what();
        if (req.format == OutputFormat::Json) {
            json j;
            j["schema"] = kReportSchema;
            j["command"] = req.command;
            j["error"] = e.what();
            result.output = j.dump(2) + "\n";
        }
    }
    return result;
}

}  // namespace pdcost
