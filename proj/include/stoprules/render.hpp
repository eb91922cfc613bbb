#pragma once

#include <string>
#include <utility>
#include <vector>

#include "stoprules/rule_a.hpp"
#include "stoprules/rule_b.hpp"
#include "stoprules/simulator.hpp"
#include "stoprules/tables.hpp"

namespace stoprules {

enum class OutputFormat { Text, Json, Csv };

// Accepts "text", "json", "csv"; anything else is a usage error.
OutputFormat parse_format(const std::string& name);

struct DistOutput {
    double p;
    int r;
    std::vector<std::pair<std::string, double>> values;  // requested quantities, in order
};

struct RuleAInputs {
    double p;
    int r;
    double rho_star;
    double cost;
    std::optional<std::int64_t> observed_w;  // adds conclusion + p_hat when present
};

struct RuleBInputs {
    int m;
    double p;
};

// All renderers return a complete output string ending in '\n'. JSON uses
// two-space indentation and insertion-ordered keys so that parse + re-dump
// reproduces the bytes exactly. CSV is one header row plus data rows with a
// fixed column count per command.
std::string render_dist(const DistOutput& out, OutputFormat format);
std::string render_rule_a(const RuleAInputs& in, const RewardModel& model,
                          const RuleAReport& report, OutputFormat format);
std::string render_rule_b(const RuleBInputs& in, const RuleBReport& report,
                          OutputFormat format);
std::string render_simulation(const SimulationConfig& config, const SimulationSummary& summary,
                              OutputFormat format);
std::string render_reproduction(const ReproductionReport& report, OutputFormat format);

}  // namespace stoprules
