#include "stoprules/rule_a.hpp"

#include <cmath>

#include "stoprules/normal_approx.hpp"
#include "stoprules/prob_core.hpp"

namespace stoprules {

double rewards_ratio(const RewardModel& model) {
    return model.q() / model.p();
}

Conclusion classify_outcome(std::int64_t negatives, const RuleAConfig& config) {
    if (negatives < 0)
        throw std::invalid_argument("classify_outcome: negatives must be >= 0");
    const double ratio = static_cast<double>(negatives) / static_cast<double>(config.r);
    return ratio < config.rho_star ? Conclusion::Success : Conclusion::Failure;
}

double estimate_p(std::int64_t negatives, int r) {
    if (negatives < 0 || r < 1)
        throw std::invalid_argument("estimate_p: need negatives >= 0 and r >= 1");
    return static_cast<double>(r) / static_cast<double>(r + negatives);
}

namespace {

// Round half-up to the nearest integer. The 1e-9 nudge absorbs cases where a
// mathematically exact .5 tie lands just below it in floating point
// (e.g. 1.5 * E computed as 7.499999999999998).
std::int64_t round_half_up(double x) {
    return static_cast<std::int64_t>(std::floor(x + 0.5 + 1e-9));
}

}  // namespace

std::int64_t resolve_bound(const BoundSpec& spec, const RewardModel& model,
                           const RuleAConfig& config) {
    const double expected = nb_mean(model, WaitingTimeSpec(config.r));
    std::int64_t b = 0;
    if (const auto* abs = std::get_if<AbsoluteBound>(&spec)) {
        b = abs->b;
    } else if (const auto* add = std::get_if<AdditiveBound>(&spec)) {
        if (!(add->d > 0.0))
            throw std::invalid_argument("resolve_bound: additive d must be > 0");
        b = round_half_up(expected + add->d);
    } else {
        const auto& mult = std::get<MultiplicativeBound>(spec);
        if (!(mult.alpha >= 1.0))
            throw std::invalid_argument("resolve_bound: multiplicative alpha must be >= 1");
        b = round_half_up(mult.alpha * expected);
    }
    if (b < 0)
        throw std::invalid_argument("resolve_bound: resolved bound is negative");
    return b;
}

double exceedance_exact(const RewardModel& model, const RuleAConfig& config, std::int64_t b) {
    return 1.0 - nb_cdf(model, WaitingTimeSpec(config.r), b);
}

double exceedance_approx(const RewardModel& model, const RuleAConfig& config, std::int64_t b) {
    return tail_normal(model, WaitingTimeSpec(config.r), b);
}

double episode_cost(std::int64_t observations, const CostModel& costs) {
    if (observations < 0)
        throw std::invalid_argument("episode_cost: observations must be >= 0");
    return static_cast<double>(observations) * costs.c;
}

RuleAReport analyze_rule_a(const RewardModel& model, const RuleAConfig& config,
                           const CostModel& costs, const BoundSpec& bound) {
    const WaitingTimeSpec spec(config.r);
    RuleAReport report;
    report.expected_negatives = nb_mean(model, spec);
    report.resolved_bound = resolve_bound(bound, model, config);
    report.exceedance_exact = exceedance_exact(model, config, report.resolved_bound);
    report.exceedance_approx = exceedance_approx(model, config, report.resolved_bound);
    report.approx_error = std::fabs(report.exceedance_approx - report.exceedance_exact);
    report.min_cost = episode_cost(config.r, costs);
    report.max_cost_at_bound = episode_cost(config.r + report.resolved_bound, costs);
    return report;
}

}  // namespace stoprules
