#pragma once

#include <cstdint>
#include <stdexcept>
#include <variant>

#include "stoprules/reward_model.hpp"

namespace stoprules {

enum class Conclusion { Success, Failure };

// Fixed-positive-count stopping rule: stop after r positive rewards, then
// conclude Success iff the observed negatives W satisfy W/r < rho_star
// strictly. The W/r == rho_star boundary is a Failure.
struct RuleAConfig {
    int r;
    double rho_star;

    RuleAConfig(int target_positives, double rho_star_)
        : r(target_positives), rho_star(rho_star_) {
        if (r < 1)
            throw std::invalid_argument("RuleAConfig: r must be >= 1");
        if (!(rho_star > 0.0) || !(rho_star <= 1.0))
            throw std::invalid_argument("RuleAConfig: rho_star must lie in (0,1]");
    }
};

struct CostModel {
    double c;  // cost per observation, > 0

    explicit CostModel(double cost_per_observation) : c(cost_per_observation) {
        if (!(c > 0.0))
            throw std::invalid_argument("CostModel: c must be > 0");
    }
};

// How the bound b on the negative-reward count is obtained: given directly,
// or derived from E[W_r] additively (E + d) or multiplicatively (alpha * E)
// and rounded half-up to the nearest integer.
struct AbsoluteBound {
    std::int64_t b;
};
struct AdditiveBound {
    double d;  // > 0
};
struct MultiplicativeBound {
    double alpha;  // >= 1
};
using BoundSpec = std::variant<AbsoluteBound, AdditiveBound, MultiplicativeBound>;

struct RuleAReport {
    double expected_negatives;    // E[W_r]
    std::int64_t resolved_bound;  // b
    double exceedance_exact;      // Pr[W_r > b], exact
    double exceedance_approx;     // same, normal approximation
    double approx_error;          // |approx - exact|
    double min_cost;              // r c, unavoidable
    double max_cost_at_bound;     // (r + b) c, total cost if W_r lands on b
};

// rho(p) = q / p: expected negatives per positive reward. Below 1 iff p > 1/2.
double rewards_ratio(const RewardModel& model);

Conclusion classify_outcome(std::int64_t negatives, const RuleAConfig& config);

// p_hat = r / (r + W), the point estimate of p from an observed episode.
double estimate_p(std::int64_t negatives, int r);

std::int64_t resolve_bound(const BoundSpec& spec, const RewardModel& model,
                           const RuleAConfig& config);

// Pr[W_r > b] = 1 - nb_cdf(b).
double exceedance_exact(const RewardModel& model, const RuleAConfig& config, std::int64_t b);

// Normal-approximation counterpart of exceedance_exact.
double exceedance_approx(const RewardModel& model, const RuleAConfig& config, std::int64_t b);

double episode_cost(std::int64_t observations, const CostModel& costs);

RuleAReport analyze_rule_a(const RewardModel& model, const RuleAConfig& config,
                           const CostModel& costs, const BoundSpec& bound);

}  // namespace stoprules
