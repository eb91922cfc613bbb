#pragma once

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "stoprules/reward_model.hpp"

namespace stoprules {

// Race-to-threshold stopping rule: agents A (positives) and B (negatives)
// each score one point per observation; the first to reach h = 2m+1 points
// ends the episode and wins. h is kept odd so a winner always exists within
// 4m+1 observations.
struct RuleBConfig {
    int m;

    explicit RuleBConfig(int threshold_parameter) : m(threshold_parameter) {
        if (m < 0)
            throw std::invalid_argument("RuleBConfig: m must be >= 0");
    }

    int h() const { return 2 * m + 1; }
};

struct LengthRange {
    std::int64_t min;  // 2m+1
    std::int64_t max;  // 4m+1
};

struct RuleBReport {
    double success_prob;  // P_m
    double failure_prob;  // 1 - P_m
    std::int64_t length_min;
    std::int64_t length_max;
    std::vector<std::pair<int, double>> per_length_probs;  // (k, f_k), k = 0..2m
};

// f_k = C(4m-k, 2m) p^(2m+1) q^(2m-k): the probability that A wins exactly
// at observation 4m+1-k. Valid for 0 <= k <= 2m.
double win_prob_at(const RuleBConfig& config, const RewardModel& model, int k);

// P_m = sum of f_k over k = 0..2m: the probability A reaches h first.
double success_prob(const RuleBConfig& config, const RewardModel& model);

// 1 - P_m; equals success_prob with p and q swapped.
double failure_prob(const RuleBConfig& config, const RewardModel& model);

LengthRange episode_length_range(const RuleBConfig& config);

RuleBReport analyze_rule_b(const RuleBConfig& config, const RewardModel& model);

}  // namespace stoprules
