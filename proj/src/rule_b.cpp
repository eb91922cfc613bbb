#include "stoprules/rule_b.hpp"

#include <cmath>

#include "log_choose.hpp"

namespace stoprules {

double win_prob_at(const RuleBConfig& config, const RewardModel& model, int k) {
    if (k < 0 || k > 2 * config.m)
        throw std::invalid_argument("win_prob_at: k must lie in [0, 2m]");
    const int m = config.m;
    // Log space keeps C(4m-k, 2m) in range for any m; at m <= a few hundred
    // it is also exact to ~1e-17 relative in extended precision.
    const long double log_f =
        detail::log_choose(4LL * m - k, 2LL * m) +
        static_cast<long double>(2 * m + 1) * std::logl(static_cast<long double>(model.p())) +
        static_cast<long double>(2 * m - k) * std::logl(static_cast<long double>(model.q()));
    return static_cast<double>(std::expl(log_f));
}

double success_prob(const RuleBConfig& config, const RewardModel& model) {
    long double sum = 0.0L;
    for (int k = 0; k <= 2 * config.m; ++k)
        sum += static_cast<long double>(win_prob_at(config, model, k));
    return static_cast<double>(sum);
}

double failure_prob(const RuleBConfig& config, const RewardModel& model) {
    return 1.0 - success_prob(config, model);
}

LengthRange episode_length_range(const RuleBConfig& config) {
    return LengthRange{2LL * config.m + 1, 4LL * config.m + 1};
}

RuleBReport analyze_rule_b(const RuleBConfig& config, const RewardModel& model) {
    RuleBReport report;
    report.per_length_probs.reserve(static_cast<std::size_t>(2 * config.m + 1));
    long double sum = 0.0L;
    for (int k = 0; k <= 2 * config.m; ++k) {
        const double f_k = win_prob_at(config, model, k);
        report.per_length_probs.emplace_back(k, f_k);
        sum += static_cast<long double>(f_k);
    }
    report.success_prob = static_cast<double>(sum);
    report.failure_prob = 1.0 - report.success_prob;
    const LengthRange range = episode_length_range(config);
    report.length_min = range.min;
    report.length_max = range.max;
    return report;
}

}  // namespace stoprules
