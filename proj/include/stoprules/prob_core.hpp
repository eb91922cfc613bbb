#pragma once

#include <cstdint>

#include "stoprules/reward_model.hpp"

namespace stoprules {

// Pr[T = k] = p q^k, the chance of k negative rewards before the first
// positive one.
double geometric_pmf(const RewardModel& model, std::int64_t k);

// Probability generating function of the waiting time to the r-th positive
// reward, G_r(z) = [p / (1 - q z)]^r, for z in [0, 1].
double pgf_eval(const RewardModel& model, const WaitingTimeSpec& spec, double z);

// E[W_r] = r q / p, the expected count of negative rewards.
double nb_mean(const RewardModel& model, const WaitingTimeSpec& spec);

// Var[W_r] = r q / p^2.
double nb_variance(const RewardModel& model, const WaitingTimeSpec& spec);

// log Pr[W_r = k] = log C(r+k-1, k) + r log p + k log q, via log-gamma.
double nb_log_pmf(const RewardModel& model, const WaitingTimeSpec& spec, std::int64_t k);

// Pr[W_r = k] = C(r+k-1, k) p^r q^k. The generalized-binomial form
// C(-r, k) p^r (-q)^k is rewritten with positive terms so nothing
// alternates in sign; evaluation goes through nb_log_pmf.
double nb_pmf(const RewardModel& model, const WaitingTimeSpec& spec, std::int64_t k);

// Same pmf by the multiplicative recurrence
//   Pr[k] = Pr[k-1] * q (r+k-1) / k,   Pr[0] = p^r.
// Kept as an independent route for cross-checking nb_pmf, not as a fast path.
double nb_pmf_by_recurrence(const RewardModel& model, const WaitingTimeSpec& spec,
                            std::int64_t k);

// Pr[W_r <= b]: the exact finite sum of nb_pmf over 0..b. No truncation or
// approximation is involved.
double nb_cdf(const RewardModel& model, const WaitingTimeSpec& spec, std::int64_t b);

}  // namespace stoprules
