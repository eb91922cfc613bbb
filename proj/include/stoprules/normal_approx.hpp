#pragma once

#include <cstdint>

#include "stoprules/reward_model.hpp"

namespace stoprules {

// Parameters of the normal variate approximating W_r.
struct NormalParams {
    double mu;      // r q / p
    double sigma2;  // r q / p^2
};

NormalParams normal_params(const RewardModel& model, const WaitingTimeSpec& spec);

// Standard normal CDF, Phi(x) = erfc(-x / sqrt 2) / 2. The erfc route keeps
// the absolute error well below 1e-9 over all finite x (glibc erfc is
// accurate to a few ulp, including deep in the tails). Non-finite input is
// rejected.
double std_normal_cdf(double x);

// Pr[W_r > b] approximated as 1 - Phi((b p - r q) / sqrt(r q)). This is the
// raw standardization with no continuity correction.
double tail_normal(const RewardModel& model, const WaitingTimeSpec& spec, std::int64_t b);

// |tail_normal - exact tail|, where the exact tail is 1 - nb_cdf(b).
double approximation_error(const RewardModel& model, const WaitingTimeSpec& spec,
                           std::int64_t b);

}  // namespace stoprules
