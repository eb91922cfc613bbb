#include "stoprules/normal_approx.hpp"

#include <cmath>
#include <stdexcept>

#include "stoprules/prob_core.hpp"

namespace stoprules {

NormalParams normal_params(const RewardModel& model, const WaitingTimeSpec& spec) {
    return NormalParams{nb_mean(model, spec), nb_variance(model, spec)};
}

double std_normal_cdf(double x) {
    if (!std::isfinite(x))
        throw std::domain_error("std_normal_cdf: x must be finite");
    return 0.5 * std::erfc(-x / std::sqrt(2.0));
}

double tail_normal(const RewardModel& model, const WaitingTimeSpec& spec, std::int64_t b) {
    if (b < 0)
        throw std::invalid_argument("tail_normal: b must be >= 0");
    const double rq = static_cast<double>(spec.r) * model.q();
    const double z = (static_cast<double>(b) * model.p() - rq) / std::sqrt(rq);
    return 1.0 - std_normal_cdf(z);
}

double approximation_error(const RewardModel& model, const WaitingTimeSpec& spec,
                           std::int64_t b) {
    const double exact_tail = 1.0 - nb_cdf(model, spec, b);
    return std::fabs(tail_normal(model, spec, b) - exact_tail);
}

}  // namespace stoprules
