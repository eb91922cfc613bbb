#include "stoprules/prob_core.hpp"

#include <cmath>
#include <stdexcept>

#include "log_choose.hpp"

namespace stoprules {

double geometric_pmf(const RewardModel& model, std::int64_t k) {
    if (k < 0)
        throw std::invalid_argument("geometric_pmf: k must be >= 0");
    return model.p() * std::pow(model.q(), static_cast<double>(k));
}

double pgf_eval(const RewardModel& model, const WaitingTimeSpec& spec, double z) {
    if (!(z >= 0.0) || !(z <= 1.0))
        throw std::domain_error("pgf_eval: z must lie in [0,1]");
    return std::pow(model.p() / (1.0 - model.q() * z), static_cast<double>(spec.r));
}

double nb_mean(const RewardModel& model, const WaitingTimeSpec& spec) {
    return static_cast<double>(spec.r) * model.q() / model.p();
}

double nb_variance(const RewardModel& model, const WaitingTimeSpec& spec) {
    return static_cast<double>(spec.r) * model.q() / (model.p() * model.p());
}

double nb_log_pmf(const RewardModel& model, const WaitingTimeSpec& spec, std::int64_t k) {
    if (k < 0)
        throw std::invalid_argument("nb_log_pmf: k must be >= 0");
    const long double r = spec.r;
    const long double log_term = detail::log_choose(spec.r + k - 1, k) +
                                 r * std::logl(static_cast<long double>(model.p())) +
                                 static_cast<long double>(k) *
                                     std::logl(static_cast<long double>(model.q()));
    return static_cast<double>(log_term);
}

double nb_pmf(const RewardModel& model, const WaitingTimeSpec& spec, std::int64_t k) {
    if (k < 0)
        throw std::invalid_argument("nb_pmf: k must be >= 0");
    const long double log_term = detail::log_choose(spec.r + k - 1, k) +
                                 static_cast<long double>(spec.r) *
                                     std::logl(static_cast<long double>(model.p())) +
                                 static_cast<long double>(k) *
                                     std::logl(static_cast<long double>(model.q()));
    return static_cast<double>(std::expl(log_term));
}

double nb_pmf_by_recurrence(const RewardModel& model, const WaitingTimeSpec& spec,
                            std::int64_t k) {
    if (k < 0)
        throw std::invalid_argument("nb_pmf_by_recurrence: k must be >= 0");
    const double q = model.q();
    double value = std::pow(model.p(), static_cast<double>(spec.r));
    for (std::int64_t i = 1; i <= k; ++i)
        value *= q * static_cast<double>(spec.r + i - 1) / static_cast<double>(i);
    return value;
}

double nb_cdf(const RewardModel& model, const WaitingTimeSpec& spec, std::int64_t b) {
    if (b < 0)
        throw std::invalid_argument("nb_cdf: b must be >= 0");
    long double sum = 0.0L;
    for (std::int64_t k = 0; k <= b; ++k)
        sum += static_cast<long double>(nb_pmf(model, spec, k));
    return static_cast<double>(sum);
}

}  // namespace stoprules
