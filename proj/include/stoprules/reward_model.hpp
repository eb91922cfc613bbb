#pragma once

#include <stdexcept>

namespace stoprules {

// Bernoulli reward probabilities for a single observation. p is the chance
// of a positive reward; q = 1 - p is always derived, never stored, so the
// two cannot drift apart. Degenerate p in {0, 1} is rejected: with no
// stochastic element every episode is identical and the waiting-time
// machinery has nothing to say.
class RewardModel {
public:
    explicit RewardModel(double p) : p_(p) {
        if (!(p > 0.0) || !(p < 1.0))
            throw std::invalid_argument("RewardModel: p must lie strictly inside (0,1)");
    }

    double p() const { return p_; }
    double q() const { return 1.0 - p_; }

private:
    double p_;
};

// Target count of positive rewards that ends an episode under the
// fixed-count stopping rule.
struct WaitingTimeSpec {
    int r;

    explicit WaitingTimeSpec(int target_positives) : r(target_positives) {
        if (r < 1)
            throw std::invalid_argument("WaitingTimeSpec: r must be >= 1");
    }
};

}  // namespace stoprules
