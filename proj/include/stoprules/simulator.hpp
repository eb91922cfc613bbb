#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <variant>
#include <vector>

#include "stoprules/reward_model.hpp"
#include "stoprules/rule_a.hpp"
#include "stoprules/rule_b.hpp"

namespace stoprules {

namespace detail {

// splitmix64 finalizer (Steele, Lea & Flood).
inline std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

inline constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

}  // namespace detail

// Pseudorandom substream for one episode. The stream state is a pure
// function of (seed, episode_index), so results never depend on how
// episodes are partitioned across threads. Draws are splitmix64 steps.
class EpisodeRng {
public:
    EpisodeRng(std::uint64_t seed, std::uint64_t episode_index)
        : state_(detail::mix64(detail::mix64(seed) ^
                               (detail::kGolden * (episode_index + 1)))) {}

    std::uint64_t next_u64() {
        state_ += detail::kGolden;
        return detail::mix64(state_);
    }

    // Uniform in [0, 1), 53 random bits.
    double next_uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // One uniform draw per observation, compared against p.
    bool next_bernoulli(double p) { return next_uniform() < p; }

private:
    std::uint64_t state_;
};

struct EpisodeOutcome {
    std::int64_t positives = 0;
    std::int64_t negatives = 0;
    std::int64_t observations = 0;
    Conclusion conclusion = Conclusion::Failure;
    std::optional<double> cost;
};

// Termination of a rule-A episode is almost sure for p > 0; hitting this cap
// means a broken stream, not a legitimate outcome.
inline constexpr std::int64_t kEpisodeGuardCap = 1'000'000'000;

// Core episode loops are templated on the observation source (a callable
// returning true for a positive reward) so deterministic test-double streams
// can drive them.
template <class Stream>
EpisodeOutcome run_rule_a_episode(const RuleAConfig& config, Stream&& next_observation,
                                  std::int64_t guard_cap = kEpisodeGuardCap) {
    EpisodeOutcome out;
    while (out.positives < config.r) {
        if (out.observations >= guard_cap)
            throw std::logic_error("run_rule_a_episode: observation guard cap hit");
        ++out.observations;
        if (next_observation())
            ++out.positives;
        else
            ++out.negatives;
    }
    out.conclusion = classify_outcome(out.negatives, config);
    return out;
}

template <class Stream>
EpisodeOutcome run_rule_b_episode(const RuleBConfig& config, Stream&& next_observation) {
    const int h = config.h();
    EpisodeOutcome out;
    while (out.positives < h && out.negatives < h) {
        ++out.observations;
        if (next_observation())
            ++out.positives;
        else
            ++out.negatives;
    }
    out.conclusion = out.positives == h ? Conclusion::Success : Conclusion::Failure;
    return out;
}

EpisodeOutcome run_rule_a_episode(const RewardModel& model, const RuleAConfig& config,
                                  EpisodeRng& rng,
                                  const std::optional<CostModel>& costs = std::nullopt);

EpisodeOutcome run_rule_b_episode(const RewardModel& model, const RuleBConfig& config,
                                  EpisodeRng& rng,
                                  const std::optional<CostModel>& costs = std::nullopt);

struct SimulationConfig {
    std::int64_t n_episodes;
    std::uint64_t seed;
    RewardModel model;
    std::variant<RuleAConfig, RuleBConfig> rule;
    std::optional<std::int64_t> bound;  // rule A only: track Pr[W > bound]
    std::optional<CostModel> cost;
    int threads = 1;
};

// Analytic values the empirical statistics are validated against; filled
// from the analytic modules, never recomputed inline.
struct AnalyticCounterparts {
    std::optional<double> mean_negatives;  // rule A: E[W_r]
    std::optional<double> var_negatives;   // rule A: Var[W_r]
    std::optional<double> exceedance;      // rule A with bound: Pr[W_r > b]
    double success_prob = 0.0;             // rule A: Pr[W/r < rho*]; rule B: P_m

    bool operator==(const AnalyticCounterparts&) const = default;
};

struct SimulationSummary {
    std::int64_t n_episodes = 0;
    double empirical_mean_negatives = 0.0;
    double empirical_var_negatives = 0.0;
    double empirical_success_rate = 0.0;
    std::optional<double> empirical_exceedance;
    std::optional<double> mean_cost;
    // Rule A: counts of episodes by negative-reward count W (index = W).
    // Rule B: counts of episodes by total length (index = observations).
    std::vector<std::uint64_t> histogram;
    std::uint64_t histogram_overflow = 0;
    AnalyticCounterparts analytic;

    bool operator==(const SimulationSummary&) const = default;
};

// Runs n_episodes independent episodes. Bit-for-bit deterministic for a
// fixed (seed, n_episodes, rule): per-episode substreams come from
// EpisodeRng(seed, index) and all aggregation is integer-exact, so the
// thread count never changes the result.
SimulationSummary simulate(const SimulationConfig& config);

}  // namespace stoprules
