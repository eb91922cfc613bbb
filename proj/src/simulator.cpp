#include "stoprules/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include "stoprules/prob_core.hpp"

namespace stoprules {

EpisodeOutcome run_rule_a_episode(const RewardModel& model, const RuleAConfig& config,
                                  EpisodeRng& rng, const std::optional<CostModel>& costs) {
    const double p = model.p();
    EpisodeOutcome out =
        run_rule_a_episode(config, [&] { return rng.next_bernoulli(p); });
    if (costs)
        out.cost = episode_cost(out.observations, *costs);
    return out;
}

EpisodeOutcome run_rule_b_episode(const RewardModel& model, const RuleBConfig& config,
                                  EpisodeRng& rng, const std::optional<CostModel>& costs) {
    const double p = model.p();
    EpisodeOutcome out =
        run_rule_b_episode(config, [&] { return rng.next_bernoulli(p); });
    if (costs)
        out.cost = episode_cost(out.observations, *costs);
    return out;
}

namespace {

constexpr std::size_t kHistogramCap = 4096;

// Per-chunk tallies. Everything is integer, so merging partials is exact and
// the merged result cannot depend on the chunking.
struct Tally {
    std::uint64_t n = 0;
    std::uint64_t sum_neg = 0;
    unsigned __int128 sum_neg_sq = 0;
    std::uint64_t sum_obs = 0;
    std::uint64_t n_success = 0;
    std::uint64_t n_exceed = 0;
    std::vector<std::uint64_t> hist;
    std::uint64_t hist_overflow = 0;

    void add(const EpisodeOutcome& outcome, std::int64_t hist_key,
             const std::optional<std::int64_t>& bound) {
        ++n;
        const auto neg = static_cast<std::uint64_t>(outcome.negatives);
        sum_neg += neg;
        sum_neg_sq += static_cast<unsigned __int128>(neg) * neg;
        sum_obs += static_cast<std::uint64_t>(outcome.observations);
        if (outcome.conclusion == Conclusion::Success)
            ++n_success;
        if (bound && outcome.negatives > *bound)
            ++n_exceed;
        const auto key = static_cast<std::size_t>(hist_key);
        if (key >= kHistogramCap) {
            ++hist_overflow;
        } else {
            if (key >= hist.size())
                hist.resize(key + 1, 0);
            ++hist[key];
        }
    }

    void merge(const Tally& other) {
        n += other.n;
        sum_neg += other.sum_neg;
        sum_neg_sq += other.sum_neg_sq;
        sum_obs += other.sum_obs;
        n_success += other.n_success;
        n_exceed += other.n_exceed;
        hist_overflow += other.hist_overflow;
        if (other.hist.size() > hist.size())
            hist.resize(other.hist.size(), 0);
        for (std::size_t i = 0; i < other.hist.size(); ++i)
            hist[i] += other.hist[i];
    }
};

Tally run_chunk(const SimulationConfig& config, std::int64_t first, std::int64_t last) {
    Tally tally;
    const bool is_rule_a = std::holds_alternative<RuleAConfig>(config.rule);
    for (std::int64_t index = first; index < last; ++index) {
        EpisodeRng rng(config.seed, static_cast<std::uint64_t>(index));
        EpisodeOutcome outcome;
        std::int64_t hist_key = 0;
        if (is_rule_a) {
            outcome = run_rule_a_episode(config.model, std::get<RuleAConfig>(config.rule), rng);
            hist_key = outcome.negatives;
        } else {
            outcome = run_rule_b_episode(config.model, std::get<RuleBConfig>(config.rule), rng);
            hist_key = outcome.observations;
        }
        tally.add(outcome, hist_key, config.bound);
    }
    return tally;
}

// Largest W classified a Success, i.e. the greatest integer with
// W/r < rho_star under the same floating-point comparison classify_outcome
// uses; -1 when even W = 0 fails (cannot happen for rho_star > 0).
std::int64_t max_success_negatives(const RuleAConfig& config) {
    std::int64_t w = static_cast<std::int64_t>(
                         std::ceil(config.rho_star * static_cast<double>(config.r))) +
                     1;
    while (w >= 0 &&
           classify_outcome(w, config) == Conclusion::Failure)
        --w;
    return w;
}

AnalyticCounterparts analytic_for(const SimulationConfig& config) {
    AnalyticCounterparts analytic;
    if (const auto* rule_a = std::get_if<RuleAConfig>(&config.rule)) {
        const WaitingTimeSpec spec(rule_a->r);
        analytic.mean_negatives = nb_mean(config.model, spec);
        analytic.var_negatives = nb_variance(config.model, spec);
        if (config.bound)
            analytic.exceedance = exceedance_exact(config.model, *rule_a, *config.bound);
        const std::int64_t w_max = max_success_negatives(*rule_a);
        analytic.success_prob = w_max < 0 ? 0.0 : nb_cdf(config.model, spec, w_max);
    } else {
        analytic.success_prob = success_prob(std::get<RuleBConfig>(config.rule), config.model);
    }
    return analytic;
}

}  // namespace

SimulationSummary simulate(const SimulationConfig& config) {
    if (config.n_episodes < 1)
        throw std::invalid_argument("simulate: n_episodes must be >= 1");
    if (config.threads < 1)
        throw std::invalid_argument("simulate: threads must be >= 1");
    if (config.bound && *config.bound < 0)
        throw std::invalid_argument("simulate: bound must be >= 0");
    if (config.bound && std::holds_alternative<RuleBConfig>(config.rule))
        throw std::invalid_argument("simulate: bound applies to rule A only");

    const std::int64_t n = config.n_episodes;
    const int threads = static_cast<int>(
        std::min<std::int64_t>(config.threads, n));

    Tally total;
    if (threads == 1) {
        total = run_chunk(config, 0, n);
    } else {
        std::vector<Tally> partials(static_cast<std::size_t>(threads));
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(threads));
        const std::int64_t chunk = (n + threads - 1) / threads;
        for (int t = 0; t < threads; ++t) {
            const std::int64_t first = t * chunk;
            const std::int64_t last = std::min<std::int64_t>(first + chunk, n);
            pool.emplace_back([&config, &partials, t, first, last] {
                partials[static_cast<std::size_t>(t)] = run_chunk(config, first, last);
            });
        }
        for (auto& worker : pool)
            worker.join();
        for (const auto& partial : partials)
            total.merge(partial);
    }

    SimulationSummary summary;
    summary.n_episodes = n;
    const auto n_ld = static_cast<long double>(total.n);
    const auto sum_ld = static_cast<long double>(total.sum_neg);
    const auto sum_sq_ld = static_cast<long double>(total.sum_neg_sq);
    summary.empirical_mean_negatives = static_cast<double>(sum_ld / n_ld);
    summary.empirical_var_negatives =
        total.n < 2 ? 0.0
                    : static_cast<double>((sum_sq_ld - sum_ld * sum_ld / n_ld) / (n_ld - 1.0L));
    summary.empirical_success_rate =
        static_cast<double>(static_cast<long double>(total.n_success) / n_ld);
    if (config.bound)
        summary.empirical_exceedance =
            static_cast<double>(static_cast<long double>(total.n_exceed) / n_ld);
    if (config.cost)
        summary.mean_cost =
            static_cast<double>(static_cast<long double>(total.sum_obs) / n_ld) *
            config.cost->c;
    summary.histogram = std::move(total.hist);
    summary.histogram_overflow = total.hist_overflow;
    summary.analytic = analytic_for(config);
    return summary;
}

}  // namespace stoprules
