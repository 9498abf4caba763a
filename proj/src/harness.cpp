#include "ebai/harness.hpp"

#include <algorithm>
#include <cmath>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ebai {

std::uint64_t replication_seed(std::uint64_t base, std::int64_t index) {
    std::uint64_t z = base + 0x9E3779B97F4A7C15ull * (static_cast<std::uint64_t>(index) + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

namespace {

int fallback_recommendation(const StrategyState& state) {
    // Used only when a run is cut off by the cap: best empirical mean among
    // sampled arms, lowest index on ties.
    int pick = -1;
    double best = -std::numeric_limits<double>::infinity();
    for (int a = 0; a < state.num_arms(); ++a) {
        if (state.counts[a] >= 1 && state.mean(a) > best) {
            best = state.mean(a);
            pick = a;
        }
    }
    return pick;
}

}  // namespace

RunResult run_replication(const BanditInstance& instance, const StrategySpec& strategy,
                          const ThresholdSpec& threshold, std::uint64_t seed,
                          std::int64_t horizon_cap) {
    instance.validate();
    const int K = instance.num_arms();
    StrategyState state(instance.family, K, instance.eps);
    std::mt19937_64 rng(seed);
    auto pull = [&](int a) {
        state.record(a, instance.family.sample(instance.means[a], rng));
    };

    RunResult out;
    out.seed = seed;

    bool init_done = true;
    for (int a = 0; a < K; ++a) {
        if (state.t >= horizon_cap) {
            init_done = false;
            break;
        }
        pull(a);
    }

    std::optional<int> stopped;
    if (init_done) {
        if (strategy.is_baseline()) {
            BaselineState baseline(strategy.kind, K);
            while (true) {
                if (state.t >= horizon_cap) break;
                const BaselineStep step =
                    baseline.step(state, beta(threshold, state.t));
                if (step.stop) {
                    stopped = step.stop;
                    break;
                }
                for (int a : step.pulls) {
                    if (state.t >= horizon_cap) break;
                    pull(a);
                }
            }
        } else {
            while (true) {
                if (state.t >= horizon_cap) break;
                if (auto reco = pglrt_check(state, beta(threshold, state.t))) {
                    stopped = reco;
                    break;
                }
                if (strategy.kind == StrategyKindId::EpsTaS) {
                    const TrackingDecision d = tracking_next_arm(state);
                    out.oracle_fallbacks += d.oracle_fallback ? 1 : 0;
                    pull(d.arm);
                } else {
                    pull(track_allocation(state, strategy.fixed_weights));
                }
            }
        }
    }

    out.tau = state.t;
    out.capped = !stopped.has_value();
    if (stopped) {
        out.recommendation = *stopped;
    } else if (state.all_sampled() && !strategy.is_baseline()) {
        out.recommendation = best_candidate(state).arm;
    } else {
        out.recommendation = fallback_recommendation(state);
    }
    out.correct = !out.capped && out.recommendation >= 0 &&
                  instance.is_eps_optimal(out.recommendation);
    out.proportions.resize(K);
    for (int a = 0; a < K; ++a) {
        out.proportions[a] =
            static_cast<double>(state.counts[a]) / static_cast<double>(state.t);
    }
    return out;
}

std::vector<RunResult> run_replications(const ExperimentConfig& config, ExecMode mode) {
    const ThresholdSpec tspec = config.threshold_spec();
    std::vector<RunResult> results(config.n_reps);
    const bool parallel = mode == ExecMode::Parallel;
#ifdef _OPENMP
    const int threads = config.threads > 0 ? config.threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(threads) if (parallel)
#endif
    for (int i = 0; i < config.n_reps; ++i) {
        results[i] = run_replication(config.instance, config.strategy, tspec,
                                     replication_seed(config.base_seed, i),
                                     config.horizon_cap);
    }
    return results;
}

ExperimentReport aggregate_results(const std::vector<RunResult>& results,
                                   const ExperimentConfig& config) {
    const int K = config.instance.num_arms();
    ExperimentReport rep;
    rep.config = config;
    rep.n_reps = static_cast<int>(results.size());
    rep.reco_distribution.assign(K, 0.0);
    rep.mean_proportions.assign(K, 0.0);

    double sum_tau = 0.0;
    std::int64_t errors = 0;
    for (const RunResult& r : results) {
        sum_tau += static_cast<double>(r.tau);
        errors += r.correct ? 0 : 1;
        rep.capped_count += r.capped ? 1 : 0;
        rep.oracle_fallbacks += r.oracle_fallbacks;
        if (r.recommendation >= 0) {
            rep.reco_distribution[r.recommendation] += 1.0;
        }
        for (int a = 0; a < K; ++a) rep.mean_proportions[a] += r.proportions[a];
    }
    const double n = static_cast<double>(rep.n_reps);
    rep.mean_tau = sum_tau / n;
    double ss = 0.0;
    for (const RunResult& r : results) {
        const double d = static_cast<double>(r.tau) - rep.mean_tau;
        ss += d * d;
    }
    rep.std_tau = rep.n_reps > 1 ? std::sqrt(ss / (n - 1.0)) : 0.0;
    rep.error_rate = static_cast<double>(errors) / n;
    for (int a = 0; a < K; ++a) {
        rep.reco_distribution[a] /= n;
        rep.mean_proportions[a] /= n;
    }
    return rep;
}

ExperimentReport run_experiment(const ExperimentConfig& config, ExecMode mode) {
    return aggregate_results(run_replications(config, mode), config);
}

void write_replications_csv(std::ostream& os, const std::vector<RunResult>& results) {
    if (results.empty()) return;
    const std::size_t K = results.front().proportions.size();
    os << "seed,tau,recommendation,correct,capped";
    for (std::size_t a = 0; a < K; ++a) os << ",prop_" << a;
    os << "\n";
    for (const RunResult& r : results) {
        os << r.seed << ',' << r.tau << ',' << r.recommendation << ','
           << (r.correct ? 1 : 0) << ',' << (r.capped ? 1 : 0);
        char buf[32];
        for (double p : r.proportions) {
            std::snprintf(buf, sizeof(buf), "%.10g", p);
            os << ',' << buf;
        }
        os << "\n";
    }
}

nlohmann::json report_to_json(const ExperimentReport& report) {
    nlohmann::json j;
    j["n_reps"] = report.n_reps;
    j["error_rate"] = report.error_rate;
    j["mean_tau"] = report.mean_tau;
    j["std_tau"] = report.std_tau;
    j["reco_distribution"] = report.reco_distribution;
    j["mean_proportions"] = report.mean_proportions;
    j["capped_count"] = report.capped_count;
    j["oracle_fallbacks"] = report.oracle_fallbacks;
    j["config"] = config_to_json(report.config);
    return j;
}

}  // namespace ebai
