#pragma once

#include <cstdint>
#include <ostream>
#include <vector>

#include "ebai/config.hpp"
#include "ebai/strategies.hpp"

#include <json.hpp>

namespace ebai {

struct RunResult {
    std::uint64_t seed = 0;
    std::int64_t tau = 0;
    int recommendation = -1;
    bool correct = false;
    bool capped = false;
    std::vector<double> proportions;     // N_a(tau)/tau
    std::int64_t oracle_fallbacks = 0;   // rounds the plug-in solve fell back to uniform
};

struct ExperimentReport {
    int n_reps = 0;
    double error_rate = 0.0;
    double mean_tau = 0.0;
    double std_tau = 0.0;
    std::vector<double> reco_distribution;
    std::vector<double> mean_proportions;
    std::int64_t capped_count = 0;
    std::int64_t oracle_fallbacks = 0;
    ExperimentConfig config;
};

enum class ExecMode { Serial, Parallel };

// Seed for replication `index` derived from the campaign seed: a splitmix64
// finalizer applied to base + (index+1) * 0x9E3779B97F4A7C15. Replications are
// therefore independent of execution order.
std::uint64_t replication_seed(std::uint64_t base, std::int64_t index);

// One full run: initialization round-robin, then pull/observe/stop-check until
// the strategy stops or the horizon cap is reached (capped runs report
// correct = false). Deterministic given (instance, strategy, threshold, seed).
RunResult run_replication(const BanditInstance& instance, const StrategySpec& strategy,
                          const ThresholdSpec& threshold, std::uint64_t seed,
                          std::int64_t horizon_cap);

// N replications plus aggregation. The parallel mode distributes replications
// over OpenMP threads; aggregates are identical to the serial mode bit for bit
// because results are combined in replication order.
ExperimentReport run_experiment(const ExperimentConfig& config,
                                ExecMode mode = ExecMode::Parallel);

ExperimentReport aggregate_results(const std::vector<RunResult>& results,
                                   const ExperimentConfig& config);

std::vector<RunResult> run_replications(const ExperimentConfig& config, ExecMode mode);

void write_replications_csv(std::ostream& os, const std::vector<RunResult>& results);
nlohmann::json report_to_json(const ExperimentReport& report);

}  // namespace ebai
