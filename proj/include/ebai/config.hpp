#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ebai/oracle.hpp"
#include "ebai/strategies.hpp"
#include "ebai/threshold.hpp"

#include <json.hpp>

namespace ebai {

// Full description of one simulation campaign. Parses from a key=value
// document or from JSON (detected by a leading '{'); serializes losslessly.
struct ExperimentConfig {
    BanditInstance instance;
    StrategySpec strategy;
    ThresholdKind threshold = ThresholdKind::Practical;
    double delta = 0.1;
    int n_reps = 1000;
    std::uint64_t base_seed = 12345;
    std::int64_t horizon_cap = 1'000'000;
    int threads = 0;          // 0 = runtime default
    std::string out_dir;      // empty = no files, stdout only

    ThresholdSpec threshold_spec() const {
        return {threshold, instance.num_arms(), delta};
    }
};

struct ConfigError : std::runtime_error {
    explicit ConfigError(std::vector<std::string> errs);
    std::vector<std::string> errors;
};

ExperimentConfig parse_config(const std::string& text);
std::string serialize_config(const ExperimentConfig& config);

// Schema checks on an assembled config (also applied by parse_config); throws
// ConfigError listing every violation with its field name.
void validate(const ExperimentConfig& config);

nlohmann::json config_to_json(const ExperimentConfig& config);
ExperimentConfig config_from_json(const nlohmann::json& j);

nlohmann::json family_to_json(const Family& family);
Family family_from_json(const nlohmann::json& j);

// Bundled instances used throughout: three Bernoulli benchmark problems.
//   mu1 = [0.2 0.4 0.5 0.55 0.7]          eps = 0.1
//   mu2 = [0.4 0.5 0.6 0.7 0.75 0.8]      eps = 0.15
//   mu3 = [0.2 0.3 0.45 0.55 0.6 0.6]     eps = 0.1  (two optimal allocations)
ExperimentConfig preset(const std::string& name);
std::vector<std::string> preset_names();

}  // namespace ebai
