#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "ebai/config.hpp"
#include "ebai/harness.hpp"
#include "ebai/one_arm.hpp"
#include "ebai/oracle.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

// Reference results published for the bundled instances at delta = 0.1
// (characteristic times, mean stopping times with standard deviations,
// recommendation distributions and allocations). The tables subcommand prints
// fresh estimates next to these values.
struct ReferenceData {
    std::map<std::string, double> t_star_ln10 = {
        {"mu1", 97.0}, {"mu2", 108.0}, {"mu3", 531.0}};
    std::map<std::string, std::map<std::string, std::pair<double, double>>> sample_complexity = {
        {"mu1", {{"eps-tas", {171, 104}}, {"kl-lucb", {322, 137}}, {"ugape", {324, 143}}, {"kl-racing", {372, 159}}}},
        {"mu2", {{"eps-tas", {162, 83}}, {"kl-lucb", {345, 135}}, {"ugape", {344, 141}}, {"kl-racing", {402, 146}}}},
        {"mu3", {{"eps-tas", {501, 261}}, {"kl-lucb", {1236, 403}}, {"ugape", {1199, 414}}, {"kl-racing", {1348, 436}}}},
    };
    std::map<std::string, std::map<std::string, std::vector<double>>> recommendation = {
        {"mu1", {{"eps-tas", {0, 0, 0.002, 0.013, 0.985}},
                 {"kl-lucb", {0, 0, 0, 0.003, 0.997}},
                 {"ugape", {0, 0, 0, 0.002, 0.998}},
                 {"kl-racing", {0, 0, 0.001, 0.002, 0.997}}}},
        {"mu2", {{"eps-tas", {0, 0, 0, 0.044, 0.217, 0.739}},
                 {"kl-lucb", {0, 0, 0, 0.009, 0.104, 0.887}},
                 {"ugape", {0, 0, 0, 0.012, 0.13, 0.858}},
                 {"kl-racing", {0, 0, 0, 0.009, 0.138, 0.853}}}},
        {"mu3", {{"eps-tas", {0, 0, 0.001, 0.05, 0.493, 0.456}},
                 {"kl-lucb", {0, 0, 0, 0.011, 0.49, 0.499}},
                 {"ugape", {0, 0, 0, 0.01, 0.49, 0.5}},
                 {"kl-racing", {0, 0, 0, 0.006, 0.479, 0.515}}}},
    };
    std::map<std::string, std::vector<std::vector<double>>> optimal_weights = {
        {"mu2", {{0.024, 0.036, 0.060, 0.136, 0.275, 0.469}}},
        {"mu3", {{0.008, 0.0133, 0.035, 0.114, 0.436, 0.393},
                 {0.008, 0.0133, 0.035, 0.114, 0.393, 0.436}}},
    };
    std::map<std::string, std::vector<double>> empirical_proportions = {
        {"mu2", {0.079, 0.077, 0.099, 0.156, 0.235, 0.353}},
        {"mu3", {0.049, 0.049, 0.081, 0.194, 0.317, 0.309}},
    };
};

json solution_to_json(const ebai::OracleSolution& sol) {
    json j;
    j["t_star"] = sol.t_star;
    j["t_star_ln10"] = sol.t_star * std::log(10.0);
    j["regular"] = sol.regular;
    j["chosen"] = sol.chosen;
    j["argmin_arms"] = sol.argmin_arms;
    j["w_star_set"] = sol.w_star_set;
    j["per_candidate"] = json::array();
    for (const auto& c : sol.per_candidate) {
        json cj;
        cj["arm"] = c.arm;
        cj["t_star"] = std::isfinite(c.t_star) ? json(c.t_star) : json("inf");
        cj["weights"] = c.weights;
        cj["y_star"] = std::isfinite(c.y_star) ? json(c.y_star) : json("inf");
        cj["degenerate"] = c.degenerate;
        j["per_candidate"].push_back(cj);
    }
    return j;
}

struct InstanceArgs {
    std::string preset;
    std::string config_path;
    std::string family = "bernoulli";
    std::string means;
    double eps = -1.0;
    double sigma2 = 1.0;

    void add_options(CLI::App* cmd) {
        cmd->add_option("--preset", preset, "bundled instance: mu1, mu2 or mu3");
        cmd->add_option("--config", config_path, "config file (key=value or JSON)");
        cmd->add_option("--family", family, "bernoulli | gaussian");
        cmd->add_option("--means", means, "comma-separated arm means");
        cmd->add_option("--eps", eps, "tolerance");
        cmd->add_option("--sigma2", sigma2, "gaussian variance");
    }

    ebai::ExperimentConfig resolve() const {
        if (!preset.empty()) return ebai::preset(preset);
        if (!config_path.empty()) {
            std::ifstream in(config_path);
            if (!in) throw ebai::ConfigError({"config: cannot open " + config_path});
            std::stringstream ss;
            ss << in.rdbuf();
            return ebai::parse_config(ss.str());
        }
        if (means.empty() || eps < 0.0) {
            throw ebai::ConfigError({"need --preset, --config, or --means with --eps"});
        }
        std::string doc = "family = " + family + "\n";
        if (family == "gaussian") doc += "sigma2 = " + std::to_string(sigma2) + "\n";
        doc += "means = " + means + "\neps = " + std::to_string(eps) + "\n";
        return ebai::parse_config(doc);
    }
};

void write_file(const fs::path& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << text;
}

int cmd_ctime(const InstanceArgs& args, bool verify, int wgrid, int lgrid, bool weights_only) {
    const ebai::ExperimentConfig config = args.resolve();
    const ebai::OracleSolution sol = ebai::characteristic_time(config.instance);
    json j;
    if (weights_only) {
        j["w_star_set"] = sol.w_star_set;
        j["argmin_arms"] = sol.argmin_arms;
        j["regular"] = sol.regular;
        j["chosen"] = sol.chosen;
    } else {
        j = solution_to_json(sol);
        j["instance"]["family"] = ebai::family_to_json(config.instance.family);
        j["instance"]["means"] = config.instance.means;
        j["instance"]["eps"] = config.instance.eps;
    }
    if (verify) {
        const ebai::BruteForceResult bf =
            ebai::brute_force_T(config.instance, wgrid, lgrid);
        j["brute_force"]["t_star"] = bf.t_star;
        j["brute_force"]["weight_grid"] = wgrid;
        j["brute_force"]["lambda_grid"] = lgrid;
        j["brute_force"]["coarse"] = bf.coarse;
        j["brute_force"]["relative_gap"] =
            std::abs(bf.t_star - sol.t_star) / sol.t_star;
    }
    std::cout << j.dump(2) << "\n";
    return 0;
}

int cmd_onearm(const ebai::OneArmConfig& base, int reps, std::uint64_t seed,
               const std::string& out_dir) {
    std::vector<ebai::OneArmResult> results(reps);
    for (int i = 0; i < reps; ++i) {
        std::mt19937_64 rng(ebai::replication_seed(seed, i));
        results[i] = ebai::run_one_arm(base, rng);
    }
    double sum_tau = 0.0;
    std::int64_t wrong = 0, capped = 0;
    const bool in_overlap = std::abs(base.mu_true) < base.eps;
    for (const auto& r : results) {
        sum_tau += static_cast<double>(r.tau);
        capped += r.capped ? 1 : 0;
        const bool ok = !r.capped && (in_overlap || (base.mu_true >= base.eps
                                                         ? r.decision == 2
                                                         : r.decision == 1));
        wrong += ok ? 0 : 1;
    }
    const auto bounds =
        ebai::predicted_bounds(base.mu_true, base.eps, base.sigma2, base.delta);
    json j;
    j["reps"] = reps;
    j["mean_tau"] = sum_tau / reps;
    j["error_rate"] = static_cast<double>(wrong) / reps;
    j["capped_count"] = capped;
    j["predicted_upper"] = bounds.upper;
    j["predicted_lower"] = bounds.lower;
    j["predicted_t0"] = bounds.t0;
    j["mu"] = base.mu_true;
    j["eps"] = base.eps;
    j["sigma2"] = base.sigma2;
    j["delta"] = base.delta;
    j["threshold"] = ebai::threshold_kind_name(base.threshold);
    j["seed"] = seed;

    if (!out_dir.empty()) {
        fs::create_directories(out_dir);
        std::ostringstream csv;
        csv << "seed,tau,decision,capped\n";
        for (int i = 0; i < reps; ++i) {
            csv << ebai::replication_seed(seed, i) << ',' << results[i].tau << ','
                << results[i].decision << ',' << (results[i].capped ? 1 : 0) << "\n";
        }
        write_file(fs::path(out_dir) / "onearm_replications.csv", csv.str());
        write_file(fs::path(out_dir) / "onearm_report.json", j.dump(2) + "\n");
    }
    std::cout << j.dump(2) << "\n";
    return 0;
}

int cmd_simulate(const ebai::ExperimentConfig& config, bool serial) {
    const auto results = ebai::run_replications(
        config, serial ? ebai::ExecMode::Serial : ebai::ExecMode::Parallel);
    const ebai::ExperimentReport report = ebai::aggregate_results(results, config);
    const json j = ebai::report_to_json(report);
    if (!config.out_dir.empty()) {
        fs::create_directories(config.out_dir);
        std::ostringstream csv;
        ebai::write_replications_csv(csv, results);
        write_file(fs::path(config.out_dir) / "replications.csv", csv.str());
        write_file(fs::path(config.out_dir) / "report.json", j.dump(2) + "\n");
    }
    std::cout << j.dump(2) << "\n";
    return 0;
}

// Fixed-width row so instances with fewer arms keep the CSV rectangular.
std::string csv_row(const std::vector<double>& values, std::size_t columns = 6) {
    std::ostringstream os;
    os.precision(4);
    os << std::fixed;
    for (std::size_t i = 0; i < columns; ++i) {
        if (i) os << ',';
        if (i < values.size()) os << values[i];
    }
    return os.str();
}

int cmd_tables(const std::string& out_dir, int reps, std::uint64_t seed, int threads) {
    const ReferenceData ref;
    fs::create_directories(out_dir);
    const std::vector<std::string> strategies = {"eps-tas", "kl-lucb", "ugape",
                                                 "kl-racing"};

    std::ostringstream t1, t2, t3;
    t1 << "instance,strategy,source";
    for (int a = 0; a < 6; ++a) t1 << ",reco_arm" << a;
    t1 << "\n";
    t2 << "instance,strategy,source,mean_tau,std_tau\n";
    t3 << "instance,row,source";
    for (int a = 0; a < 6; ++a) t3 << ",arm" << a;
    t3 << "\n";

    for (const std::string& name : ebai::preset_names()) {
        ebai::ExperimentConfig config = ebai::preset(name);
        config.n_reps = reps;
        config.base_seed = seed;
        config.threads = threads;

        const ebai::OracleSolution sol = ebai::characteristic_time(config.instance);
        t2 << name << ",t_star_ln10,computed," << sol.t_star * std::log(10.0) << ",\n";
        t2 << name << ",t_star_ln10,reference," << ref.t_star_ln10.at(name) << ",\n";

        for (std::size_t i = 0; i < sol.w_star_set.size(); ++i) {
            t3 << name << ",w_star_" << sol.argmin_arms[i] << ",computed,"
               << csv_row(sol.w_star_set[i]) << "\n";
        }
        if (ref.optimal_weights.count(name)) {
            for (const auto& row : ref.optimal_weights.at(name)) {
                t3 << name << ",w_star,reference," << csv_row(row) << "\n";
            }
        }

        for (const std::string& strat : strategies) {
            config.strategy = ebai::StrategySpec::parse(strat);
            std::cerr << "tables: running " << name << " / " << strat << " ("
                      << reps << " reps)\n";
            const ebai::ExperimentReport rep = ebai::run_experiment(config);
            t1 << name << ',' << strat << ",computed,"
               << csv_row(rep.reco_distribution) << "\n";
            t1 << name << ',' << strat << ",reference,"
               << csv_row(ref.recommendation.at(name).at(strat)) << "\n";
            const auto [ref_mean, ref_std] = ref.sample_complexity.at(name).at(strat);
            t2 << name << ',' << strat << ",computed," << rep.mean_tau << ','
               << rep.std_tau << "\n";
            t2 << name << ',' << strat << ",reference," << ref_mean << ',' << ref_std
               << "\n";
            if (strat == "eps-tas" && ref.empirical_proportions.count(name)) {
                t3 << name << ",proportions,computed,"
                   << csv_row(rep.mean_proportions) << "\n";
                t3 << name << ",proportions,reference,"
                   << csv_row(ref.empirical_proportions.at(name)) << "\n";
            }
        }
    }

    write_file(fs::path(out_dir) / "table1_recommendations.csv", t1.str());
    write_file(fs::path(out_dir) / "table2_sample_complexity.csv", t2.str());
    write_file(fs::path(out_dir) / "table3_allocations.csv", t3.str());
    std::cout << "wrote " << out_dir << "/table1_recommendations.csv, "
              << "table2_sample_complexity.csv, table3_allocations.csv\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"sequential tests for overlapping hypotheses and eps-best-arm "
                 "identification in exponential-family bandits"};
    app.require_subcommand(1);

    // ctime
    auto* ctime = app.add_subcommand("ctime", "characteristic time and optimal weights");
    InstanceArgs ctime_args;
    ctime_args.add_options(ctime);
    bool verify = false;
    int wgrid = 200, lgrid = 200;
    ctime->add_flag("--verify", verify, "cross-check with the grid oracle (K <= 4)");
    ctime->add_option("--wgrid", wgrid, "weight grid subdivisions for --verify");
    ctime->add_option("--lgrid", lgrid, "lambda grid subdivisions for --verify");

    // weights
    auto* weights = app.add_subcommand("weights", "optimal allocations only");
    InstanceArgs weights_args;
    weights_args.add_options(weights);

    // onearm
    auto* onearm = app.add_subcommand("onearm", "one-stream Gaussian test");
    ebai::OneArmConfig oa;
    int oa_reps = 1000;
    std::uint64_t oa_seed = 12345;
    std::string oa_threshold = "gaussian1";
    std::string oa_out;
    onearm->add_option("--mu", oa.mu_true, "true mean");
    onearm->add_option("--eps", oa.eps, "tolerance")->required();
    onearm->add_option("--sigma2", oa.sigma2, "variance");
    onearm->add_option("--delta", oa.delta, "risk");
    onearm->add_option("--threshold", oa_threshold, "practical|universal|refined|gaussian1");
    onearm->add_option("--reps", oa_reps, "replications");
    onearm->add_option("--seed", oa_seed, "base seed");
    onearm->add_option("--cap", oa.horizon_cap, "horizon cap");
    onearm->add_option("--out", oa_out, "output directory");

    // simulate
    auto* simulate = app.add_subcommand("simulate", "Monte Carlo campaign");
    InstanceArgs sim_args;
    sim_args.add_options(simulate);
    int sim_reps = -1, sim_threads = -1;
    std::int64_t sim_cap = -1;
    std::uint64_t sim_seed = 0;
    bool sim_have_seed = false, sim_serial = false;
    std::string sim_strategy, sim_threshold, sim_out;
    double sim_delta = -1.0;
    simulate->add_option("--reps", sim_reps, "override replications");
    simulate->add_option("--seed", sim_seed, "override base seed")
        ->each([&](const std::string&) { sim_have_seed = true; });
    simulate->add_option("--threads", sim_threads, "override worker threads");
    simulate->add_option("--cap", sim_cap, "override horizon cap");
    simulate->add_option("--strategy", sim_strategy,
                         "eps-tas | fixed:w1,...,wK | kl-lucb | ugape | kl-racing");
    simulate->add_option("--threshold", sim_threshold,
                         "practical|universal|refined|gaussian1");
    simulate->add_option("--delta", sim_delta, "override risk");
    simulate->add_option("--out", sim_out, "output directory");
    simulate->add_flag("--serial", sim_serial, "single-threaded replication loop");

    // tables
    auto* tables = app.add_subcommand(
        "tables", "run the three bundled instances and write comparison tables");
    std::string tab_out = "tables_out";
    int tab_reps = 1000, tab_threads = 0;
    std::uint64_t tab_seed = 12345;
    tables->add_option("--out", tab_out, "output directory");
    tables->add_option("--reps", tab_reps, "replications per strategy");
    tables->add_option("--seed", tab_seed, "base seed");
    tables->add_option("--threads", tab_threads, "worker threads");

    CLI11_PARSE(app, argc, argv);

    try {
        if (ctime->parsed()) return cmd_ctime(ctime_args, verify, wgrid, lgrid, false);
        if (weights->parsed()) return cmd_ctime(weights_args, false, 0, 0, true);
        if (onearm->parsed()) {
            oa.threshold = ebai::threshold_kind_from_name(oa_threshold);
            return cmd_onearm(oa, oa_reps, oa_seed, oa_out);
        }
        if (simulate->parsed()) {
            ebai::ExperimentConfig config = sim_args.resolve();
            if (sim_reps > 0) config.n_reps = sim_reps;
            if (sim_have_seed) config.base_seed = sim_seed;
            if (sim_threads >= 0) config.threads = sim_threads;
            if (sim_cap > 0) config.horizon_cap = sim_cap;
            if (!sim_strategy.empty())
                config.strategy = ebai::StrategySpec::parse(sim_strategy);
            if (!sim_threshold.empty())
                config.threshold = ebai::threshold_kind_from_name(sim_threshold);
            if (sim_delta > 0.0) config.delta = sim_delta;
            if (!sim_out.empty()) config.out_dir = sim_out;
            ebai::validate(config);  // overrides can break the schema
            return cmd_simulate(config, sim_serial);
        }
        if (tables->parsed()) return cmd_tables(tab_out, tab_reps, tab_seed, tab_threads);
    } catch (const ebai::ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
