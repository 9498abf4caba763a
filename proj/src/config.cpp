#include "ebai/config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace ebai {

namespace {

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::vector<double> parse_double_list(const std::string& text, const std::string& field,
                                      std::vector<std::string>& errs) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        tok = trim(tok);
        if (tok.empty()) continue;
        try {
            std::size_t pos = 0;
            out.push_back(std::stod(tok, &pos));
            if (pos != tok.size()) throw std::invalid_argument(tok);
        } catch (const std::exception&) {
            errs.push_back(field + ": not a number: '" + tok + "'");
        }
    }
    return out;
}

void validate_config(const ExperimentConfig& c, std::vector<std::string>& errs) {
    if (c.instance.means.size() < 2) errs.push_back("means: need at least two arms");
    for (double m : c.instance.means) {
        if (!c.instance.family.in_closure(m)) {
            errs.push_back("means: " + fmt_double(m) + " outside the " +
                           c.instance.family.name() + " domain");
        }
    }
    if (!(c.instance.eps >= 0.0)) errs.push_back("eps: must be >= 0");
    if (!(c.delta > 0.0 && c.delta < 1.0)) errs.push_back("delta: must lie in (0,1)");
    if (c.n_reps < 1) errs.push_back("reps: must be >= 1");
    if (c.horizon_cap < 1) errs.push_back("cap: must be >= 1");
    if (c.threads < 0) errs.push_back("threads: must be >= 0");
    if (c.strategy.kind == StrategyKindId::FixedWeights &&
        c.strategy.fixed_weights.size() != c.instance.means.size()) {
        errs.push_back("strategy: fixed weights length differs from means");
    }
}

}  // namespace

void validate(const ExperimentConfig& config) {
    std::vector<std::string> errs;
    validate_config(config, errs);
    if (!errs.empty()) throw ConfigError(std::move(errs));
}

ConfigError::ConfigError(std::vector<std::string> errs)
    : std::runtime_error("config errors: " +
                         [&errs] {
                             std::string all;
                             for (const auto& e : errs) {
                                 if (!all.empty()) all += "; ";
                                 all += e;
                             }
                             return all;
                         }()),
      errors(std::move(errs)) {}

nlohmann::json family_to_json(const Family& family) {
    nlohmann::json j;
    j["kind"] = family.name();
    if (family.kind() == FamilyKind::GaussianKnownVariance) {
        j["sigma2"] = family.sigma2();
    }
    return j;
}

Family family_from_json(const nlohmann::json& j) {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "bernoulli") return Family::bernoulli();
    if (kind == "gaussian") {
        return Family::gaussian(j.value("sigma2", 1.0));
    }
    throw ConfigError({"family.kind: unknown kind '" + kind + "'"});
}

ExperimentConfig config_from_json(const nlohmann::json& j) {
    std::vector<std::string> errs;
    ExperimentConfig c;
    static const std::vector<std::string> known = {
        "instance", "strategy", "threshold", "delta", "reps",
        "seed",     "cap",      "threads",   "out"};
    for (auto it = j.begin(); it != j.end(); ++it) {
        if (std::find(known.begin(), known.end(), it.key()) == known.end()) {
            errs.push_back("unknown key: " + it.key());
        }
    }
    try {
        const auto& inst = j.at("instance");
        for (auto it = inst.begin(); it != inst.end(); ++it) {
            if (it.key() != "family" && it.key() != "means" && it.key() != "eps") {
                errs.push_back("instance: unknown key: " + it.key());
            }
        }
        c.instance.family = family_from_json(inst.at("family"));
        c.instance.means = inst.at("means").get<std::vector<double>>();
        c.instance.eps = inst.at("eps").get<double>();
    } catch (const ConfigError& e) {
        errs.insert(errs.end(), e.errors.begin(), e.errors.end());
    } catch (const std::exception& e) {
        errs.push_back(std::string("instance: ") + e.what());
    }
    try {
        c.strategy = StrategySpec::parse(j.value("strategy", std::string("eps-tas")));
    } catch (const std::exception& e) {
        errs.push_back(std::string("strategy: ") + e.what());
    }
    try {
        if (j.contains("threshold")) {
            if (j["threshold"].is_object()) {
                for (auto it = j["threshold"].begin(); it != j["threshold"].end(); ++it) {
                    if (it.key() != "kind" && it.key() != "delta") {
                        errs.push_back("threshold: unknown key: " + it.key());
                    }
                }
                c.threshold =
                    threshold_kind_from_name(j["threshold"].at("kind").get<std::string>());
                if (j["threshold"].contains("delta")) {
                    c.delta = j["threshold"]["delta"].get<double>();
                }
            } else {
                c.threshold = threshold_kind_from_name(j["threshold"].get<std::string>());
            }
        }
    } catch (const std::exception& e) {
        errs.push_back(std::string("threshold: ") + e.what());
    }
    if (j.contains("delta")) c.delta = j["delta"].get<double>();
    c.n_reps = j.value("reps", c.n_reps);
    c.base_seed = j.value("seed", c.base_seed);
    c.horizon_cap = j.value("cap", c.horizon_cap);
    c.threads = j.value("threads", c.threads);
    c.out_dir = j.value("out", c.out_dir);

    validate_config(c, errs);
    if (!errs.empty()) throw ConfigError(std::move(errs));
    return c;
}

ExperimentConfig parse_config(const std::string& text) {
    const std::string body = trim(text);
    if (!body.empty() && body.front() == '{') {
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(body);
        } catch (const std::exception& e) {
            throw ConfigError({std::string("json: ") + e.what()});
        }
        return config_from_json(j);
    }

    std::vector<std::string> errs;
    ExperimentConfig c;
    bool have_family = false, have_means = false, have_eps = false;
    std::string family_kind = "bernoulli";
    double sigma2 = 1.0;

    std::stringstream ss(body);
    std::string line;
    int lineno = 0;
    while (std::getline(ss, line)) {
        ++lineno;
        const std::size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const std::size_t eq = line.find('=');
        if (eq == std::string::npos) {
            errs.push_back("line " + std::to_string(lineno) + ": expected key = value");
            continue;
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        try {
            if (key == "family") {
                family_kind = value;
                have_family = true;
            } else if (key == "sigma2") {
                sigma2 = std::stod(value);
            } else if (key == "means") {
                c.instance.means = parse_double_list(value, "means", errs);
                have_means = true;
            } else if (key == "eps") {
                c.instance.eps = std::stod(value);
                have_eps = true;
            } else if (key == "strategy") {
                c.strategy = StrategySpec::parse(value);
            } else if (key == "threshold") {
                c.threshold = threshold_kind_from_name(value);
            } else if (key == "delta") {
                c.delta = std::stod(value);
            } else if (key == "reps") {
                c.n_reps = std::stoi(value);
            } else if (key == "seed") {
                c.base_seed = std::stoull(value);
            } else if (key == "cap") {
                c.horizon_cap = std::stoll(value);
            } else if (key == "threads") {
                c.threads = std::stoi(value);
            } else if (key == "out") {
                c.out_dir = value;
            } else {
                errs.push_back("unknown key: " + key);
            }
        } catch (const std::exception&) {
            errs.push_back(key + ": bad value '" + value + "'");
        }
    }
    if (!have_family) errs.push_back("family: missing");
    if (!have_means) errs.push_back("means: missing");
    if (!have_eps) errs.push_back("eps: missing");
    if (family_kind == "bernoulli") {
        c.instance.family = Family::bernoulli();
    } else if (family_kind == "gaussian") {
        if (!(sigma2 > 0.0)) {
            errs.push_back("sigma2: must be > 0");
        } else {
            c.instance.family = Family::gaussian(sigma2);
        }
    } else {
        errs.push_back("family: unknown kind '" + family_kind + "'");
    }

    validate_config(c, errs);
    if (!errs.empty()) throw ConfigError(std::move(errs));
    return c;
}

std::string serialize_config(const ExperimentConfig& c) {
    std::string out;
    out += "family = " + c.instance.family.name() + "\n";
    if (c.instance.family.kind() == FamilyKind::GaussianKnownVariance) {
        out += "sigma2 = " + fmt_double(c.instance.family.sigma2()) + "\n";
    }
    out += "means = ";
    for (std::size_t i = 0; i < c.instance.means.size(); ++i) {
        if (i) out += ", ";
        out += fmt_double(c.instance.means[i]);
    }
    out += "\n";
    out += "eps = " + fmt_double(c.instance.eps) + "\n";
    out += "strategy = " + c.strategy.name() + "\n";
    out += "threshold = " + threshold_kind_name(c.threshold) + "\n";
    out += "delta = " + fmt_double(c.delta) + "\n";
    out += "reps = " + std::to_string(c.n_reps) + "\n";
    out += "seed = " + std::to_string(c.base_seed) + "\n";
    out += "cap = " + std::to_string(c.horizon_cap) + "\n";
    out += "threads = " + std::to_string(c.threads) + "\n";
    if (!c.out_dir.empty()) out += "out = " + c.out_dir + "\n";
    return out;
}

nlohmann::json config_to_json(const ExperimentConfig& c) {
    nlohmann::json j;
    j["instance"]["family"] = family_to_json(c.instance.family);
    j["instance"]["means"] = c.instance.means;
    j["instance"]["eps"] = c.instance.eps;
    j["strategy"] = c.strategy.name();
    j["threshold"] = threshold_kind_name(c.threshold);
    j["delta"] = c.delta;
    j["reps"] = c.n_reps;
    j["seed"] = c.base_seed;
    j["cap"] = c.horizon_cap;
    j["threads"] = c.threads;
    if (!c.out_dir.empty()) j["out"] = c.out_dir;
    return j;
}

ExperimentConfig preset(const std::string& name) {
    ExperimentConfig c;
    c.instance.family = Family::bernoulli();
    if (name == "mu1") {
        c.instance.means = {0.2, 0.4, 0.5, 0.55, 0.7};
        c.instance.eps = 0.1;
    } else if (name == "mu2") {
        c.instance.means = {0.4, 0.5, 0.6, 0.7, 0.75, 0.8};
        c.instance.eps = 0.15;
    } else if (name == "mu3") {
        c.instance.means = {0.2, 0.3, 0.45, 0.55, 0.6, 0.6};
        c.instance.eps = 0.1;
    } else {
        throw ConfigError({"preset: unknown name '" + name + "'"});
    }
    return c;
}

std::vector<std::string> preset_names() { return {"mu1", "mu2", "mu3"}; }

}  // namespace ebai
