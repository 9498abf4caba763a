#pragma once

#include <cstdint>
#include <functional>
#include <random>

#include "ebai/threshold.hpp"

namespace ebai {

// Sequential test on one Gaussian stream: decide (mean < eps) vs (mean > -eps);
// both answers are accepted when the mean lies in (-eps, eps).
struct OneArmConfig {
    double mu_true = 0.0;   // used only by rng-backed runs
    double eps = 0.1;
    double sigma2 = 1.0;
    double delta = 0.1;
    ThresholdKind threshold = ThresholdKind::GaussianOneArm;
    std::int64_t horizon_cap = 1'000'000;
};

struct OneArmResult {
    std::int64_t tau = 0;
    int decision = 0;     // 1 or 2; 2 iff the final empirical mean is > 0
    bool capped = false;
};

// GLR statistic t*(|mu_hat| + eps)^2 / (2 sigma^2).
double one_arm_glr_stat(std::int64_t t, double mu_hat, double eps, double sigma2);

// Any callable producing the next observation; lets deterministic fixtures and
// rng-backed streams share the run loop.
using ObservationSource = std::function<double()>;

OneArmResult run_one_arm(const OneArmConfig& config, ObservationSource next);
OneArmResult run_one_arm(const OneArmConfig& config, std::mt19937_64& rng);

// Sample-complexity predictions for the test above at risk delta:
//   upper: non-asymptotic bound on E[tau] for the GaussianOneArm threshold,
//   lower: 2 sigma^2 / (|mu|+eps)^2 * kl_bin(delta, 1-delta),
//   t0:    the crossing-time constant entering the upper bound.
struct OneArmBounds {
    double upper = 0.0;
    double lower = 0.0;
    double t0 = 0.0;
};

OneArmBounds predicted_bounds(double mu, double eps, double sigma2, double delta);

}  // namespace ebai
