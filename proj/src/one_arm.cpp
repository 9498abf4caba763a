#include "ebai/one_arm.hpp"

#include <cmath>
#include <stdexcept>

#include "ebai/family.hpp"

namespace ebai {

double one_arm_glr_stat(std::int64_t t, double mu_hat, double eps, double sigma2) {
    const double m = std::abs(mu_hat) + eps;
    return static_cast<double>(t) * m * m / (2.0 * sigma2);
}

OneArmResult run_one_arm(const OneArmConfig& config, ObservationSource next) {
    if (!(config.eps > 0.0) || !(config.sigma2 > 0.0) || config.horizon_cap < 1) {
        throw std::invalid_argument("run_one_arm: invalid config");
    }
    const ThresholdSpec spec{config.threshold, 1, config.delta};
    double sum = 0.0;
    for (std::int64_t t = 1; t <= config.horizon_cap; ++t) {
        sum += next();
        const double mu_hat = sum / static_cast<double>(t);
        if (one_arm_glr_stat(t, mu_hat, config.eps, config.sigma2) > beta(spec, t)) {
            return {t, mu_hat > 0.0 ? 2 : 1, false};
        }
    }
    const double mu_hat = sum / static_cast<double>(config.horizon_cap);
    return {config.horizon_cap, mu_hat > 0.0 ? 2 : 1, true};
}

OneArmResult run_one_arm(const OneArmConfig& config, std::mt19937_64& rng) {
    const Family fam = Family::gaussian(config.sigma2);
    return run_one_arm(config, [&] { return fam.sample(config.mu_true, rng); });
}

OneArmBounds predicted_bounds(double mu, double eps, double sigma2, double delta) {
    if (!(eps > 0.0)) {
        throw std::invalid_argument("predicted_bounds: eps must be > 0");
    }
    const double c = 3.0 / std::exp(1.0);
    const double ell = cal_T(std::log(1.0 / delta)) + c;
    const double m = std::abs(mu) + eps;
    const double a = 2.0 * sigma2 / (m * m);

    OneArmBounds out;
    out.lower = a * kl_bin(delta, 1.0 - delta);
    out.t0 = a * ell + 2.0 * c * a * std::log(a * ell);
    const double inner = ell + 2.0 * c * std::log(a * ell);
    out.upper = a * (inner + 8.0 * std::sqrt(inner) + 32.0 * std::pow(delta, 0.125)) + 1.0;
    return out;
}

}  // namespace ebai
