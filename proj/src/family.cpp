#include "ebai/family.hpp"

namespace ebai {

Family Family::gaussian(double sigma2) {
    if (!(sigma2 > 0.0)) {
        throw std::invalid_argument("Family::gaussian: sigma2 must be > 0");
    }
    const double inf = std::numeric_limits<double>::infinity();
    return Family(FamilyKind::GaussianKnownVariance, sigma2, -inf, inf);
}

double Family::sample(double mu, std::mt19937_64& rng) const {
    if (!in_closure(mu)) {
        throw std::invalid_argument("Family::sample: mu outside domain closure");
    }
    if (kind_ == FamilyKind::Bernoulli) {
        return uniform01(rng) < mu ? 1.0 : 0.0;
    }
    // Box-Muller, cosine branch. u1 shifted away from 0 so log stays finite.
    const double u1 = 1.0 - uniform01(rng);
    const double u2 = uniform01(rng);
    const double z = std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586477 * u2);
    return mu + std::sqrt(sigma2_) * z;
}

std::string Family::name() const {
    return kind_ == FamilyKind::Bernoulli ? "bernoulli" : "gaussian";
}

double kl_bin(double x, double y) {
    if (y <= 0.0) return x == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
    if (y >= 1.0) return x == 1.0 ? 0.0 : std::numeric_limits<double>::infinity();
    double v = 0.0;
    if (x > 0.0) v += x * std::log(x / y);
    if (x < 1.0) v += (1.0 - x) * std::log((1.0 - x) / (1.0 - y));
    return v;
}

}  // namespace ebai
