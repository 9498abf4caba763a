#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <stdexcept>
#include <string>

namespace ebai {

enum class FamilyKind { GaussianKnownVariance, Bernoulli };

// One-parameter exponential family parameterized by its mean.
// Carries the mean domain (mu_lo, mu_hi) and the divergence
// d(mu, lam) = KL(distribution with mean mu, distribution with mean lam).
class Family {
public:
    static Family gaussian(double sigma2);
    static Family bernoulli() {
        return Family(FamilyKind::Bernoulli, 0.0, 0.0, 1.0);
    }

    FamilyKind kind() const { return kind_; }
    double sigma2() const { return sigma2_; }

    double mean_lo() const { return lo_; }
    double mean_hi() const { return hi_; }

    bool in_closure(double mu) const { return mu >= lo_ && mu <= hi_; }
    bool in_interior(double mu) const { return mu > lo_ && mu < hi_; }

    // d(mu, lam). Nonnegative, zero iff mu == lam, strictly convex in lam.
    // Bernoulli endpoints: returns +inf when lam is 0 or 1 and mu differs.
    double kl(double mu, double lam) const {
        if (!in_closure(mu) || !in_closure(lam)) {
            throw std::invalid_argument("Family::kl: mean outside domain closure");
        }
        if (kind_ == FamilyKind::GaussianKnownVariance) {
            const double diff = mu - lam;
            return diff * diff / (2.0 * sigma2_);
        }
        if (lam <= 0.0) return mu == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
        if (lam >= 1.0) return mu == 1.0 ? 0.0 : std::numeric_limits<double>::infinity();
        double v = 0.0;
        if (mu > 0.0) v += mu * std::log(mu / lam);
        if (mu < 1.0) v += (1.0 - mu) * std::log((1.0 - mu) / (1.0 - lam));
        return v;
    }

    // Partial derivative of d(mu, lam) with respect to lam (lam interior).
    double kl_d2(double mu, double lam) const {
        if (kind_ == FamilyKind::GaussianKnownVariance) {
            return (lam - mu) / sigma2_;
        }
        if (!in_interior(lam)) {
            throw std::invalid_argument("Family::kl_d2: lam must be interior");
        }
        return (lam - mu) / (lam * (1.0 - lam));
    }

    // Second partial derivative with respect to lam; positive on the interior.
    double kl_dd2(double mu, double lam) const {
        if (kind_ == FamilyKind::GaussianKnownVariance) {
            return 1.0 / sigma2_;
        }
        if (!in_interior(lam)) {
            throw std::invalid_argument("Family::kl_dd2: lam must be interior");
        }
        const double q = 1.0 - lam;
        return mu / (lam * lam) + (1.0 - mu) / (q * q);
    }

    // One observation with mean mu. The Gaussian draw is Box-Muller on two
    // 53-bit uniforms (cosine branch only), the Bernoulli draw thresholds one
    // uniform, so streams are reproducible across platforms for a fixed rng.
    double sample(double mu, std::mt19937_64& rng) const;

    std::string name() const;

    bool operator==(const Family&) const = default;

private:
    Family(FamilyKind k, double s2, double lo, double hi)
        : kind_(k), sigma2_(s2), lo_(lo), hi_(hi) {}

    FamilyKind kind_;
    double sigma2_;
    double lo_;
    double hi_;
};

// Uniform double in [0, 1) from the top 53 bits of one 64-bit draw.
inline double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Binary relative entropy kl(x, y) between Bernoulli(x) and Bernoulli(y).
double kl_bin(double x, double y);

}  // namespace ebai
