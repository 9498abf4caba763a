#pragma once

#include <cstdint>
#include <string>

namespace ebai {

// h(u) = u - ln(u), increasing on [1, inf).
double h_fn(double u);

// Inverse of h on [1, inf); defined for x >= 1.
double h_inv(double x);

// Deviation function T(x) = 2*h_tilde((h_inv(1+x) + ln(2*zeta(2)))/2), where
// h_tilde switches between exp(1/h_inv(x))*h_inv(x) and (3/2)(x - ln ln(3/2))
// at x = h_inv(1/ln(3/2)). Satisfies T(x) ~ x for large x.
double cal_T(double x);

enum class ThresholdKind { Universal, Refined, Practical, GaussianOneArm };

// Anytime-valid stopping boundary beta(t, delta), nondecreasing in t and
// decreasing in delta.
//
//   Universal:       3K ln(1 + ln t) + K T(ln(1/delta)/K)
//   Refined:         6 ln(1 + ln t) + 2 T(ln((K-1)/delta)/2)
//   GaussianOneArm:  3 ln(ln(t) + 1) + T(ln(1/delta))
//   Practical:       ln((1 + ln t)/delta)
//
// Refined requires K >= 2. Practical is the usual choice for simulations;
// the other three come with a correctness guarantee.
struct ThresholdSpec {
    ThresholdKind kind = ThresholdKind::Practical;
    int num_arms = 1;
    double delta = 0.1;
};

double beta(const ThresholdSpec& spec, std::int64_t t);

std::string threshold_kind_name(ThresholdKind kind);
ThresholdKind threshold_kind_from_name(const std::string& name);

}  // namespace ebai
