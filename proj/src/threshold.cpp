#include "ebai/threshold.hpp"

#include <cmath>
#include <stdexcept>

#include "ebai/root_find.hpp"

namespace ebai {

namespace {

// ln(2*zeta(2)) = ln(pi^2/3)
const double kLog2Zeta2 = std::log(9.8696044010893586188 / 3.0);
const double kLogLog32 = std::log(std::log(1.5));

double h_tilde(double x, double branch_point) {
    if (x >= branch_point) {
        const double u = h_inv(x);
        return std::exp(1.0 / u) * u;
    }
    return 1.5 * (x - kLogLog32);
}

// The linear branch of h_tilde is the tangent of exp(1/h_inv(x))*h_inv(x) at
// the point where its slope equals 3/2, which is x = h(1/ln(3/2)); switching
// there keeps h_tilde continuous and increasing.
double branch_point() {
    static const double value = h_fn(1.0 / std::log(1.5));
    return value;
}

}  // namespace

double h_fn(double u) { return u - std::log(u); }

double h_inv(double x) {
    if (!(x >= 1.0)) {
        throw std::invalid_argument("h_inv: argument must be >= 1");
    }
    if (x == 1.0) return 1.0;
    double hi = 2.0;
    while (h_fn(hi) < x) hi *= 2.0;
    // h'(u) = 1 - 1/u
    auto f = [x](double u) { return h_fn(u) - x; };
    auto df = [](double u) { return 1.0 - 1.0 / u; };
    return find_root_increasing(f, df, 1.0, hi, {.rel_tol = 1e-13, .abs_tol = 1e-14});
}

double cal_T(double x) {
    if (!(x >= 0.0)) {
        throw std::invalid_argument("cal_T: argument must be >= 0");
    }
    const double arg = 0.5 * (h_inv(1.0 + x) + kLog2Zeta2);
    return 2.0 * h_tilde(arg, branch_point());
}

double beta(const ThresholdSpec& spec, std::int64_t t) {
    if (t < 1) {
        throw std::invalid_argument("beta: round index must be >= 1");
    }
    if (!(spec.delta > 0.0 && spec.delta < 1.0)) {
        throw std::invalid_argument("beta: delta must lie in (0,1)");
    }
    const double K = static_cast<double>(spec.num_arms);
    const double lt = std::log(static_cast<double>(t));
    const double log1_delta = std::log(1.0 / spec.delta);
    switch (spec.kind) {
        case ThresholdKind::Universal:
            if (spec.num_arms < 1) throw std::invalid_argument("beta: K must be >= 1");
            return 3.0 * K * std::log1p(lt) + K * cal_T(log1_delta / K);
        case ThresholdKind::Refined:
            if (spec.num_arms < 2) throw std::invalid_argument("beta: refined threshold needs K >= 2");
            return 6.0 * std::log1p(lt) + 2.0 * cal_T(std::log((K - 1.0) / spec.delta) / 2.0);
        case ThresholdKind::GaussianOneArm:
            return 3.0 * std::log1p(lt) + cal_T(log1_delta);
        case ThresholdKind::Practical:
            return std::log((1.0 + lt) / spec.delta);
    }
    throw std::logic_error("beta: unknown threshold kind");
}

std::string threshold_kind_name(ThresholdKind kind) {
    switch (kind) {
        case ThresholdKind::Universal: return "universal";
        case ThresholdKind::Refined: return "refined";
        case ThresholdKind::Practical: return "practical";
        case ThresholdKind::GaussianOneArm: return "gaussian1";
    }
    return "?";
}

ThresholdKind threshold_kind_from_name(const std::string& name) {
    if (name == "universal") return ThresholdKind::Universal;
    if (name == "refined") return ThresholdKind::Refined;
    if (name == "practical") return ThresholdKind::Practical;
    if (name == "gaussian1") return ThresholdKind::GaussianOneArm;
    throw std::invalid_argument("unknown threshold kind: " + name);
}

}  // namespace ebai
