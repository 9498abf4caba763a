#pragma once

#include <cmath>
#include <utility>

namespace ebai {

struct RootOpts {
    double rel_tol = 1e-10;
    double abs_tol = 0.0;
    int max_iter = 200;
};

// Root of an increasing function with a sign change on [lo, hi].
// Bisection bracket maintained throughout; a Newton step (when a derivative is
// supplied and finite) replaces the midpoint whenever it stays inside the
// bracket and keeps shrinking the step. Terminates on step size, so one-sided
// Newton convergence exits early instead of waiting for the bracket to close.
// f may evaluate to +/-inf inside the bracket.
template <class F, class DF>
double find_root_increasing(F&& f, DF&& df, double lo, double hi, RootOpts opts = {}) {
    double a = lo;
    double b = hi;
    double x = 0.5 * (a + b);
    double step = b - a;
    double step_old = step;
    for (int it = 0; it < opts.max_iter; ++it) {
        const double fx = f(x);
        if (fx == 0.0) return x;
        if (fx < 0.0) {
            a = x;
        } else {
            b = x;
        }
        const double tol = opts.abs_tol + opts.rel_tol * std::max(1.0, std::abs(x));
        if (b - a <= tol) return 0.5 * (a + b);

        bool newton_ok = false;
        double next = 0.0;
        if (std::isfinite(fx)) {
            const double d = df(x);
            if (std::isfinite(d) && d > 0.0) {
                const double cand = x - fx / d;
                if (cand > a && cand < b && std::abs(fx) <= 0.5 * std::abs(step_old * d)) {
                    next = cand;
                    newton_ok = true;
                }
            }
        }
        if (!newton_ok) next = 0.5 * (a + b);
        step_old = step;
        step = std::abs(next - x);
        x = next;
        if (step <= tol && it > 0) return x;
    }
    return x;
}

struct NoDerivative {
    double operator()(double) const { return std::nan(""); }
};

template <class F>
double find_root_increasing(F&& f, double lo, double hi, RootOpts opts = {}) {
    return find_root_increasing(std::forward<F>(f), NoDerivative{}, lo, hi, opts);
}

}  // namespace ebai
