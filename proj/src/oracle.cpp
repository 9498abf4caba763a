#include "ebai/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "ebai/root_find.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ebai {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// Shrink applied to lambda brackets so divergences are never evaluated at a
// hard domain endpoint during root searches.
constexpr double kEdge = 1e-12;

// Relative tie tolerance when collecting the argmin candidates.
constexpr double kTieTol = 1e-6;

double weighted_value(const Family& fam, double mu_a, double mu_b, double eps,
                      double w_a, double w_b, double lam) {
    double v = 0.0;
    if (w_a > 0.0) v += w_a * fam.kl(mu_a, lam);
    if (w_b > 0.0) v += w_b * fam.kl(mu_b, lam + eps);
    return v;
}

// Zero of the increasing derivative psi(lam) = d2(mu_a,lam) + x d2(mu_b,lam+eps)
// inside [slo, shi]; safeguarded Newton warm-started from `hint`. When psi has
// no sign change the iterates collapse onto the matching endpoint.
double solve_lambda(const Family& fam, double mu_a, double mu_b, double eps, double x,
                    double slo, double shi, double hint) {
    double a = slo;
    double b = shi;
    double lam = (hint > a && hint < b) ? hint : 0.5 * (a + b);
    double step = b - a;
    double step_old = step;
    for (int it = 0; it < 200; ++it) {
        const double p = fam.kl_d2(mu_a, lam) + x * fam.kl_d2(mu_b, lam + eps);
        if (p == 0.0) return lam;
        if (p < 0.0) {
            a = lam;
        } else {
            b = lam;
        }
        const double tol = 1e-14 + 1e-12 * std::abs(lam);
        if (b - a <= tol) return 0.5 * (a + b);
        const double dp = fam.kl_dd2(mu_a, lam) + x * fam.kl_dd2(mu_b, lam + eps);
        double next = lam - p / dp;
        if (!(next > a && next < b) || !std::isfinite(next) ||
            std::abs(p) > 0.5 * std::abs(step_old * dp)) {
            next = 0.5 * (a + b);
        }
        step_old = step;
        step = std::abs(next - lam);
        lam = next;
        if (step <= tol && it > 0) return lam;
    }
    return lam;
}

// Everything needed to evaluate one pair (a, b) of the equalization system.
struct PairContext {
    const Family* fam = nullptr;
    double mu_a = 0.0;
    double mu_b = 0.0;
    double eps = 0.0;
    Interval iv;
    double slo = 0.0;       // shrunk bracket for the derivative root
    double shi = 0.0;
    bool pinned = false;    // interval collapsed to one point
    double y_min = 0.0;     // g(0)
    double y_sup = 0.0;     // limit of g at infinity
    mutable double hint_lam = kNaN;
    mutable double hint_x = 1.0;

    void init(const Family& f, double a_mean, double b_mean, double e) {
        fam = &f;
        mu_a = a_mean;
        mu_b = b_mean;
        eps = e;
        iv = pair_interval(f, mu_a, mu_b, eps);
        pinned = iv.singleton();
        if (!pinned) {
            slo = std::max(iv.lo, f.mean_lo() + kEdge);
            shi = std::min(iv.hi, f.mean_hi() - eps - kEdge);
            if (shi <= slo) pinned = true;
        }
        if (pinned) {
            y_min = f.kl(mu_a, iv.lo);
            const double den0 = f.kl(mu_b, iv.lo + eps);
            y_sup = den0 > 0.0 ? kInf : y_min;
        } else {
            y_min = f.kl(mu_a, iv.hi);
            y_sup = f.kl(mu_a, std::max(mu_b - eps, f.mean_lo()));
        }
        hint_lam = kNaN;
        hint_x = 1.0;
    }

    struct Eval {
        double g, num, den, lam;
    };

    Eval eval_g(double x) const {
        Eval e;
        if (pinned || x == 0.0) {
            e.lam = pinned ? iv.lo : iv.hi;
            e.num = fam->kl(mu_a, e.lam);
            e.den = fam->kl(mu_b, e.lam + eps);
            e.g = x > 0.0 ? e.num + x * e.den : e.num;
            return e;
        }
        e.lam = solve_lambda(*fam, mu_a, mu_b, eps, x, slo, shi, hint_lam);
        hint_lam = e.lam;
        e.num = fam->kl(mu_a, e.lam);
        e.den = fam->kl(mu_b, e.lam + eps);
        e.g = e.num + x * e.den;
        return e;
    }

    struct XSolve {
        double x, lam, num, den;
    };

    // g(x) = y for y in [y_min, y_sup): geometric upper-bracket growth, then
    // safeguarded bisection with Newton steps from g'(x) = den.
    XSolve solve_x(double y) const {
        if (y <= y_min) {
            const Eval e = eval_g(0.0);
            return {0.0, e.lam, e.num, e.den};
        }
        if (pinned) {
            const Eval e0 = eval_g(0.0);
            const double x =
                e0.den > 0.0 && std::isfinite(e0.den) ? (y - e0.num) / e0.den : 0.0;
            return {x, e0.lam, e0.num, e0.den};
        }
        double lo = 0.0;
        double hi = std::max(hint_x, 1e-8);
        Eval e = eval_g(hi);
        int growth = 0;
        while (e.g < y) {
            // Near its supremum g saturates in floating point; once doubling x
            // stops helping, y is at the edge of the range and the huge x is
            // itself the answer (the equalization sum diverges there anyway).
            if (++growth > 120) return {hi, e.lam, e.num, std::max(e.den, 0.0)};
            lo = hi;
            hi *= 2.0;
            e = eval_g(hi);
        }
        double x = 0.5 * (lo + hi);
        double step = hi - lo;
        double step_old = step;
        for (int it = 0; it < 200; ++it) {
            e = eval_g(x);
            const double fx = e.g - y;
            if (fx == 0.0) break;
            if (fx < 0.0) {
                lo = x;
            } else {
                hi = x;
            }
            const double tol = 1e-14 + 1e-10 * std::abs(x);
            if (hi - lo <= tol) {
                x = 0.5 * (lo + hi);
                e = eval_g(x);
                break;
            }
            double next = x - fx / e.den;
            if (!(next > lo && next < hi) || !std::isfinite(next) ||
                std::abs(fx) > 0.5 * std::abs(step_old * e.den)) {
                next = 0.5 * (lo + hi);
            }
            step_old = step;
            step = std::abs(next - x);
            x = next;
            if (step <= tol && it > 0) {
                e = eval_g(x);
                break;
            }
        }
        hint_x = x;
        return {x, e.lam, e.num, e.den};
    }
};

}  // namespace

double BanditInstance::max_mean() const {
    return *std::max_element(means.begin(), means.end());
}

double BanditInstance::max_other_mean(int a) const {
    double m = -kInf;
    for (int b = 0; b < num_arms(); ++b) {
        if (b != a) m = std::max(m, means[b]);
    }
    return m;
}

std::vector<int> BanditInstance::eps_optimal_set() const {
    const double cut = max_mean() - eps;
    std::vector<int> out;
    for (int a = 0; a < num_arms(); ++a) {
        if (means[a] >= cut) out.push_back(a);
    }
    return out;
}

bool BanditInstance::is_eps_optimal(int a) const {
    return means[a] >= max_mean() - eps;
}

void BanditInstance::validate() const {
    if (num_arms() < 2) {
        throw std::invalid_argument("BanditInstance: need at least two arms");
    }
    if (!(eps >= 0.0)) {
        throw std::invalid_argument("BanditInstance: eps must be >= 0");
    }
    for (double m : means) {
        if (!family.in_closure(m)) {
            throw std::invalid_argument("BanditInstance: mean outside family domain");
        }
    }
}

Interval pair_interval(const Family& fam, double mu_a, double mu_b, double eps) {
    return {std::max(fam.mean_lo(), mu_b - eps), std::min(mu_a, fam.mean_hi() - eps)};
}

double lambda_minimizer(const Family& fam, double mu_a, double mu_b, double eps, double x) {
    const Interval iv = pair_interval(fam, mu_a, mu_b, eps);
    if (iv.singleton()) return iv.lo;
    if (fam.kind() == FamilyKind::GaussianKnownVariance) {
        if (std::isinf(x)) return iv.lo;
        const double lam = (mu_a + x * (mu_b - eps)) / (1.0 + x);
        return std::clamp(lam, iv.lo, iv.hi);
    }
    if (x == 0.0) return iv.hi;
    const double slo = std::max(iv.lo, fam.mean_lo() + kEdge);
    const double shi = std::min(iv.hi, fam.mean_hi() - eps - kEdge);
    if (shi <= slo) return iv.lo;
    auto psi = [&](double lam) {
        return fam.kl_d2(mu_a, lam) + x * fam.kl_d2(mu_b, lam + eps);
    };
    if (psi(slo) >= 0.0) return iv.lo;
    if (psi(shi) <= 0.0) return iv.hi;
    return solve_lambda(fam, mu_a, mu_b, eps, x, slo, shi, kNaN);
}

double pair_alt_inf(const Family& fam, double mu_a, double mu_b, double eps,
                    double w_a, double w_b) {
    if (mu_a < mu_b - eps) {
        throw std::invalid_argument("pair_alt_inf: requires mu_a >= mu_b - eps");
    }
    const Interval iv = pair_interval(fam, mu_a, mu_b, eps);
    if (iv.singleton()) {
        return weighted_value(fam, mu_a, mu_b, eps, w_a, w_b, iv.lo);
    }
    double lam;
    if (w_a <= 0.0) {
        lam = iv.lo;  // only the (b) term matters; d(mu_b, .) increases past mu_b
    } else {
        lam = lambda_minimizer(fam, mu_a, mu_b, eps, w_b / w_a);
    }
    return weighted_value(fam, mu_a, mu_b, eps, w_a, w_b, lam);
}

namespace {

void require_pair(const BanditInstance& inst, int a, int b) {
    if (a == b || a < 0 || b < 0 || a >= inst.num_arms() || b >= inst.num_arms()) {
        throw std::invalid_argument("oracle: invalid arm pair");
    }
    if (inst.means[a] < inst.means[b] - inst.eps) {
        throw std::invalid_argument("oracle: requires mu_a >= mu_b - eps");
    }
}

PairContext make_context(const BanditInstance& inst, int a, int b) {
    require_pair(inst, a, b);
    PairContext ctx;
    ctx.init(inst.family, inst.means[a], inst.means[b], inst.eps);
    return ctx;
}

}  // namespace

double lambda_b(const BanditInstance& inst, int a, int b, double x) {
    require_pair(inst, a, b);
    return lambda_minimizer(inst.family, inst.means[a], inst.means[b], inst.eps, x);
}

double g_b(const BanditInstance& inst, int a, int b, double x) {
    require_pair(inst, a, b);
    return pair_alt_inf(inst.family, inst.means[a], inst.means[b], inst.eps, 1.0, x);
}

double x_b(const BanditInstance& inst, int a, int b, double y) {
    const PairContext ctx = make_context(inst, a, b);
    if (y < ctx.y_min - 1e-12 || y >= ctx.y_sup) {
        throw std::invalid_argument("x_b: y outside the range of g_b");
    }
    return ctx.solve_x(y).x;
}

CandidateSolution solve_weights_for_arm(const BanditInstance& inst, int a) {
    inst.validate();
    const Family& fam = inst.family;
    const int K = inst.num_arms();
    const double mu_a = inst.means[a];
    const double eps = inst.eps;
    const double max_other = inst.max_other_mean(a);
    if (!inst.is_eps_optimal(a) || !(mu_a > max_other - eps)) {
        throw std::invalid_argument("solve_weights_for_arm: arm is not a strict candidate");
    }

    CandidateSolution out;
    out.arm = a;

    // Corner solved in closed form: against an arm at the top of the domain
    // the pair interval collapses and sampling only a is optimal.
    if (mu_a > fam.mean_hi() - eps) {
        bool top = false;
        for (int b = 0; b < K; ++b) {
            if (b != a && inst.means[b] >= fam.mean_hi()) top = true;
        }
        if (top) {
            out.degenerate = true;
            out.y_star = fam.kl(mu_a, fam.mean_hi() - eps);
            out.t_star = 1.0 / out.y_star;
            out.weights.assign(K, 0.0);
            out.weights[a] = 1.0;
            return out;
        }
    }

    // Corner with mu_a at the bottom of the domain: every pair interval is the
    // single point mu_lo, the optimum pushes w_a to zero and the remaining
    // weights equalize w_b * d(mu_b, mu_lo + eps).
    if (mu_a <= fam.mean_lo()) {
        out.degenerate = true;
        out.y_star = kInf;
        out.weights.assign(K, 0.0);
        double total = 0.0;
        for (int b = 0; b < K; ++b) {
            if (b == a) continue;
            const double d = fam.kl(inst.means[b], fam.mean_lo() + eps);
            out.weights[b] = d > 0.0 && std::isfinite(d) ? 1.0 / d : 0.0;
            total += out.weights[b];
        }
        out.t_star = total;
        if (total > 0.0) {
            for (double& w : out.weights) w /= total;
        } else {
            // every competing divergence is infinite: one sample decides
            for (int b = 0; b < K; ++b) {
                if (b != a) out.weights[b] = 1.0 / static_cast<double>(K - 1);
            }
        }
        return out;
    }

    std::vector<PairContext> pairs(K - 1);
    {
        int i = 0;
        for (int b = 0; b < K; ++b) {
            if (b != a) pairs[i++].init(fam, mu_a, inst.means[b], eps);
        }
    }

    // F(y) = sum_b num/den - this is increasing from ~0 to +inf on the search
    // interval; the derivative follows from dlam/dy = -d2(mu_b)/(H * den).
    std::vector<double> xs(pairs.size(), 0.0);
    auto eval_F = [&](double y, double& F, double& dF) {
        F = 0.0;
        dF = 0.0;
        for (std::size_t i = 0; i < pairs.size(); ++i) {
            const PairContext& p = pairs[i];
            const PairContext::XSolve s = p.solve_x(y);
            xs[i] = s.x;
            if (!(s.den > 0.0) || !std::isfinite(s.den) || !std::isfinite(s.x)) {
                F = kInf;
                dF = kNaN;
                return;
            }
            F += s.num / s.den;
            if (std::isnan(dF)) continue;
            if (s.lam <= p.slo || s.lam >= p.shi || s.x <= 0.0) {
                dF = kNaN;
                continue;
            }
            const double A = fam.kl_d2(p.mu_a, s.lam);
            const double B = fam.kl_d2(p.mu_b, s.lam + eps);
            const double H = fam.kl_dd2(p.mu_a, s.lam) + s.x * fam.kl_dd2(p.mu_b, s.lam + eps);
            const double dlam_dy = -B / (H * s.den);
            dF += (A * s.den - s.num * B) / (s.den * s.den) * dlam_dy;
        }
    };

    // Search interval: the intersection of the g_b ranges; its right end is
    // set by the largest competing mean.
    const double y_min = pairs.front().y_min;
    const double z = std::max(max_other - eps, fam.mean_lo());
    const double y_hi = fam.kl(mu_a, z);

    // A candidate one rounding error away from mu_a = max_other - eps has an
    // equalization interval of vanishing width; its separation time is
    // infinite for all practical purposes, matching the non-strict case.
    if (y_hi - y_min <= 4e-12) {
        out.t_star = kInf;
        out.y_star = y_hi;
        return out;
    }

    double lo = y_min + 1e-12;
    double hi;
    if (std::isfinite(y_hi)) {
        hi = y_hi - 1e-12;
    } else {
        hi = std::max(1.0, 2.0 * lo);
        double F, dF;
        int growth = 0;
        for (;;) {
            eval_F(hi, F, dF);
            if (F > 1.0) break;
            hi *= 2.0;
            if (++growth > 200) throw std::runtime_error("equalization: unreachable target");
        }
    }

    double y = 0.5 * (lo + hi);
    double step = hi - lo;
    double step_old = step;
    for (int it = 0; it < 200; ++it) {
        double F, dF;
        eval_F(y, F, dF);
        const double fy = F - 1.0;
        if (fy == 0.0) break;
        if (fy < 0.0) {
            lo = y;
        } else {
            hi = y;
        }
        const double tol = 1e-14 + 1e-10 * std::abs(y);
        if (hi - lo <= tol) {
            y = 0.5 * (lo + hi);
            break;
        }
        double next = y - fy / dF;
        if (!std::isfinite(dF) || dF <= 0.0 || !(next > lo && next < hi) ||
            std::abs(fy) > 0.5 * std::abs(step_old * dF)) {
            next = 0.5 * (lo + hi);
        }
        step_old = step;
        step = std::abs(next - y);
        y = next;
        if (step <= tol && it > 0) break;
    }
    out.y_star = y;

    // Bracket collapsed onto its left edge: some pair is stuck at an exact
    // boundary (the equalization sum is infinite for every admissible y), so
    // the candidate cannot be separated.
    if (!(out.y_star > y_min + 2e-12)) {
        out.t_star = kInf;
        out.weights.clear();
        return out;
    }

    out.weights.assign(K, 0.0);
    out.weights[a] = 1.0;
    double total = 1.0;
    std::size_t i = 0;
    for (int b = 0; b < K; ++b) {
        if (b == a) continue;
        out.weights[b] = pairs[i++].solve_x(out.y_star).x;
        total += out.weights[b];
    }
    out.t_star = total / out.y_star;
    for (double& w : out.weights) w /= total;
    return out;
}

OracleSolution characteristic_time(const BanditInstance& inst) {
    inst.validate();
    const int K = inst.num_arms();
    OracleSolution sol;

    const std::vector<int> a_eps = inst.eps_optimal_set();
    for (int a : a_eps) {
        if (inst.means[a] > inst.max_other_mean(a) - inst.eps) {
            sol.per_candidate.push_back(solve_weights_for_arm(inst, a));
        } else {
            CandidateSolution c;
            c.arm = a;
            c.t_star = kInf;
            sol.per_candidate.push_back(c);
        }
    }

    sol.t_star = kInf;
    for (const auto& c : sol.per_candidate) {
        if (!std::isnan(c.t_star)) sol.t_star = std::min(sol.t_star, c.t_star);
    }

    if (!std::isfinite(sol.t_star)) {
        // No candidate can be separated (eps = 0 with several maximal arms, or
        // every candidate sits on the boundary of candidacy). Conventional
        // allocation: uniform over the eps-optimal arms.
        std::vector<double> w(K, 0.0);
        for (int a : a_eps) w[a] = 1.0 / static_cast<double>(a_eps.size());
        sol.w_star_set.push_back(w);
        sol.argmin_arms = a_eps;
        sol.regular = true;
        sol.chosen = a_eps.front();
        return sol;
    }

    for (const auto& c : sol.per_candidate) {
        if (!std::isnan(c.t_star) &&
            c.t_star <= sol.t_star + kTieTol * std::abs(sol.t_star)) {
            sol.argmin_arms.push_back(c.arm);
            sol.w_star_set.push_back(c.weights);
        }
    }
    sol.regular = sol.w_star_set.size() == 1;
    sol.chosen = sol.argmin_arms.front();
    return sol;
}

std::vector<double> tracking_weights(const OracleSolution& sol) {
    for (std::size_t i = 0; i < sol.argmin_arms.size(); ++i) {
        if (sol.argmin_arms[i] == sol.chosen) return sol.w_star_set[i];
    }
    return sol.w_star_set.front();
}

double mu_star_eps(const Family& fam, double mu_a, double mu_b, double eps) {
    if (mu_a < mu_b - eps) {
        throw std::invalid_argument("mu_star_eps: requires mu_a >= mu_b - eps");
    }
    const Interval iv = pair_interval(fam, mu_a, mu_b, eps);
    if (iv.singleton()) return iv.lo;
    // d(mu_b, lam + eps) - d(mu_a, lam) is increasing with a sign change.
    auto f = [&](double lam) { return fam.kl(mu_b, lam + eps) - fam.kl(mu_a, lam); };
    auto df = [&](double lam) {
        return fam.kl_d2(mu_b, lam + eps) - fam.kl_d2(mu_a, lam);
    };
    return find_root_increasing(f, df, iv.lo, iv.hi, {.rel_tol = 1e-12, .abs_tol = 1e-15});
}

TwoArmSolution two_arm(const BanditInstance& inst) {
    inst.validate();
    if (inst.num_arms() != 2) {
        throw std::invalid_argument("two_arm: instance must have exactly two arms");
    }
    const Family& fam = inst.family;
    const double m1 = inst.means[0];
    const double m2 = inst.means[1];
    const double eps = inst.eps;
    TwoArmSolution out{0.0, kNaN, kNaN};
    if (m1 - m2 > eps) {
        out.mu_star_12 = mu_star_eps(fam, m1, m2, eps);
        out.t_star = 1.0 / fam.kl(m1, out.mu_star_12);
    } else if (m2 - m1 > eps) {
        out.mu_star_21 = mu_star_eps(fam, m2, m1, eps);
        out.t_star = 1.0 / fam.kl(m2, out.mu_star_21);
    } else {
        out.mu_star_12 = mu_star_eps(fam, m1, m2, eps);
        out.mu_star_21 = mu_star_eps(fam, m2, m1, eps);
        const double inv = std::max(fam.kl(m1, out.mu_star_12), fam.kl(m2, out.mu_star_21));
        out.t_star = inv > 0.0 ? 1.0 / inv : kInf;
    }
    return out;
}

namespace {

// Grid value of max_{a in A_eps} min_{b != a} inf_lambda for one weight vector.
double grid_value(const BanditInstance& inst, const std::vector<double>& w,
                  const std::vector<int>& a_eps, int lambda_grid) {
    const Family& fam = inst.family;
    double best = -kInf;
    for (int a : a_eps) {
        double worst = kInf;
        for (int b = 0; b < inst.num_arms(); ++b) {
            if (b == a) continue;
            const Interval iv =
                pair_interval(fam, inst.means[a], inst.means[b], inst.eps);
            double inf_v;
            if (iv.singleton()) {
                inf_v = weighted_value(fam, inst.means[a], inst.means[b], inst.eps,
                                       w[a], w[b], iv.lo);
            } else {
                inf_v = kInf;
                for (int j = 0; j <= lambda_grid; ++j) {
                    const double lam =
                        iv.lo + (iv.hi - iv.lo) * static_cast<double>(j) /
                                    static_cast<double>(lambda_grid);
                    inf_v = std::min(inf_v, weighted_value(fam, inst.means[a],
                                                           inst.means[b], inst.eps,
                                                           w[a], w[b], lam));
                }
            }
            worst = std::min(worst, inf_v);
        }
        best = std::max(best, worst);
    }
    return best;
}

// Enumerate compositions of `total` into parts[idx..]; calls fn per completion.
template <class Fn>
void enumerate_rest(std::vector<int>& parts, int idx, int remaining, Fn&& fn) {
    const int slots = static_cast<int>(parts.size());
    if (idx == slots - 1) {
        parts[idx] = remaining;
        fn(parts);
        return;
    }
    for (int v = 0; v <= remaining; ++v) {
        parts[idx] = v;
        enumerate_rest(parts, idx + 1, remaining - v, fn);
    }
}

BruteForceResult brute_force_impl(const BanditInstance& inst, int weight_grid,
                                  int lambda_grid, bool parallel) {
    inst.validate();
    if (inst.num_arms() > 4) {
        throw std::invalid_argument("brute_force_T: limited to K <= 4 arms");
    }
    if (weight_grid < 1 || lambda_grid < 1) {
        throw std::invalid_argument("brute_force_T: grids must be positive");
    }
    const int K = inst.num_arms();
    const std::vector<int> a_eps = inst.eps_optimal_set();

    // One slice per first weight coordinate; the final reduction runs in slice
    // order so the result does not depend on the thread schedule.
    std::vector<double> best_per_first(weight_grid + 1, -kInf);
    std::vector<long> count_per_first(weight_grid + 1, 0);

#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (parallel)
#endif
    for (int first = 0; first <= weight_grid; ++first) {
        std::vector<int> parts(K, 0);
        parts[0] = first;
        std::vector<double> w(K);
        double best = -kInf;
        long count = 0;
        enumerate_rest(parts, 1, weight_grid - first, [&](const std::vector<int>& p) {
            for (int i = 0; i < K; ++i) {
                w[i] = static_cast<double>(p[i]) / static_cast<double>(weight_grid);
            }
            best = std::max(best, grid_value(inst, w, a_eps, lambda_grid));
            ++count;
        });
        best_per_first[first] = best;
        count_per_first[first] = count;
    }

    double best = -kInf;
    long evaluated = 0;
    for (int first = 0; first <= weight_grid; ++first) {
        best = std::max(best, best_per_first[first]);
        evaluated += count_per_first[first];
    }

    BruteForceResult out;
    out.evaluated = evaluated;
    out.coarse = weight_grid < 2 * K || lambda_grid < 8;
    out.t_star = best > 0.0 ? 1.0 / best : kInf;
    return out;
}

}  // namespace

BruteForceResult brute_force_T(const BanditInstance& inst, int weight_grid, int lambda_grid) {
    return brute_force_impl(inst, weight_grid, lambda_grid, true);
}

BruteForceResult brute_force_T_serial(const BanditInstance& inst, int weight_grid,
                                      int lambda_grid) {
    return brute_force_impl(inst, weight_grid, lambda_grid, false);
}

double lower_bound_general(const BanditInstance& inst, double delta) {
    if (!(delta > 0.0 && delta < 1.0)) {
        throw std::invalid_argument("lower_bound_general: delta must lie in (0,1)");
    }
    const OracleSolution sol = characteristic_time(inst);
    const double n_eps = static_cast<double>(inst.eps_optimal_set().size());
    const double factor =
        (1.0 - delta) / n_eps * std::log(1.0 / delta) - std::log(2.0);
    if (factor <= 0.0) return 0.0;
    return sol.t_star * factor;
}

}  // namespace ebai
