#pragma once

#include <vector>

#include "ebai/family.hpp"

namespace ebai {

// A bandit instance: K arms from one exponential family, plus the tolerance
// eps defining the eps-optimal set A_eps = {a : mu_a >= max_i mu_i - eps}.
struct BanditInstance {
    Family family = Family::bernoulli();
    std::vector<double> means;
    double eps = 0.0;

    int num_arms() const { return static_cast<int>(means.size()); }
    double max_mean() const;
    double max_other_mean(int a) const;
    std::vector<int> eps_optimal_set() const;
    bool is_eps_optimal(int a) const;
    void validate() const;  // throws std::invalid_argument on a bad instance
};

// Closed interval [mu_lo v (mu_b - eps), mu_a ^ (mu_hi - eps)] over which the
// alternative-hypothesis infimum for the pair (a, b) can be restricted.
struct Interval {
    double lo = 0.0;
    double hi = 0.0;
    bool empty() const { return hi < lo; }
    bool singleton() const { return hi <= lo; }
};

Interval pair_interval(const Family& family, double mu_a, double mu_b, double eps);

// Minimizer over the pair interval of  d(mu_a, lam) + x * d(mu_b, lam + eps).
// Gaussian closed form (mu_a + x*(mu_b - eps)) / (1 + x); otherwise a
// safeguarded root of the increasing derivative.
double lambda_minimizer(const Family& family, double mu_a, double mu_b, double eps, double x);

// inf over lam in the pair interval of  w_a d(mu_a, lam) + w_b d(mu_b, lam + eps).
double pair_alt_inf(const Family& family, double mu_a, double mu_b, double eps,
                    double w_a, double w_b);

// Per-pair transport functions of the weight-equalization structure.
double lambda_b(const BanditInstance& inst, int a, int b, double x);
double g_b(const BanditInstance& inst, int a, int b, double x);
double x_b(const BanditInstance& inst, int a, int b, double y);

// Best allocation when arm a is the answer.
struct CandidateSolution {
    int arm = -1;
    double t_star = 0.0;           // +inf when the candidate cannot be separated
    std::vector<double> weights;   // empty when t_star is +inf
    double y_star = 0.0;           // equalized pair value; diagnostic
    bool degenerate = false;       // solved by a closed-form corner case
};

// Requires a in A_eps with mu_a > max_{b != a} mu_b - eps.
CandidateSolution solve_weights_for_arm(const BanditInstance& inst, int a);

struct OracleSolution {
    double t_star = 0.0;
    std::vector<CandidateSolution> per_candidate;   // one entry per arm of A_eps
    std::vector<std::vector<double>> w_star_set;    // optimal allocations (ties kept)
    std::vector<int> argmin_arms;                   // arms achieving t_star
    bool regular = false;                           // exactly one optimal allocation
    int chosen = -1;                                // lowest-index argmin arm
};

OracleSolution characteristic_time(const BanditInstance& inst);

// Convenience: the allocation the tracking rule follows (lowest-index rule).
std::vector<double> tracking_weights(const OracleSolution& sol);

// Two-armed closed form. mu_star_ab solves d(mu_a, lam) = d(mu_b, lam + eps).
struct TwoArmSolution {
    double t_star = 0.0;
    double mu_star_12 = 0.0;   // equalizer for (mu_1, mu_2); NaN when unused
    double mu_star_21 = 0.0;   // equalizer for (mu_2, mu_1); NaN when unused
};

double mu_star_eps(const Family& family, double mu_a, double mu_b, double eps);
TwoArmSolution two_arm(const BanditInstance& inst);

// Exhaustive grid evaluation of the sup-max-min-inf program; K <= 4.
// Kept deliberately independent of the solver above so the two can be checked
// against each other. weight_grid and lambda_grid are subdivision counts.
struct BruteForceResult {
    double t_star = 0.0;
    bool coarse = false;   // grid too coarse to be meaningful
    long evaluated = 0;    // number of simplex points visited
};

BruteForceResult brute_force_T(const BanditInstance& inst, int weight_grid, int lambda_grid);
BruteForceResult brute_force_T_serial(const BanditInstance& inst, int weight_grid, int lambda_grid);

// T*_eps(mu) * [ (1-delta)/|A_eps| * ln(1/delta) - ln 2 ], floored at zero.
double lower_bound_general(const BanditInstance& inst, double delta);

}  // namespace ebai
