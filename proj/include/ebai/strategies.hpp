#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ebai/family.hpp"
#include "ebai/oracle.hpp"

namespace ebai {

// Sufficient statistic of a run: per-arm counts and observation sums.
struct StrategyState {
    Family family = Family::bernoulli();
    double eps = 0.0;
    std::int64_t t = 0;
    std::vector<std::int64_t> counts;
    std::vector<double> sums;

    StrategyState() = default;
    StrategyState(Family fam, int num_arms, double eps_val);

    int num_arms() const { return static_cast<int>(counts.size()); }
    double mean(int a) const { return sums[a] / static_cast<double>(counts[a]); }
    bool all_sampled() const;
    void record(int a, double x);
};

// Pairwise test statistic Z^eps_{a,b}: the smallest weighted divergence to an
// alternative where b beats a by more than eps. Requires counts >= 1 on both
// arms and mean(a) >= mean(b) - eps.
double z_stat(const StrategyState& state, int a, int b);

struct BestCandidate {
    int arm = -1;
    double stat = 0.0;
};

// argmax over empirically eps-optimal arms of min_b Z^eps_{a,b}.
BestCandidate best_candidate(const StrategyState& state);

// Parallel GLRT stop check: the best candidate when its statistic exceeds
// beta_value, none otherwise.
std::optional<int> pglrt_check(const StrategyState& state, double beta_value);

struct TrackingDecision {
    int arm = -1;
    bool forced = false;           // picked by the undersampling rule
    bool oracle_fallback = false;  // plug-in solve failed, used uniform weights
};

// eps-Tracking: forced exploration of arms with N_a(t) < sqrt(t) - K/2, else
// track the plug-in optimal allocation (lowest-index tie-breaks throughout).
TrackingDecision tracking_next_arm(const StrategyState& state);

// Arm maximizing t*w_a - N_a(t); used by the fixed-allocation strategy and by
// the tracking step above.
int track_allocation(const StrategyState& state, const std::vector<double>& w);

// KL confidence interval {q : N_a d(mean_a, q) <= beta_value}, clipped to the
// mean domain.
std::pair<double, double> kl_confidence_bounds(const StrategyState& state, int a,
                                               double beta_value);

enum class StrategyKindId { EpsTaS, FixedWeights, KlLucb, UGapE, KlRacing };

struct StrategySpec {
    StrategyKindId kind = StrategyKindId::EpsTaS;
    std::vector<double> fixed_weights;  // FixedWeights only; must sum to 1

    static StrategySpec parse(const std::string& text);
    std::string name() const;
    bool is_baseline() const;
};

struct BaselineStep {
    std::vector<int> pulls;
    std::optional<int> stop;  // recommendation when the stop rule fires
};

// Confidence-bound baselines. All three stop once the candidate's lower bound
// overlaps every other upper bound by at most eps:
//   KL-LUCB:   samples the empirical best arm and its strongest challenger.
//   UGapE:     candidate minimizes the gap index B_a = max_{b!=a} u_b - l_a;
//              samples the candidate and its strongest challenger.
//   KL-Racing: round-robin over an active set, discarding arms whose upper
//              bound falls eps below the best lower bound.
class BaselineState {
public:
    BaselineState(StrategyKindId kind, int num_arms);
    BaselineStep step(const StrategyState& state, double beta_value);
    const std::vector<char>& active() const { return active_; }

private:
    StrategyKindId kind_;
    std::vector<char> active_;
};

}  // namespace ebai
