#include "ebai/strategies.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "ebai/root_find.hpp"

namespace ebai {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

StrategyState::StrategyState(Family fam, int num_arms, double eps_val)
    : family(fam), eps(eps_val), t(0), counts(num_arms, 0), sums(num_arms, 0.0) {}

bool StrategyState::all_sampled() const {
    return std::all_of(counts.begin(), counts.end(), [](std::int64_t n) { return n >= 1; });
}

void StrategyState::record(int a, double x) {
    counts[a] += 1;
    sums[a] += x;
    t += 1;
}

double z_stat(const StrategyState& state, int a, int b) {
    if (a == b || state.counts[a] < 1 || state.counts[b] < 1) {
        throw std::invalid_argument("z_stat: both arms need at least one sample");
    }
    const double ma = state.mean(a);
    const double mb = state.mean(b);
    if (ma < mb - state.eps) {
        throw std::invalid_argument("z_stat: requires mean(a) >= mean(b) - eps");
    }
    const double na = static_cast<double>(state.counts[a]);
    const double nb = static_cast<double>(state.counts[b]);
    if (state.family.kind() == FamilyKind::GaussianKnownVariance) {
        const double gap = std::abs(ma - mb) + state.eps;
        return nb * na / (na + nb) * gap * gap / (2.0 * state.family.sigma2());
    }
    return pair_alt_inf(state.family, ma, mb, state.eps, na, nb);
}

BestCandidate best_candidate(const StrategyState& state) {
    if (!state.all_sampled()) {
        throw std::invalid_argument("best_candidate: every arm needs a sample");
    }
    const int K = state.num_arms();
    double top = -kInf;
    for (int a = 0; a < K; ++a) top = std::max(top, state.mean(a));

    BestCandidate best{-1, -kInf};
    for (int a = 0; a < K; ++a) {
        if (state.mean(a) < top - state.eps) continue;
        double worst = kInf;
        for (int b = 0; b < K; ++b) {
            if (b == a) continue;
            worst = std::min(worst, z_stat(state, a, b));
        }
        if (worst > best.stat) best = {a, worst};
    }
    return best;
}

std::optional<int> pglrt_check(const StrategyState& state, double beta_value) {
    const BestCandidate best = best_candidate(state);
    if (best.stat > beta_value) return best.arm;
    return std::nullopt;
}

int track_allocation(const StrategyState& state, const std::vector<double>& w) {
    const int K = state.num_arms();
    int pick = 0;
    double best = -kInf;
    for (int a = 0; a < K; ++a) {
        const double score =
            static_cast<double>(state.t) * w[a] - static_cast<double>(state.counts[a]);
        if (score > best) {
            best = score;
            pick = a;
        }
    }
    return pick;
}

TrackingDecision tracking_next_arm(const StrategyState& state) {
    if (!state.all_sampled()) {
        throw std::invalid_argument("tracking_next_arm: initialization not complete");
    }
    const int K = state.num_arms();
    const double cutoff =
        std::sqrt(static_cast<double>(state.t)) - static_cast<double>(K) / 2.0;

    int forced = -1;
    std::int64_t fewest = std::numeric_limits<std::int64_t>::max();
    for (int a = 0; a < K; ++a) {
        if (static_cast<double>(state.counts[a]) < cutoff && state.counts[a] < fewest) {
            fewest = state.counts[a];
            forced = a;
        }
    }
    if (forced >= 0) return {forced, true, false};

    BanditInstance plugin{state.family, {}, state.eps};
    plugin.means.resize(K);
    for (int a = 0; a < K; ++a) plugin.means[a] = state.mean(a);

    std::vector<double> w;
    bool fallback = false;
    try {
        w = tracking_weights(characteristic_time(plugin));
    } catch (const std::exception&) {
        w.assign(K, 1.0 / static_cast<double>(K));
        fallback = true;
    }
    return {track_allocation(state, w), false, fallback};
}

std::pair<double, double> kl_confidence_bounds(const StrategyState& state, int a,
                                               double beta_value) {
    if (state.counts[a] < 1) {
        throw std::invalid_argument("kl_confidence_bounds: arm has no samples");
    }
    const Family& fam = state.family;
    const double mu = state.mean(a);
    const double n = static_cast<double>(state.counts[a]);
    if (beta_value <= 0.0) return {mu, mu};

    if (fam.kind() == FamilyKind::GaussianKnownVariance) {
        const double r = std::sqrt(2.0 * fam.sigma2() * beta_value / n);
        return {mu - r, mu + r};
    }
    double upper = fam.mean_hi();
    if (mu < fam.mean_hi()) {
        auto f = [&](double q) { return n * fam.kl(mu, q) - beta_value; };
        auto df = [&](double q) { return n * fam.kl_d2(mu, q); };
        upper = find_root_increasing(f, df, mu, fam.mean_hi(),
                                     {.rel_tol = 1e-12, .abs_tol = 1e-14});
    }
    double lower = fam.mean_lo();
    if (mu > fam.mean_lo()) {
        // divergence decreases left of mu, so beta - n*d is increasing in q
        auto f = [&](double q) { return beta_value - n * fam.kl(mu, q); };
        auto df = [&](double q) { return -n * fam.kl_d2(mu, q); };
        lower = find_root_increasing(f, df, fam.mean_lo(), mu,
                                     {.rel_tol = 1e-12, .abs_tol = 1e-14});
    }
    return {lower, upper};
}

StrategySpec StrategySpec::parse(const std::string& text) {
    StrategySpec spec;
    if (text == "eps-tas") {
        spec.kind = StrategyKindId::EpsTaS;
    } else if (text == "kl-lucb") {
        spec.kind = StrategyKindId::KlLucb;
    } else if (text == "ugape") {
        spec.kind = StrategyKindId::UGapE;
    } else if (text == "kl-racing") {
        spec.kind = StrategyKindId::KlRacing;
    } else if (text.rfind("fixed:", 0) == 0) {
        spec.kind = StrategyKindId::FixedWeights;
        std::stringstream ss(text.substr(6));
        std::string tok;
        double total = 0.0;
        while (std::getline(ss, tok, ',')) {
            spec.fixed_weights.push_back(std::stod(tok));
            total += spec.fixed_weights.back();
        }
        if (spec.fixed_weights.empty() || std::abs(total - 1.0) > 1e-9) {
            throw std::invalid_argument("strategy: fixed weights must sum to 1");
        }
    } else {
        throw std::invalid_argument("unknown strategy: " + text);
    }
    return spec;
}

std::string StrategySpec::name() const {
    switch (kind) {
        case StrategyKindId::EpsTaS: return "eps-tas";
        case StrategyKindId::KlLucb: return "kl-lucb";
        case StrategyKindId::UGapE: return "ugape";
        case StrategyKindId::KlRacing: return "kl-racing";
        case StrategyKindId::FixedWeights: {
            std::string out = "fixed:";
            for (std::size_t i = 0; i < fixed_weights.size(); ++i) {
                if (i) out += ',';
                out += std::to_string(fixed_weights[i]);
            }
            return out;
        }
    }
    return "?";
}

bool StrategySpec::is_baseline() const {
    return kind == StrategyKindId::KlLucb || kind == StrategyKindId::UGapE ||
           kind == StrategyKindId::KlRacing;
}

BaselineState::BaselineState(StrategyKindId kind, int num_arms)
    : kind_(kind), active_(num_arms, 1) {
    if (kind != StrategyKindId::KlLucb && kind != StrategyKindId::UGapE &&
        kind != StrategyKindId::KlRacing) {
        throw std::invalid_argument("BaselineState: not a baseline strategy");
    }
}

BaselineStep BaselineState::step(const StrategyState& state, double beta_value) {
    const int K = state.num_arms();
    const double eps = state.eps;
    std::vector<double> lo(K), up(K);
    for (int a = 0; a < K; ++a) {
        if (kind_ == StrategyKindId::KlRacing && !active_[a]) continue;
        std::tie(lo[a], up[a]) = kl_confidence_bounds(state, a, beta_value);
    }

    BaselineStep out;
    if (kind_ == StrategyKindId::KlLucb || kind_ == StrategyKindId::UGapE) {
        int cand = 0;
        if (kind_ == StrategyKindId::KlLucb) {
            for (int a = 1; a < K; ++a) {
                if (state.mean(a) > state.mean(cand)) cand = a;
            }
        } else {
            double best_gap = kInf;
            for (int a = 0; a < K; ++a) {
                double other_up = -kInf;
                for (int b = 0; b < K; ++b) {
                    if (b != a) other_up = std::max(other_up, up[b]);
                }
                const double gap = other_up - lo[a];
                if (gap < best_gap) {
                    best_gap = gap;
                    cand = a;
                }
            }
        }
        int challenger = -1;
        double chall_up = -kInf;
        for (int b = 0; b < K; ++b) {
            if (b != cand && up[b] > chall_up) {
                chall_up = up[b];
                challenger = b;
            }
        }
        if (lo[cand] >= chall_up - eps) {
            out.stop = cand;
        } else {
            out.pulls = {cand, challenger};
        }
        return out;
    }

    // KL-Racing: eliminate dominated arms, then race the survivors.
    double best_lo = -kInf;
    for (int a = 0; a < K; ++a) {
        if (active_[a]) best_lo = std::max(best_lo, lo[a]);
    }
    for (int b = 0; b < K; ++b) {
        if (active_[b] && up[b] < best_lo - eps) active_[b] = 0;
    }
    std::vector<int> survivors;
    for (int a = 0; a < K; ++a) {
        if (active_[a]) survivors.push_back(a);
    }
    if (survivors.size() == 1) {
        out.stop = survivors.front();
        return out;
    }
    for (int a : survivors) {
        double other_up = -kInf;
        for (int b : survivors) {
            if (b != a) other_up = std::max(other_up, up[b]);
        }
        if (lo[a] >= other_up - eps) {
            out.stop = a;
            return out;
        }
    }
    out.pulls = survivors;
    return out;
}

}  // namespace ebai
