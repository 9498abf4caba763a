#include <doctest.h>

#include <cmath>
#include <random>

#include "ebai/strategies.hpp"

using namespace ebai;

namespace {

StrategyState make_state(Family fam, double eps, std::vector<std::int64_t> counts,
                         std::vector<double> means) {
    StrategyState st(fam, static_cast<int>(counts.size()), eps);
    st.counts = counts;
    st.sums.resize(counts.size());
    for (std::size_t a = 0; a < counts.size(); ++a) {
        st.sums[a] = means[a] * static_cast<double>(counts[a]);
        st.t += counts[a];
    }
    return st;
}

}  // namespace

TEST_SUITE("strategies") {
    TEST_CASE("z statistic: gaussian closed form") {
        auto st = make_state(Family::gaussian(1.0), 0.5, {2, 2}, {1.0, 0.0});
        CHECK(z_stat(st, 0, 1) == doctest::Approx(1.125).epsilon(1e-12));
        // zero when the means coincide and eps = 0
        auto tied = make_state(Family::gaussian(1.0), 0.0, {4, 8}, {0.5, 0.5});
        CHECK(z_stat(tied, 0, 1) == 0.0);
        CHECK(z_stat(tied, 1, 0) == 0.0);
        // the closed form is symmetric whenever both orders are admissible
        auto two = make_state(Family::gaussian(1.0), 0.8, {3, 7}, {0.9, 0.2});
        CHECK(z_stat(two, 0, 1) == doctest::Approx(z_stat(two, 1, 0)).epsilon(1e-12));
    }

    TEST_CASE("z statistic: bernoulli matches grid minimization") {
        auto st = make_state(Family::bernoulli(), 0.1, {3, 5}, {0.6, 0.4});
        const double z = z_stat(st, 0, 1);
        CHECK(z == doctest::Approx(0.34032912973486760).epsilon(1e-6));
        // grid oracle over the pair interval [0.3, 0.6]
        double best = std::numeric_limits<double>::infinity();
        for (double lam = 0.3; lam <= 0.6; lam += 1e-6) {
            best = std::min(best, 3.0 * st.family.kl(0.6, lam) +
                                      5.0 * st.family.kl(0.4, lam + 0.1));
        }
        CHECK(std::abs(z - best) <= 1e-6);
    }

    TEST_CASE("z statistic preconditions") {
        auto st = make_state(Family::bernoulli(), 0.1, {3, 5}, {0.2, 0.9});
        CHECK_THROWS_AS(z_stat(st, 0, 1), std::invalid_argument);  // mean gap > eps
        auto empty = make_state(Family::bernoulli(), 0.1, {0, 5}, {0.0, 0.5});
        CHECK_THROWS_AS(z_stat(empty, 0, 1), std::invalid_argument);
    }

    TEST_CASE("parallel GLRT check") {
        auto st = make_state(Family::gaussian(1.0), 0.5, {10, 10}, {1.0, 0.0});
        // stat = (1/2) * (100/20) * 1.5^2 = 5.625
        CHECK(pglrt_check(st, 5.0).value() == 0);
        CHECK_FALSE(pglrt_check(st, 6.0).has_value());
        // all means equal with eps = 0: the statistic is zero, never stops
        auto tied = make_state(Family::gaussian(1.0), 0.0, {5, 5, 5}, {0.3, 0.3, 0.3});
        CHECK_FALSE(pglrt_check(tied, 0.5).has_value());
    }

    TEST_CASE("recommendation stays inside the empirical eps-optimal set") {
        std::mt19937_64 rng(3);
        for (int trial = 0; trial < 100; ++trial) {
            std::vector<std::int64_t> counts;
            std::vector<double> means;
            for (int a = 0; a < 4; ++a) {
                counts.push_back(1 + static_cast<std::int64_t>(20.0 * uniform01(rng)));
                means.push_back(uniform01(rng));
            }
            auto st = make_state(Family::bernoulli(), 0.1, counts, means);
            const BestCandidate best = best_candidate(st);
            const double top = *std::max_element(means.begin(), means.end());
            CHECK(means[best.arm] >= top - 0.1 - 1e-12);
        }
    }

    TEST_CASE("tracking rule: forced exploration") {
        auto st = make_state(Family::bernoulli(), 0.1, {1, 5, 5, 5},
                             {0.4, 0.5, 0.6, 0.7});
        // sqrt(16) - 2 = 2 > 1, arm 0 undersampled
        const TrackingDecision d = tracking_next_arm(st);
        CHECK(d.arm == 0);
        CHECK(d.forced);
    }

    TEST_CASE("tracking rule: plug-in allocation") {
        // counts match sqrt-t forcing, so the oracle allocation decides
        auto st = make_state(Family::bernoulli(), 0.15, {20, 20, 60},
                             {0.4, 0.5, 0.8});
        const TrackingDecision d = tracking_next_arm(st);
        CHECK_FALSE(d.forced);
        CHECK_FALSE(d.oracle_fallback);
        CHECK(d.arm >= 0);
        CHECK(d.arm < 3);
    }

    TEST_CASE("fixed-allocation scoring") {
        auto st = make_state(Family::gaussian(1.0), 0.0, {5, 5}, {0.2, 0.1});
        CHECK(track_allocation(st, {0.6, 0.4}) == 0);
        // exact ties resolve to the lowest index
        auto even = make_state(Family::gaussian(1.0), 0.0, {5, 5}, {0.2, 0.1});
        CHECK(track_allocation(even, {0.5, 0.5}) == 0);
    }

    TEST_CASE("confidence bounds") {
        auto st = make_state(Family::bernoulli(), 0.1, {10, 10}, {0.5, 0.5});
        auto [lo, hi] = kl_confidence_bounds(st, 0, 1.0);
        CHECK(hi == doctest::Approx(0.71287863145582399).epsilon(1e-6));
        CHECK(lo == doctest::Approx(0.28712136854417601).epsilon(1e-6));
        auto [l0, h0] = kl_confidence_bounds(st, 0, 0.0);
        CHECK(l0 == 0.5);
        CHECK(h0 == 0.5);
        auto gst = make_state(Family::gaussian(2.0), 0.1, {8, 8}, {0.3, 0.3});
        auto [gl, gh] = kl_confidence_bounds(gst, 0, 1.5);
        const double r = std::sqrt(2.0 * 2.0 * 1.5 / 8.0);
        CHECK(gh == doctest::Approx(0.3 + r).epsilon(1e-12));
        CHECK(gl == doctest::Approx(0.3 - r).epsilon(1e-12));
    }

    TEST_CASE("confidence bounds at bernoulli endpoints") {
        auto st = make_state(Family::bernoulli(), 0.1, {10, 10}, {0.0, 1.0});
        auto [lo, hi] = kl_confidence_bounds(st, 0, 1.0);
        CHECK(lo == 0.0);
        CHECK(hi == doctest::Approx(1.0 - std::exp(-0.1)).epsilon(1e-9));
        auto [lo1, hi1] = kl_confidence_bounds(st, 1, 1.0);
        CHECK(hi1 == 1.0);
        CHECK(lo1 == doctest::Approx(std::exp(-0.1)).epsilon(1e-9));
    }

    TEST_CASE("baselines stop immediately on widely separated intervals") {
        for (StrategyKindId kind :
             {StrategyKindId::KlLucb, StrategyKindId::UGapE, StrategyKindId::KlRacing}) {
            auto st = make_state(Family::gaussian(1.0), 0.1, {400, 400}, {2.0, 0.0});
            BaselineState bl(kind, 2);
            const BaselineStep step = bl.step(st, 1.0);
            REQUIRE(step.stop.has_value());
            CHECK(step.stop.value() == 0);
        }
    }

    TEST_CASE("baselines sample on and racing eliminates") {
        auto st = make_state(Family::gaussian(1.0), 0.05, {4, 4, 4}, {0.9, 0.8, -2.0});
        BaselineState lucb(StrategyKindId::KlLucb, 3);
        const BaselineStep s1 = lucb.step(st, 4.0);
        REQUIRE_FALSE(s1.stop.has_value());
        CHECK(s1.pulls.size() == 2);
        CHECK(s1.pulls[0] == 0);  // empirical best
        BaselineState racing(StrategyKindId::KlRacing, 3);
        const BaselineStep s2 = racing.step(st, 0.5);
        CHECK_FALSE(racing.active()[2]);  // far-behind arm dropped
        if (!s2.stop.has_value()) {
            CHECK(s2.pulls.size() == 2);
        }
    }

    TEST_CASE("strategy spec parsing") {
        CHECK(StrategySpec::parse("eps-tas").kind == StrategyKindId::EpsTaS);
        CHECK(StrategySpec::parse("kl-lucb").kind == StrategyKindId::KlLucb);
        CHECK(StrategySpec::parse("ugape").kind == StrategyKindId::UGapE);
        CHECK(StrategySpec::parse("kl-racing").kind == StrategyKindId::KlRacing);
        const StrategySpec f = StrategySpec::parse("fixed:0.25,0.25,0.5");
        CHECK(f.kind == StrategyKindId::FixedWeights);
        CHECK(f.fixed_weights.size() == 3);
        CHECK_THROWS_AS(StrategySpec::parse("fixed:0.25,0.25"), std::invalid_argument);
        CHECK_THROWS_AS(StrategySpec::parse("nope"), std::invalid_argument);
        CHECK(StrategySpec::parse("eps-tas").name() == "eps-tas");
    }
}
