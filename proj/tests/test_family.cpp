#include <doctest.h>

#include <cmath>
#include <random>

#include "ebai/family.hpp"

using namespace ebai;

TEST_SUITE("family") {
    TEST_CASE("gaussian divergence") {
        const Family g = Family::gaussian(1.0);
        CHECK(g.kl(0.0, 1.0) == doctest::Approx(0.5).epsilon(1e-12));
        CHECK(g.kl(1.0, 1.0) == 0.0);
        const Family g4 = Family::gaussian(4.0);
        CHECK(g4.kl(0.0, 2.0) == doctest::Approx(0.5).epsilon(1e-12));
    }

    TEST_CASE("bernoulli divergence values") {
        const Family b = Family::bernoulli();
        CHECK(b.kl(0.5, 0.5) == 0.0);
        // high-precision references for the binary relative entropy
        CHECK(b.kl(0.5, 0.25) == doctest::Approx(0.14384103622589046).epsilon(1e-12));
        CHECK(b.kl(0.25, 0.5) == doctest::Approx(0.13081203594113696).epsilon(1e-12));
    }

    TEST_CASE("bernoulli endpoint conventions") {
        const Family b = Family::bernoulli();
        CHECK(b.kl(0.0, 0.3) == doctest::Approx(std::log(1.0 / 0.7)).epsilon(1e-12));
        CHECK(b.kl(1.0, 0.3) == doctest::Approx(std::log(1.0 / 0.3)).epsilon(1e-12));
        CHECK(b.kl(0.0, 0.0) == 0.0);
        CHECK(b.kl(1.0, 1.0) == 0.0);
        CHECK(std::isinf(b.kl(0.5, 0.0)));
        CHECK(std::isinf(b.kl(0.5, 1.0)));
        CHECK(std::isinf(b.kl(0.0, 1.0)));
    }

    TEST_CASE("domain violations are input errors") {
        const Family b = Family::bernoulli();
        CHECK_THROWS_AS(b.kl(-0.1, 0.5), std::invalid_argument);
        CHECK_THROWS_AS(b.kl(0.5, 1.2), std::invalid_argument);
        CHECK_THROWS_AS(b.kl_d2(0.5, 0.0), std::invalid_argument);
        CHECK_THROWS_AS(b.kl_d2(0.5, 1.0), std::invalid_argument);
        CHECK_THROWS_AS(Family::gaussian(0.0), std::invalid_argument);
        CHECK_THROWS_AS(Family::gaussian(-1.0), std::invalid_argument);
    }

    TEST_CASE("derivative values") {
        const Family g = Family::gaussian(1.0);
        CHECK(g.kl_d2(0.0, 1.0) == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(g.kl_d2(0.7, 0.7) == 0.0);
        const Family b = Family::bernoulli();
        CHECK(b.kl_d2(0.5, 0.5) == 0.0);
        CHECK(b.kl_d2(0.5, 0.25) == doctest::Approx(-4.0 / 3.0).epsilon(1e-12));
        // sign pattern around the minimum
        CHECK(b.kl_d2(0.5, 0.4) < 0.0);
        CHECK(b.kl_d2(0.5, 0.6) > 0.0);
    }

    TEST_CASE("derivatives match finite differences") {
        std::mt19937_64 rng(7);
        auto u = [&](double lo, double hi) { return lo + (hi - lo) * uniform01(rng); };
        const double h = 1e-6;
        for (const Family& fam : {Family::bernoulli(), Family::gaussian(2.0)}) {
            const bool bern = fam.kind() == FamilyKind::Bernoulli;
            for (int i = 0; i < 200; ++i) {
                const double mu = bern ? u(0.05, 0.95) : u(-3.0, 3.0);
                const double lam = bern ? u(0.05, 0.95) : u(-3.0, 3.0);
                const double fd = (fam.kl(mu, lam + h) - fam.kl(mu, lam - h)) / (2.0 * h);
                const double an = fam.kl_d2(mu, lam);
                CHECK(std::abs(fd - an) <= 1e-6 * std::max(1.0, std::abs(an)));
                const double fd2 =
                    (fam.kl_d2(mu, lam + h) - fam.kl_d2(mu, lam - h)) / (2.0 * h);
                const double an2 = fam.kl_dd2(mu, lam);
                CHECK(std::abs(fd2 - an2) <= 1e-4 * std::max(1.0, std::abs(an2)));
            }
        }
    }

    TEST_CASE("nonnegativity and identification on a grid") {
        const Family b = Family::bernoulli();
        for (int i = 1; i < 20; ++i) {
            for (int j = 1; j < 20; ++j) {
                const double d = b.kl(i / 20.0, j / 20.0);
                CHECK(d >= 0.0);
                if (i == j) {
                    CHECK(d == 0.0);
                } else {
                    CHECK(d > 0.0);
                }
            }
        }
    }

    TEST_CASE("strict convexity in the second argument") {
        std::mt19937_64 rng(11);
        const Family b = Family::bernoulli();
        for (int i = 0; i < 300; ++i) {
            const double mu = 0.02 + 0.96 * uniform01(rng);
            const double l1 = 0.02 + 0.96 * uniform01(rng);
            const double l2 = 0.02 + 0.96 * uniform01(rng);
            if (std::abs(l1 - l2) < 1e-4) continue;
            CHECK(b.kl(mu, 0.5 * (l1 + l2)) < 0.5 * b.kl(mu, l1) + 0.5 * b.kl(mu, l2));
        }
    }

    TEST_CASE("bernoulli sampling: support and mean") {
        const Family b = Family::bernoulli();
        std::mt19937_64 rng(123);
        double sum = 0.0;
        const int n = 1'000'000;
        for (int i = 0; i < n; ++i) {
            const double x = b.sample(0.3, rng);
            CHECK((x == 0.0 || x == 1.0));
            sum += x;
        }
        // 4 * sqrt(mu(1-mu)/n) ~ 0.0018
        CHECK(std::abs(sum / n - 0.3) <= 0.002);
    }

    TEST_CASE("gaussian sampling: variance") {
        const Family g = Family::gaussian(4.0);
        std::mt19937_64 rng(321);
        const int n = 1'000'000;
        double sum = 0.0, sumsq = 0.0;
        for (int i = 0; i < n; ++i) {
            const double x = g.sample(0.0, rng);
            sum += x;
            sumsq += x * x;
        }
        const double mean = sum / n;
        const double var = sumsq / n - mean * mean;
        CHECK(std::abs(var - 4.0) <= 0.05);
        CHECK(std::abs(mean) <= 0.01);
    }

    TEST_CASE("sampling is deterministic given the rng state") {
        const Family g = Family::gaussian(1.0);
        std::mt19937_64 r1(99), r2(99);
        for (int i = 0; i < 100; ++i) {
            CHECK(g.sample(0.5, r1) == g.sample(0.5, r2));
        }
    }

    TEST_CASE("kl_bin") {
        CHECK(kl_bin(0.1, 0.9) == doctest::Approx(1.7577796618689755).epsilon(1e-12));
        CHECK(kl_bin(0.5, 0.5) == 0.0);
        CHECK(kl_bin(0.0, 0.5) == doctest::Approx(std::log(2.0)).epsilon(1e-12));
        CHECK(std::isinf(kl_bin(0.5, 0.0)));
    }
}
