#include "tfkac/coeffs.hpp"

#include "support.hpp"

#include <doctest.h>

#include <cmath>

using namespace tfkac;

TEST_CASE("grunwald closed-form values") {
    const auto g = grunwald(0.5, 2);
    CHECK(g[0] == 1.0);
    CHECK(g[1] == doctest::Approx(-0.5).epsilon(1e-15));
    CHECK(g[2] == doctest::Approx(-0.125).epsilon(1e-15));

    CHECK(grunwald(0.3, 0) == std::vector<double>{1.0});
}

TEST_CASE("grunwald matches the binomial product formula") {
    // reference values from the direct product in extended precision
    CHECK(grunwald(0.3, 50)[50]
          == doctest::Approx(-0.0014350593720515522).epsilon(1e-14));
    CHECK(grunwald(0.3, 7)[7] == doctest::Approx(-0.018957273750).epsilon(1e-14));
    CHECK(grunwald(0.7, 33)[33]
          == doctest::Approx(-0.00062467215059070157).epsilon(1e-14));
    CHECK_THROWS_AS(grunwald(1.2, 4), GammaOutOfRange);
    CHECK_THROWS_AS(grunwald(0.0, 4), GammaOutOfRange);
}

TEST_CASE("tempered coefficients") {
    SUBCASE("lambda = 0 reduces to the plain sequence") {
        const auto plain = grunwald(0.4, 64);
        const auto tempered = tempered_grunwald(0.4, 0.0, 0.01, 64);
        for (size_t k = 0; k < plain.size(); ++k)
            CHECK(tempered[k] == plain[k]);
    }
    SUBCASE("closed form for the first coefficient") {
        const auto g = tempered_grunwald(0.5, 3.0, 0.1, 1);
        CHECK(g[1] == doctest::Approx(-0.37040911034085893).epsilon(1e-14));
    }
    SUBCASE("recurrence form holds") {
        const double gamma = 0.7, lambda = 2.5, tau = 0.03;
        const auto g = tempered_grunwald(gamma, lambda, tau, 200);
        const double decay = std::exp(-lambda * tau);
        for (int k = 1; k <= 200; ++k)
            CHECK(g[k]
                  == doctest::Approx(decay * (1.0 - (gamma + 1.0) / k) * g[k - 1])
                         .epsilon(1e-12));
    }
    SUBCASE("sign pattern and partial-sum lower bound") {
        for (int trial = 0; trial < 50; ++trial) {
            const double gamma = test::uniform(0.05, 0.95);
            const double lambda = test::uniform(0.0, 6.0);
            const double tau = test::uniform(1e-4, 0.5);
            const auto g = tempered_grunwald(gamma, lambda, tau, 256);
            CHECK(g[0] == 1.0);
            double sum = g[0];
            const double bound = std::pow(1.0 - std::exp(-lambda * tau), gamma);
            for (int k = 1; k <= 256; ++k) {
                CHECK(g[k] < 0.0);
                sum += g[k];
                CHECK(sum > bound);
            }
        }
    }
    CHECK_THROWS_AS(tempered_grunwald(0.5, -1.0, 0.1, 4), NegativeTempering);
}

TEST_CASE("d coefficients") {
    SUBCASE("lambda = 0 gives d_0 = 1") {
        const auto d = d_coeffs(0.6, 0.0, 0.05, 16);
        CHECK(d[0] == 1.0);
        const auto g = grunwald(0.6, 16);
        for (int k = 1; k <= 16; ++k)
            CHECK(d[k] == g[k]);
    }
    SUBCASE("closed form for d_0") {
        const auto d = d_coeffs(0.5, 3.0, 0.1, 1);
        CHECK(d[0] == doctest::Approx(0.52857082588737112).epsilon(1e-14));
    }
    SUBCASE("partial sums stay above the exponential lower bound") {
        const double gamma = 0.35, lambda = 4.0, tau = 1e-2;
        const auto d = d_coeffs(gamma, lambda, tau, 10000);
        const double lt = lambda * tau;
        const double bound = std::exp(-gamma * lt)
                             * (std::pow(std::exp(lt) - 1.0, gamma) - std::pow(lt, gamma));
        CHECK(bound > 0.0);
        double sum = 0.0;
        for (double dk : d) {
            sum += dk;
            CHECK(sum > bound);
        }
    }
}

TEST_CASE("q partial sums") {
    SUBCASE("first two values") {
        const auto q = q_partial_sums(0.5, 1);
        CHECK(q[0] == 1.0);
        CHECK(q[1] == doctest::Approx(0.5).epsilon(1e-15));
    }
    SUBCASE("coefficients of (1-z)^(gamma-1)") {
        CHECK(q_partial_sums(0.3, 40)[40]
              == doctest::Approx(0.25406842695099355).epsilon(1e-13));
        CHECK(q_partial_sums(0.7, 12)[12]
              == doctest::Approx(0.058190737674990289).epsilon(1e-13));
    }
    SUBCASE("positivity and difference identity") {
        const auto q = q_partial_sums(0.85, 300);
        const auto g = grunwald(0.85, 300);
        for (int k = 1; k <= 300; ++k) {
            CHECK(q[k] > 0.0);
            CHECK(q[k] - q[k - 1] == doctest::Approx(g[k]).epsilon(1e-12));
        }
    }
    SUBCASE("scaled partial-sum limit") {
        // tau^{1-gamma} sum_{k=0}^{n-1} Q_{n-1-k} -> t_n^{1-gamma}/Gamma(2-gamma)
        const double gamma = 0.6;
        double prev_err = 1.0;
        for (int n : {64, 128, 256, 512}) {
            const double tau = 1.0 / n; // t_n = 1 fixed
            const auto q = q_partial_sums(gamma, n);
            double sum = 0.0;
            for (int k = 0; k < n; ++k)
                sum += q[n - 1 - k];
            const double value = std::pow(tau, 1.0 - gamma) * sum;
            const double err = std::abs(value * std::tgamma(2.0 - gamma) - 1.0);
            CHECK(err < prev_err);
            prev_err = err;
        }
        CHECK(prev_err < 2.0 / 512.0);
    }
}

TEST_CASE("lower-triangular quadratic form is nonnegative") {
    for (int trial = 0; trial < 100; ++trial) {
        const double gamma = test::uniform(0.05, 0.95);
        const double lambda = test::uniform(0.0, 5.0);
        const double tau = test::uniform(1e-4, 0.25);
        const int L = 1 + static_cast<int>(test::uniform(0.0, 255.0));
        const auto d = d_coeffs(gamma, lambda, tau, L);
        std::vector<double> z(L + 1);
        double norm2 = 0.0;
        for (auto& v : z) {
            v = test::uniform(-1.0, 1.0);
            norm2 += v * v;
        }
        double form = 0.0;
        for (int n = 0; n <= L; ++n)
            for (int k = 0; k <= n; ++k)
                form += d[k] * z[n - k] * z[n];
        CHECK(form >= -1e-12 * norm2);
    }
}

TEST_CASE("generating function at z = 1/2") {
    const double z = 0.5;
    for (double lambda : {0.0, 3.0}) {
        const double gamma = 0.45, tau = 0.02;
        const int n = 128;
        const auto g = tempered_grunwald(gamma, lambda, tau, n);
        double sum = 0.0;
        for (int k = 0; k <= n; ++k)
            sum += g[k] * std::pow(z, k);
        const double target = std::pow(1.0 - z * std::exp(-lambda * tau), gamma);
        const double tail = std::abs(g[n]) * std::pow(z, n + 1) / (1.0 - z);
        CHECK(std::abs(sum - target) <= tail + 1e-14);
    }
}

TEST_CASE("coefficient table") {
    const CoefficientTable t = CoefficientTable::build(0.5, 3.0, 0.01, 64);
    CHECK(t.max_index() == 64);
    for (int k = 0; k <= 64; ++k)
        CHECK(t.g_tempered[k]
              == doctest::Approx(std::exp(-k * 3.0 * 0.01) * t.g_plain[k]).epsilon(1e-13));
    CHECK(t.d[0] > 0.0);
    CHECK_THROWS_AS(CoefficientTable::build(0.5, 3.0, 0.01, (1 << 16) + 1), BadConfig);
}
