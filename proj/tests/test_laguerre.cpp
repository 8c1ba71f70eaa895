#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "symqm/laguerre.hpp"

#include <cmath>
#include <random>

using namespace symqm::laguerre;

TEST_CASE("order zero is 1/Gamma(alpha+1) for any x")
{
    CHECK(eval_rescaled(0, 3, 7.3) == doctest::Approx(1.0 / 6.0).epsilon(1e-14));
    CHECK(eval_rescaled(0, 0, -2.5) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(eval_rescaled(0, 6, 123.0) == doctest::Approx(1.0 / 720.0).epsilon(1e-14));
}

TEST_CASE("linear polynomial vanishes at its root")
{
    // Lag^3_1(x) = (1+3) - x
    CHECK(eval_rescaled(1, 3, 4.0) == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(eval_unrescaled(1, 3, 0.0) == doctest::Approx(4.0).epsilon(1e-13));
}

TEST_CASE("quadratic root from the expanded recurrence")
{
    // Lag^3_2(x) = (x^2 - 10x + 20)/2, roots 5 +- sqrt(5)
    double root = 5.0 - std::sqrt(5.0);
    CHECK(std::abs(eval_rescaled(2, 3, root)) < 1e-12);
    CHECK(std::abs(eval_unrescaled(2, 3, root)) < 1e-10);
    double x = 1.7;
    CHECK(eval_unrescaled(2, 3, x) == doctest::Approx((x * x - 10 * x + 20) / 2).epsilon(1e-13));
}

TEST_CASE("value at zero is binomial(n+alpha, n)/Gamma(n+alpha+1) = 1/(n! alpha!)")
{
    for (int alpha : {0, 3, 6}) {
        double afact = std::tgamma(double(alpha) + 1.0);
        double nfact = 1.0;
        for (int n = 0; n <= 8; ++n) {
            if (n > 0)
                nfact *= n;
            CHECK(eval_rescaled(n, alpha, 0.0)
                  == doctest::Approx(1.0 / (afact * nfact)).epsilon(1e-13));
        }
    }
}

TEST_CASE("roots: explicit low orders")
{
    std::vector<double> r1 = roots(1, 3);
    REQUIRE(r1.size() == 1);
    CHECK(r1[0] == doctest::Approx(4.0).epsilon(1e-14));

    std::vector<double> r2 = roots(2, 3);
    REQUIRE(r2.size() == 2);
    CHECK(r2[0] == doctest::Approx(5.0 - std::sqrt(5.0)).epsilon(1e-13));
    CHECK(r2[1] == doctest::Approx(5.0 + std::sqrt(5.0)).epsilon(1e-13));
}

TEST_CASE("roots interlace the next lower order")
{
    std::vector<double> r3 = roots(3, 6);
    std::vector<double> r2 = roots(2, 6);
    REQUIRE(r3.size() == 3);
    CHECK(r3[0] < r2[0]);
    CHECK(r2[0] < r3[1]);
    CHECK(r3[1] < r2[1]);
    CHECK(r2[1] < r3[2]);
}

TEST_CASE("root properties across the working range")
{
    for (int alpha : {3, 4, 9, 21, 40}) {
        for (int n : {1, 2, 7, 23, 60}) {
            std::vector<double> xs = roots(n, alpha);
            REQUIRE(static_cast<int>(xs.size()) == n);
            CHECK(xs.front() > 0.0);
            for (std::size_t i = 1; i < xs.size(); ++i)
                CHECK((xs[i] - xs[i - 1]) / xs[i] > 1e-9);
            std::vector<double> prev = n > 1 ? roots(n - 1, alpha) : std::vector<double>{};
            for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
                CHECK(xs[i] < prev[i]);
                CHECK(prev[i] < xs[i + 1]);
            }
            for (double x : xs)
                CHECK(recurrence_residual(n, alpha, x) < 1e-10);
        }
    }
}

TEST_CASE("recurrence residual stays tiny at random points")
{
    std::mt19937 rng(3);
    std::uniform_real_distribution<double> xs(0.0, 150.0);
    for (int i = 0; i < 50; ++i)
        CHECK(recurrence_residual(40, 11, xs(rng)) < 1e-12);
}

TEST_CASE("quantization energies are half the roots")
{
    std::vector<double> e1 = quantization_energies(1, 3);
    REQUIRE(e1.size() == 1);
    CHECK(e1[0] == doctest::Approx(2.0).epsilon(1e-14));

    std::vector<double> e2 = quantization_energies(2, 3);
    CHECK(e2[0] == doctest::Approx((5.0 - std::sqrt(5.0)) / 2).epsilon(1e-13));
    CHECK(e2[1] == doctest::Approx((5.0 + std::sqrt(5.0)) / 2).epsilon(1e-13));

    CHECK(quantization_energies(1, 6)[0] == doctest::Approx(3.5).epsilon(1e-14));
}

TEST_CASE("bad arguments are rejected")
{
    CHECK_THROWS_AS(eval_rescaled(-1, 3, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(eval_rescaled(2, -1, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(eval_rescaled(2, 3, std::nan("")), std::invalid_argument);
    CHECK_THROWS_AS(roots(0, 3), std::invalid_argument);
}

TEST_CASE("overflow is reported, not saturated")
{
    // Large order at huge argument drives the sweep out of double range.
    CHECK_THROWS_AS(eval_rescaled(3, 0, 1e300), std::overflow_error);
}
