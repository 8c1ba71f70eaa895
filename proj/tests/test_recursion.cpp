#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "symqm/laguerre.hpp"
#include "symqm/recursion.hpp"

#include <cmath>
#include <random>

using namespace symqm::recursion;

TEST_CASE("homogeneous cut: trivial and quadratic cases")
{
    HomogeneousSolution s0 = solve_homogeneous_cut(0, 3);
    REQUIRE(s0.roots.size() == 1);
    CHECK(s0.roots[0] == doctest::Approx(4.0));
    std::vector<double> a0 = homogeneous_coefficients(s0, 0);
    REQUIRE(a0.size() == 1);
    CHECK(a0[0] == doctest::Approx(1.0));

    HomogeneousSolution s1 = solve_homogeneous_cut(1, 3);
    REQUIRE(s1.roots.size() == 2);
    for (int i = 0; i < 2; ++i) {
        double x = s1.roots[static_cast<std::size_t>(i)];
        std::vector<double> a = homogeneous_coefficients(s1, i);
        CHECK(a[1] / a[0] == doctest::Approx((4.0 - x) / 4.0).epsilon(1e-12));
        // first recursion line: -(alpha+1-x) a_0 + (alpha+1) a_1 = 0
        CHECK(std::abs(-(4.0 - x) * a[0] + 4.0 * a[1]) < 1e-12);
    }
}

TEST_CASE("homogeneous cut: residual of all equations at (5, 6)")
{
    HomogeneousSolution s = solve_homogeneous_cut(5, 6);
    for (std::size_t i = 0; i < s.roots.size(); ++i) {
        double x = s.roots[i];
        std::vector<double> a = homogeneous_coefficients(s, static_cast<int>(i));
        a.push_back(symqm::laguerre::eval_rescaled(6, 6, x) * std::tgamma(7.0)); // boundary term
        double worst = 0.0;
        for (int j = 0; j <= 5; ++j) {
            double t0 = j > 0 ? a[static_cast<std::size_t>(j) - 1] : 0.0;
            double t1 = -(2 * j + 7 - x) * a[static_cast<std::size_t>(j)];
            double t2 = double(j + 1) * double(j + 7) * a[static_cast<std::size_t>(j) + 1];
            double scale = std::max({std::abs(t0), std::abs(t1), std::abs(t2)});
            worst = std::max(worst, std::abs(t0 + t1 + t2) / scale);
        }
        CHECK(worst < 1e-10);
    }
}

TEST_CASE("inhomogeneous solve: worked examples and assumption violations")
{
    InhomogeneousSolution a = solve_inhomogeneous(3, 9, Rational(-3, 4), -2);
    CHECK(a.k == 3);
    CHECK(a.gamma == Rational(-1, 24));

    InhomogeneousSolution b = solve_inhomogeneous(6, 12, Rational(-3, 2), -2);
    CHECK(b.k == 3);
    CHECK(b.gamma == Rational(-1, 18));

    CHECK_THROWS_AS(solve_inhomogeneous(3, 9, Rational(-3, 4), -1), std::invalid_argument);
    CHECK_THROWS_AS(solve_inhomogeneous(3, 8, Rational(1), -2), std::invalid_argument);
    CHECK_THROWS_AS(solve_inhomogeneous(9, 3, Rational(1), 4), std::invalid_argument);
    CHECK_THROWS_AS(solve_inhomogeneous(3, 9, Rational(0), -2), std::invalid_argument);
}

TEST_CASE("closed-form mixing coefficients")
{
    CHECK(gamma_even(1, 0) == Rational(-1, 24));
    CHECK(gamma_odd(1, 0) == Rational(-1, 12));
    CHECK(gamma_even(2, 0) == Rational(1, 576));
}

TEST_CASE("closed forms equal the chain products exactly, kappa <= 8")
{
    for (int kappa = 1; kappa <= 8; ++kappa) {
        ChainSolution even = solve_chain(bosonic_chain_spec(kappa, true, 0));
        ChainSolution odd = solve_chain(bosonic_chain_spec(kappa, false, 0));
        for (int t = 0; t < kappa; ++t) {
            CHECK(even.gamma[static_cast<std::size_t>(t)] == gamma_even(kappa, t));
            CHECK(odd.gamma[static_cast<std::size_t>(t)] == gamma_odd(kappa, t));
        }
        CHECK(even.gamma[static_cast<std::size_t>(kappa)] == Rational(1));
    }
}

TEST_CASE("bosonic chain offsets and quantization data")
{
    ChainSolution sol = solve_chain(bosonic_chain_spec(2, true, 3));
    CHECK(sol.quantization_index == 15);
    CHECK(sol.quantization_order == 4);
    CHECK(sol.offset[0] == 6);
    CHECK(sol.offset[1] == 3);
    CHECK(sol.offset[2] == 0);
}

TEST_CASE("chain residuals: bosonic families")
{
    for (int kappa : {1, 2, 3})
        for (bool even : {true, false}) {
            ChainSpec spec = bosonic_chain_spec(kappa, even, 4);
            ChainSolution sol = solve_chain(spec);
            for (std::size_t i = 0; i < sol.roots.size(); ++i)
                CHECK(chain_residual(spec, sol, static_cast<int>(i)) < 1e-10);
        }
}

TEST_CASE("twofold chain: m = 1 degenerates to single mixing")
{
    ChainSpec spec = nf1_chain_spec(1, true, 2);
    ChainSolution two = solve_twofold_chain(spec);
    // level 0 couples only through chi: gamma_0 = 4 chi_0 / (am^2 - a0^2)
    int am = spec.levels[1].alpha;
    int a0 = spec.levels[0].alpha;
    Rational expected = 4 * spec.levels[0].chi / Rational(am * am - a0 * a0);
    CHECK(two.gamma[0] == expected);
}

TEST_CASE("twofold chain residuals: nf=1 families, both parities")
{
    for (int m : {1, 2, 3})
        for (bool even : {true, false}) {
            ChainSpec spec = nf1_chain_spec(m, even, 3);
            ChainSolution sol = solve_twofold_chain(spec);
            for (std::size_t i = 0; i < sol.roots.size(); ++i)
                CHECK(chain_residual(spec, sol, static_cast<int>(i)) < 1e-10);
        }
}

TEST_CASE("nf=1 chain parameters match the recursion sets")
{
    // even-quanta chain: alpha = 3t+5 on even levels, 3t+4 on odd
    ChainSpec even = nf1_chain_spec(3, true, 1);
    CHECK(even.levels[0].alpha == 5);
    CHECK(even.levels[1].alpha == 7);
    CHECK(even.levels[2].alpha == 11);
    CHECK(even.levels[3].alpha == 13);
    CHECK(even.levels[0].chi == Rational(-3, 2));
    CHECK(even.levels[1].chi == Rational(-1));
    CHECK(even.levels[0].mu == Rational(-3, 4));
    CHECK(even.levels[0].q == 0);
    CHECK(even.levels[1].q == -1);
    CHECK(even.levels[0].p == -2);

    ChainSpec odd = nf1_chain_spec(2, false, 1);
    CHECK(odd.levels[0].alpha == 4);
    CHECK(odd.levels[1].alpha == 8);
    CHECK(odd.levels[2].alpha == 10);
    CHECK(odd.levels[0].chi == Rational(-1, 2));
    CHECK(odd.levels[1].chi == Rational(-3));
    CHECK(odd.levels[0].q == -1);
    CHECK(odd.levels[1].q == 0);
}

TEST_CASE("corollary: root set invariant under rescaled mixing strengths")
{
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> scale(2, 9);
    for (bool even : {true, false}) {
        ChainSpec spec = nf1_chain_spec(3, even, 2);
        ChainSolution base = solve_twofold_chain(spec);
        ChainSpec scaled = spec;
        for (ChainLevel& lv : scaled.levels) {
            lv.chi *= scale(rng);
            lv.mu *= scale(rng);
        }
        ChainSolution mod = solve_twofold_chain(scaled);
        REQUIRE(base.roots.size() == mod.roots.size());
        for (std::size_t i = 0; i < base.roots.size(); ++i)
            CHECK(base.roots[i] == doctest::Approx(mod.roots[i]).epsilon(1e-13));
        // coefficients change, admissible x values do not
        CHECK(base.gamma[0] != mod.gamma[0]);
        for (std::size_t i = 0; i < mod.roots.size(); ++i)
            CHECK(chain_residual(scaled, mod, static_cast<int>(i)) < 1e-10);
    }
}

TEST_CASE("malformed chains are rejected")
{
    ChainSpec spec = bosonic_chain_spec(2, true, 1);
    spec.levels[0].q = -1; // breaks q = 1 - k + k'
    CHECK_THROWS_AS(solve_chain(spec), std::invalid_argument);

    ChainSpec bad_alpha = bosonic_chain_spec(2, true, 1);
    bad_alpha.levels[0].alpha = 4; // (alpha_m - alpha_0)/2 not integer
    CHECK_THROWS_AS(solve_chain(bad_alpha), std::invalid_argument);
}
