#include "symqm/recursion.hpp"

#include "symqm/laguerre.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace symqm {
namespace recursion {

namespace {

Rational factorial(int n)
{
    mpz_class r = 1;
    for (int i = 2; i <= n; ++i)
        r *= i;
    return Rational(r);
}

} // namespace

int ChainSpec::offset(int t) const
{
    return (levels.back().alpha - levels[static_cast<std::size_t>(t)].alpha) / 2;
}

void ChainSpec::validate() const
{
    if (levels.empty())
        throw std::invalid_argument("chain: at least one level required");
    if (cut_order < 0)
        throw std::invalid_argument("chain: cut order must be >= 0");
    const int top = levels.back().alpha;
    auto k_of = [&](int t) {
        return t >= m() ? 0 : (top - levels[static_cast<std::size_t>(t)].alpha) / 2;
    };
    for (int t = 0; t < m(); ++t) {
        int diff = top - levels[static_cast<std::size_t>(t)].alpha;
        if (diff <= 0 || diff % 2 != 0)
            throw std::invalid_argument("chain: (alpha_m - alpha_t)/2 must be a positive integer at level "
                                        + std::to_string(t));
        const ChainLevel& lv = levels[static_cast<std::size_t>(t)];
        if (lv.chi == 0)
            throw std::invalid_argument("chain: vanishing mixing strength chi at level " + std::to_string(t));
        if (lv.q != 1 - k_of(t) + k_of(t + 1))
            throw std::invalid_argument("chain: shift q violates q_t = 1 - k_t + k_{t+1} at level "
                                        + std::to_string(t));
        if (twofold && t + 2 <= m() && lv.p != 1 - k_of(t) + k_of(t + 2))
            throw std::invalid_argument("chain: shift p violates p_t = 1 - k_t + k_{t+2} at level "
                                        + std::to_string(t));
    }
}

HomogeneousSolution solve_homogeneous_cut(int kappa, int alpha)
{
    if (kappa < 0)
        throw std::invalid_argument("solve_homogeneous_cut: kappa must be >= 0");
    HomogeneousSolution sol;
    sol.alpha = alpha;
    sol.order = kappa + 1;
    sol.roots = laguerre::roots(kappa + 1, alpha);
    return sol;
}

std::vector<double> homogeneous_coefficients(const HomogeneousSolution& sol, int root_index)
{
    if (root_index < 0 || root_index >= static_cast<int>(sol.roots.size()))
        throw std::invalid_argument("homogeneous_coefficients: root index out of range");
    double x = sol.roots[static_cast<std::size_t>(root_index)];
    std::vector<double> a = laguerre::eval_rescaled_all(sol.order - 1, sol.alpha, x);
    double scale = std::exp(std::lgamma(double(sol.alpha) + 1)); // a_0 = 1
    for (double& v : a)
        v *= scale;
    return a;
}

InhomogeneousSolution solve_inhomogeneous(int alpha, int beta, const Rational& chi, int q)
{
    if (chi == 0)
        throw std::invalid_argument("solve_inhomogeneous: chi must be nonzero");
    int diff = beta - alpha;
    if (diff <= 0 || diff % 2 != 0)
        throw std::invalid_argument("solve_inhomogeneous: (beta-alpha)/2 must be a positive integer");
    InhomogeneousSolution sol;
    sol.k = diff / 2;
    if (q != 1 - sol.k)
        throw std::invalid_argument("solve_inhomogeneous: shift must satisfy q = 1 - k");
    sol.gamma = 4 * chi / Rational(beta * beta - alpha * alpha);
    sol.gamma.canonicalize();
    return sol;
}

namespace {

ChainSolution make_solution_skeleton(const ChainSpec& spec)
{
    ChainSolution sol;
    sol.quantization_order = spec.cut_order + 1;
    sol.quantization_index = spec.levels.back().alpha;
    sol.roots = laguerre::roots(sol.quantization_order, sol.quantization_index);
    sol.gamma.assign(spec.levels.size(), Rational(1));
    sol.offset.resize(spec.levels.size());
    for (int t = 0; t <= spec.m(); ++t)
        sol.offset[static_cast<std::size_t>(t)] = spec.offset(t);
    return sol;
}

} // namespace

ChainSolution solve_chain(const ChainSpec& spec)
{
    if (spec.twofold)
        throw std::invalid_argument("solve_chain: twofold spec, use solve_twofold_chain");
    spec.validate();
    ChainSolution sol = make_solution_skeleton(spec);
    const int am = sol.quantization_index;
    Rational acc = 1;
    for (int t = spec.m() - 1; t >= 0; --t) {
        const ChainLevel& lv = spec.levels[static_cast<std::size_t>(t)];
        Rational gamma_t = 4 * lv.chi / Rational(am * am - lv.alpha * lv.alpha);
        acc *= gamma_t;
        acc.canonicalize();
        sol.gamma[static_cast<std::size_t>(t)] = acc;
    }
    return sol;
}

ChainSolution solve_twofold_chain(const ChainSpec& spec)
{
    ChainSpec checked = spec;
    checked.twofold = true;
    checked.validate();
    ChainSolution sol = make_solution_skeleton(checked);
    const int am = sol.quantization_index;
    for (int y = checked.m() - 1; y >= 0; --y) {
        const ChainLevel& lv = checked.levels[static_cast<std::size_t>(y)];
        Rational g1 = sol.gamma[static_cast<std::size_t>(y) + 1];
        // The mu coupling of level m-1 reaches the vanishing level m+1.
        Rational g2 = (y + 2 <= checked.m()) ? sol.gamma[static_cast<std::size_t>(y) + 2] : Rational(0);
        Rational g = 4 * (lv.chi * g1 + lv.mu * g2) / Rational(am * am - lv.alpha * lv.alpha);
        g.canonicalize();
        sol.gamma[static_cast<std::size_t>(y)] = g;
    }
    return sol;
}

Rational gamma_even(int kappa, int t)
{
    if (t < 0 || t > kappa - 1)
        throw std::invalid_argument("gamma_even: need 0 <= t <= kappa-1");
    Rational pow24 = 1;
    for (int i = 0; i < kappa - t; ++i)
        pow24 *= -24;
    Rational r = factorial(kappa + t) / (pow24 * factorial(kappa - t) * factorial(2 * t));
    r.canonicalize();
    return r;
}

Rational gamma_odd(int kappa, int t)
{
    if (t < 0 || t > kappa - 1)
        throw std::invalid_argument("gamma_odd: need 0 <= t <= kappa-1");
    Rational pow24 = 1;
    for (int i = 0; i < kappa - t; ++i)
        pow24 *= -24;
    Rational r = factorial(kappa + t + 1) / (pow24 * factorial(kappa - t) * factorial(2 * t + 1));
    r.canonicalize();
    return r;
}

ChainSpec bosonic_chain_spec(int kappa, bool even, int cut_order)
{
    if (kappa < 0)
        throw std::invalid_argument("bosonic_chain_spec: kappa must be >= 0");
    ChainSpec spec;
    spec.cut_order = cut_order;
    spec.twofold = false;
    for (int t = 0; t <= kappa; ++t) {
        ChainLevel lv;
        if (even) {
            lv.alpha = 6 * t + 3;
            lv.chi = Rational(-3 * (t + 1) * (2 * t + 1), 4);
        } else {
            lv.alpha = 6 * t + 6;
            lv.chi = Rational(-3 * (t + 1) * (2 * t + 3), 4);
        }
        lv.chi.canonicalize();
        lv.q = -2;
        spec.levels.push_back(lv);
    }
    return spec;
}

ChainSpec nf1_chain_spec(int m, bool even_quanta, int cut_order)
{
    if (m < 0)
        throw std::invalid_argument("nf1_chain_spec: m must be >= 0");
    ChainSpec spec;
    spec.cut_order = cut_order;
    spec.twofold = true;
    for (int t = 0; t <= m; ++t) {
        ChainLevel lv;
        bool odd_t = (t % 2) != 0;
        // The even-quanta chain carries the (f+ a+ a+) brick on even levels;
        // the odd-quanta chain carries (f+ a+) there.
        bool heavy = even_quanta ? !odd_t : odd_t;
        lv.alpha = heavy ? 3 * t + 5 : 3 * t + 4;
        lv.chi = heavy ? Rational(-3 * (t + 1), 2) : Rational(-(t + 1), 2);
        lv.chi.canonicalize();
        lv.mu = Rational(-3 * (t + 1) * (t + 2), 8);
        lv.mu.canonicalize();
        lv.q = heavy ? 0 : -1;
        lv.p = -2;
        spec.levels.push_back(lv);
    }
    return spec;
}

double chain_residual(const ChainSpec& spec, const ChainSolution& sol, int root_index)
{
    if (root_index < 0 || root_index >= static_cast<int>(sol.roots.size()))
        throw std::invalid_argument("chain_residual: root index out of range");
    const double x = sol.roots[static_cast<std::size_t>(root_index)];
    const int am = sol.quantization_index;
    const int kappa = sol.quantization_order - 1;

    // Evaluate every level's coefficients on positions 0..j_max+1, where the
    // last in-support position of level t is kappa + offset(t). The value one
    // past it is gamma_t * L^{alpha_m}_{kappa+1}(x), killed by quantization.
    int j_top = kappa + sol.offset.front() + 2;
    std::vector<double> lag = laguerre::eval_rescaled_all(j_top + 1, am, x);
    auto coeff = [&](int t, int j) -> double {
        int shifted = j - sol.offset[static_cast<std::size_t>(t)];
        if (j < 0 || shifted < 0)
            return 0.0;
        return mpq_get_d(sol.gamma[static_cast<std::size_t>(t)].get_mpq_t())
               * lag[static_cast<std::size_t>(shifted)];
    };

    double worst = 0.0;
    for (int t = 0; t <= spec.m(); ++t) {
        const ChainLevel& lv = spec.levels[static_cast<std::size_t>(t)];
        int j_max = kappa + sol.offset[static_cast<std::size_t>(t)];
        for (int j = 0; j <= j_max; ++j) {
            double terms[5] = {
                coeff(t, j - 1),
                -(2 * j + lv.alpha + 1 - x) * coeff(t, j),
                double(j + 1) * double(j + lv.alpha + 1) * coeff(t, j + 1),
                0.0,
                0.0,
            };
            if (t + 1 <= spec.m())
                terms[3] = -mpq_get_d(lv.chi.get_mpq_t()) * coeff(t + 1, j + lv.q);
            if (spec.twofold && t + 2 <= spec.m())
                terms[4] = -mpq_get_d(lv.mu.get_mpq_t()) * coeff(t + 2, j + lv.p);
            double sum = 0.0, scale = std::numeric_limits<double>::min();
            for (double v : terms) {
                sum += v;
                scale = std::max(scale, std::abs(v));
            }
            worst = std::max(worst, std::abs(sum) / scale);
        }
    }
    return worst;
}

} // namespace recursion
} // namespace symqm
