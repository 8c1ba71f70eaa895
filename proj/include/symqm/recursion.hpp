#ifndef SYMQM_RECURSION_HPP
#define SYMQM_RECURSION_HPP

#include <gmpxx.h>

#include <vector>

namespace symqm {
namespace recursion {

using Rational = mpq_class;

// One level of a chain of coupled cut Laguerre recursions. Level t couples to
// level t+1 with strength chi (index shift q) and, in twofold chains, to
// level t+2 with strength mu (index shift p). The top level is homogeneous.
struct ChainLevel {
    int alpha = 0;
    Rational chi = 0;
    Rational mu = 0;
    int q = 0;
    int p = 0;
};

struct ChainSpec {
    std::vector<ChainLevel> levels; // t = 0..m
    int cut_order = 0;              // kappa: the top recursion has kappa+1 coefficients
    bool twofold = false;

    int m() const { return static_cast<int>(levels.size()) - 1; }
    // Cumulative index shift k_t = (alpha_m - alpha_t)/2.
    int offset(int t) const;
    // Check the chain assumptions: every k_t a positive integer (t < m),
    // q_t = 1 - k_t + k_{t+1} and, for twofold chains, p_t = 1 - k_t + k_{t+2}.
    // Throws std::invalid_argument on violation.
    void validate() const;
};

// Solution of a chain at the roots x_i of Lag^{alpha_m}_{kappa+1}. The
// coefficient of level t at position j is
//   a^t_j(x_i) = gamma[t] * L^{alpha_m}_{j - offset[t]}(x_i),   j >= offset[t],
// with the free overall constant fixed so that the top level carries the bare
// rescaled Laguerre values (gamma[m] = 1).
struct ChainSolution {
    int quantization_order = 0; // kappa + 1
    int quantization_index = 0; // alpha_m
    std::vector<Rational> gamma;
    std::vector<int> offset;
    std::vector<double> roots; // the admissible x values, ascending
};

// The homogeneous cut recursion of order kappa with index alpha has kappa+1
// solutions a_j = a_0 Gamma(alpha+1) L^alpha_j(x_i) at the roots x_i of
// Lag^alpha_{kappa+1}.
struct HomogeneousSolution {
    int alpha = 0;
    int order = 0; // kappa + 1
    std::vector<double> roots;
};
HomogeneousSolution solve_homogeneous_cut(int kappa, int alpha);
// Coefficients a_0..a_kappa of the i-th solution, normalized to a_0 = 1.
std::vector<double> homogeneous_coefficients(const HomogeneousSolution& sol, int root_index);

// Single inhomogeneous recursion with source chi * L^beta_{j+q}. Requires
// k = (beta-alpha)/2 a positive integer and q = 1-k; the solution is
// a_j = gamma L^beta_{j-k} with gamma = 4 chi / (beta^2 - alpha^2).
struct InhomogeneousSolution {
    int k = 0;
    Rational gamma;
};
InhomogeneousSolution solve_inhomogeneous(int alpha, int beta, const Rational& chi, int q);

// Single-mixing chain: gamma_t = 4 chi_t / (alpha_m^2 - alpha_t^2) level by
// level, multiplier of level t is the product of gamma over t..m-1.
ChainSolution solve_chain(const ChainSpec& spec);

// Twofold chain: gamma_y = 4 (chi_y gamma_{y+1} + mu_y gamma_{y+2})
//                          / (alpha_m^2 - alpha_y^2),
// seeded with gamma_m = 1 and gamma_{m+1} = 0 (the mu coupling of level m-1
// reaches a level that vanishes identically in the cut system).
ChainSolution solve_twofold_chain(const ChainSpec& spec);

// Closed forms for the bosonic mixing coefficients:
//   Gamma^even_{kappa-1,t} = (-24)^{t-kappa} (kappa+t)!   / ((kappa-t)! (2t)!)
//   Gamma^odd_{kappa-1,t}  = (-24)^{t-kappa} (kappa+t+1)! / ((kappa-t)! (2t+1)!)
Rational gamma_even(int kappa, int t);
Rational gamma_odd(int kappa, int t);

// Chain specs of the model. The bosonic sector couples singly
// (alpha_t = 6t+3 or 6t+6); the n_F = 1 sector couples twofold with
// alternating per-level parameters.
ChainSpec bosonic_chain_spec(int kappa, bool even, int cut_order);
ChainSpec nf1_chain_spec(int m, bool even_quanta, int cut_order);

// Max relative residual of the full recursion set at the root with the given
// index, rows evaluated per level against the largest stencil term.
double chain_residual(const ChainSpec& spec, const ChainSolution& sol, int root_index);

} // namespace recursion
} // namespace symqm

#endif
