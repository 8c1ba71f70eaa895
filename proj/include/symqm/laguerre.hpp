#ifndef SYMQM_LAGUERRE_HPP
#define SYMQM_LAGUERRE_HPP

#include <vector>

namespace symqm {
namespace laguerre {

// Rescaled (Sonine) generalized Laguerre polynomial
//   L^alpha_n(x) = Lag^alpha_n(x) / Gamma(n+alpha+1),
// evaluated by forward application of the three-term recurrence
//   L^a_{n-1} - (2n+a+1-x) L^a_n + (n+1)(n+a+1) L^a_{n+1} = 0,
// seeded with L^a_{-1} = 0 and L^a_0 = 1/Gamma(a+1).
//
// Throws std::invalid_argument on bad (n, alpha, x) and std::overflow_error
// if the recurrence leaves the finite double range.
double eval_rescaled(int n, int alpha, double x);

// All orders 0..n in one forward sweep.
std::vector<double> eval_rescaled_all(int n, int alpha, double x);

// Unrescaled value Lag^alpha_n(x) = Gamma(n+alpha+1) * L^alpha_n(x).
double eval_unrescaled(int n, int alpha, double x);

// d/dx L^alpha_n(x) = -L^{alpha+1}_{n-1}(x).
double eval_rescaled_derivative(int n, int alpha, double x);

// The n roots of Lag^alpha_n, strictly positive and strictly increasing.
// Computed as eigenvalues of the symmetric tridiagonal Jacobi matrix of the
// generalized Laguerre weight (diagonal 2m+alpha+1, off-diagonal
// sqrt(m(m+alpha))), then polished with two Newton steps in long double.
std::vector<double> roots(int n, int alpha);

// Energies E_m = x_m / 2 for the roots x_m of Lag^gamma_d, ascending.
std::vector<double> quantization_energies(int d, int gamma);

// Max relative residual of the rescaled recurrence along the sweep at x,
// i.e. |L_{m-1} - (2m+a+1-x) L_m + (m+1)(m+a+1) L_{m+1}| over the largest
// of the three terms, maximized over 0 <= m < n.
double recurrence_residual(int n, int alpha, double x);

} // namespace laguerre
} // namespace symqm

#endif
