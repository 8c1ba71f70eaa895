#include "symqm/laguerre.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace symqm {
namespace laguerre {

namespace {

void check_args(int n, int alpha, double x)
{
    if (n < 0)
        throw std::invalid_argument("laguerre: order n must be >= 0, got " + std::to_string(n));
    if (alpha < 0)
        throw std::invalid_argument("laguerre: index alpha must be >= 0, got " + std::to_string(alpha));
    if (!std::isfinite(x))
        throw std::invalid_argument("laguerre: argument x must be finite");
}

// Forward sweep of the rescaled recurrence in the requested precision.
template <typename Real>
std::vector<Real> sweep(int n, int alpha, Real x)
{
    std::vector<Real> vals(static_cast<std::size_t>(n) + 1);
    Real prev = Real(0);                          // L^a_{-1}
    Real cur = std::exp(-std::lgamma(Real(alpha) + 1)); // L^a_0 = 1/Gamma(a+1)
    vals[0] = cur;
    for (int m = 0; m < n; ++m) {
        Real next = ((2 * m + alpha + 1 - x) * cur - prev)
                    / (Real(m + 1) * Real(m + alpha + 1));
        prev = cur;
        cur = next;
        vals[static_cast<std::size_t>(m) + 1] = cur;
    }
    return vals;
}

} // namespace

std::vector<double> eval_rescaled_all(int n, int alpha, double x)
{
    check_args(n, alpha, x);
    std::vector<double> vals = sweep<double>(n, alpha, x);
    for (double v : vals)
        if (!std::isfinite(v))
            throw std::overflow_error("laguerre: recurrence overflow at n=" + std::to_string(n)
                                      + " alpha=" + std::to_string(alpha) + " x=" + std::to_string(x));
    return vals;
}

double eval_rescaled(int n, int alpha, double x)
{
    return eval_rescaled_all(n, alpha, x).back();
}

double eval_unrescaled(int n, int alpha, double x)
{
    double v = eval_rescaled(n, alpha, x) * std::exp(std::lgamma(double(n) + alpha + 1));
    if (!std::isfinite(v))
        throw std::overflow_error("laguerre: unrescaled value overflow");
    return v;
}

double eval_rescaled_derivative(int n, int alpha, double x)
{
    if (n == 0)
        return 0.0;
    return -eval_rescaled(n - 1, alpha + 1, x);
}

std::vector<double> roots(int n, int alpha)
{
    if (n < 1)
        throw std::invalid_argument("laguerre::roots: order must be >= 1");
    if (alpha < 0)
        throw std::invalid_argument("laguerre::roots: alpha must be >= 0");

    Eigen::MatrixXd jacobi = Eigen::MatrixXd::Zero(n, n);
    for (int m = 0; m < n; ++m) {
        jacobi(m, m) = 2 * m + alpha + 1;
        if (m > 0) {
            double b = std::sqrt(double(m) * double(m + alpha));
            jacobi(m, m - 1) = b;
            jacobi(m - 1, m) = b;
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(jacobi, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("laguerre::roots: tridiagonal eigensolver failed to converge");

    std::vector<double> xs(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        xs[static_cast<std::size_t>(i)] = solver.eigenvalues()(i);

    // Two Newton steps in long double sharpen the eigenvalues to the actual
    // polynomial roots; L' is evaluated through L^{alpha+1}_{n-1}.
    for (double& r : xs) {
        long double x = r;
        for (int it = 0; it < 2; ++it) {
            long double value = sweep<long double>(n, alpha, x).back();
            long double slope = (n == 0) ? 1.0L : -sweep<long double>(n - 1, alpha + 1, x).back();
            if (slope == 0.0L)
                break;
            x -= value / slope;
        }
        r = static_cast<double>(x);
    }

    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (!(xs[i] > 0.0))
            throw std::runtime_error("laguerre::roots: nonpositive root");
        if (i > 0 && !(xs[i] > xs[i - 1]))
            throw std::runtime_error("laguerre::roots: roots not strictly increasing");
    }
    return xs;
}

std::vector<double> quantization_energies(int d, int gamma)
{
    std::vector<double> es = roots(d, gamma);
    for (double& e : es)
        e *= 0.5;
    return es;
}

double recurrence_residual(int n, int alpha, double x)
{
    std::vector<double> vals = eval_rescaled_all(n + 1, alpha, x);
    double worst = 0.0;
    for (int m = 0; m < n; ++m) {
        double t0 = (m > 0) ? vals[static_cast<std::size_t>(m) - 1] : 0.0;
        double t1 = -(2 * m + alpha + 1 - x) * vals[static_cast<std::size_t>(m)];
        double t2 = double(m + 1) * double(m + alpha + 1) * vals[static_cast<std::size_t>(m) + 1];
        double scale = std::max({std::abs(t0), std::abs(t1), std::abs(t2),
                                 std::numeric_limits<double>::min()});
        worst = std::max(worst, std::abs(t0 + t1 + t2) / scale);
    }
    return worst;
}

} // namespace laguerre
} // namespace symqm
