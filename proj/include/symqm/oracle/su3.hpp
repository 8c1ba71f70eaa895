#ifndef SYMQM_ORACLE_SU3_HPP
#define SYMQM_ORACLE_SU3_HPP

#include <Eigen/Dense>

#include <array>
#include <complex>
#include <vector>

namespace symqm {
namespace oracle {

constexpr int kAdjointDim = 8;

// Fundamental-representation SU(3) data: generators T^A = lambda^A / 2 with
// tr(T^A T^B) = delta_AB / 2, structure constants f_ABC and symmetric symbols
// d_ABC obtained from traces of the generators.
struct Su3Data {
    std::array<Eigen::Matrix3cd, kAdjointDim> generators;
    double f[kAdjointDim][kAdjointDim][kAdjointDim] = {};
    double d[kAdjointDim][kAdjointDim][kAdjointDim] = {};

    // Nonzero (b, c, f_abc) per first index, for adjoint-action operators.
    std::vector<std::array<double, 3>> f_pairs[kAdjointDim];

    // tr(T^{A_1} ... T^{A_L}) for a tuple of generator indices.
    std::complex<double> trace(const std::vector<int>& tuple) const;
};

const Su3Data& su3_data();

} // namespace oracle
} // namespace symqm

#endif
