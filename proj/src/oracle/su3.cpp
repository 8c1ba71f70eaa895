#include "symqm/oracle/su3.hpp"

#include <cmath>

namespace symqm {
namespace oracle {

namespace {

using Eigen::Matrix3cd;
using cplx = std::complex<double>;

Su3Data build()
{
    Su3Data data;
    const cplx i(0.0, 1.0);
    const double s3 = 1.0 / std::sqrt(3.0);

    std::array<Matrix3cd, kAdjointDim> lambda;
    for (Matrix3cd& m : lambda)
        m.setZero();
    lambda[0](0, 1) = 1; lambda[0](1, 0) = 1;
    lambda[1](0, 1) = -i; lambda[1](1, 0) = i;
    lambda[2](0, 0) = 1; lambda[2](1, 1) = -1;
    lambda[3](0, 2) = 1; lambda[3](2, 0) = 1;
    lambda[4](0, 2) = -i; lambda[4](2, 0) = i;
    lambda[5](1, 2) = 1; lambda[5](2, 1) = 1;
    lambda[6](1, 2) = -i; lambda[6](2, 1) = i;
    lambda[7](0, 0) = s3; lambda[7](1, 1) = s3; lambda[7](2, 2) = -2.0 * s3;

    for (int a = 0; a < kAdjointDim; ++a)
        data.generators[a] = 0.5 * lambda[a];

    // f_ABC = -2i tr([T^A,T^B] T^C), d_ABC = 2 tr({T^A,T^B} T^C)
    for (int a = 0; a < kAdjointDim; ++a)
        for (int b = 0; b < kAdjointDim; ++b) {
            Matrix3cd comm = data.generators[a] * data.generators[b]
                             - data.generators[b] * data.generators[a];
            Matrix3cd anti = data.generators[a] * data.generators[b]
                             + data.generators[b] * data.generators[a];
            for (int c = 0; c < kAdjointDim; ++c) {
                data.f[a][b][c] = (-2.0 * i * (comm * data.generators[c]).trace()).real();
                data.d[a][b][c] = (2.0 * (anti * data.generators[c]).trace()).real();
            }
        }

    for (int a = 0; a < kAdjointDim; ++a)
        for (int b = 0; b < kAdjointDim; ++b)
            for (int c = 0; c < kAdjointDim; ++c)
                if (std::abs(data.f[a][b][c]) > 1e-14)
                    data.f_pairs[a].push_back({double(b), double(c), data.f[a][b][c]});

    return data;
}

} // namespace

std::complex<double> Su3Data::trace(const std::vector<int>& tuple) const
{
    Matrix3cd prod = Matrix3cd::Identity();
    for (int a : tuple)
        prod *= generators[static_cast<std::size_t>(a)];
    return prod.trace();
}

const Su3Data& su3_data()
{
    static const Su3Data data = build();
    return data;
}

} // namespace oracle
} // namespace symqm
