// Timing comparison of the serial reference kernels against their OpenMP
// counterparts: block Casimir application and Gram assembly.

#include "symqm/oracle/oracle.hpp"

#include <chrono>
#include <cstdio>
#include <random>

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0)
{
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

} // namespace

int main(int argc, char** argv)
{
    using namespace symqm::oracle;
    int ncut = argc > 1 ? std::atoi(argv[1]) : 6;
    int nf = argc > 2 ? std::atoi(argv[2]) : 2;
    int block = argc > 3 ? std::atoi(argv[3]) : 16;

    FockSpace space(ncut, nf);
    std::printf("space: ncut=%d nf=%d dim=%zu, block=%d\n", ncut, nf, space.dim(), block);

    std::mt19937 rng(7);
    std::normal_distribution<double> gauss;
    Eigen::MatrixXd x(static_cast<Eigen::Index>(space.dim()), block);
    for (Eigen::Index j = 0; j < x.cols(); ++j)
        for (Eigen::Index i = 0; i < x.rows(); ++i)
            x(i, j) = gauss(rng);

    CasimirOperator op(space);
    Eigen::MatrixXd y_serial, y_parallel;
    auto t0 = Clock::now();
    for (int rep = 0; rep < 10; ++rep)
        op.apply_block(x, y_serial, Exec::Serial);
    double t_serial = seconds_since(t0);
    t0 = Clock::now();
    for (int rep = 0; rep < 10; ++rep)
        op.apply_block(x, y_parallel, Exec::Parallel);
    double t_parallel = seconds_since(t0);
    std::printf("casimir block apply: serial %.3fs, openmp %.3fs, speedup %.2fx, max |diff| %.3g\n",
                t_serial, t_parallel, t_serial / t_parallel,
                (y_serial - y_parallel).cwiseAbs().maxCoeff());

    std::vector<Eigen::VectorXcd> cols;
    for (int j = 0; j < block; ++j)
        cols.push_back(x.col(j).cast<symqm::oracle::cplx>());
    t0 = Clock::now();
    Eigen::MatrixXcd s_serial = assemble_gram(cols, Exec::Serial);
    double g_serial = seconds_since(t0);
    t0 = Clock::now();
    Eigen::MatrixXcd s_parallel = assemble_gram(cols, Exec::Parallel);
    double g_parallel = seconds_since(t0);
    std::printf("gram assembly:       serial %.3fs, openmp %.3fs, speedup %.2fx, max |diff| %.3g\n",
                g_serial, g_parallel, g_serial / g_parallel,
                (s_serial - s_parallel).cwiseAbs().maxCoeff());
    return 0;
}
