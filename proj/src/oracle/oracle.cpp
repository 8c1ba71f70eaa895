#include "symqm/oracle/oracle.hpp"

#include "symqm/oracle/su3.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace symqm {
namespace oracle {

namespace {

template <typename F>
void for_each_column(int n, Exec exec, F&& fn)
{
    if (exec == Exec::Parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
        for (int i = 0; i < n; ++i)
            fn(i);
    } else {
        for (int i = 0; i < n; ++i)
            fn(i);
    }
}

ModeOp::Kind to_mode_kind(basis::Op op)
{
    return op == basis::Op::BosonCreate ? ModeOp::BosonCreate : ModeOp::FermionCreate;
}

} // namespace

const std::vector<TraceOperator>& brick_operator(const basis::Brick& brick)
{
    static std::map<std::pair<int, int>, std::vector<TraceOperator>> cache;
    auto key = std::make_pair(brick.sector, brick.label);
    auto it = cache.find(key);
    if (it != cache.end())
        return it->second;
    std::vector<TraceOperator> product;
    for (const basis::Trace& t : brick.word) {
        std::vector<ModeOp::Kind> word;
        for (basis::Op op : t.ops)
            word.push_back(to_mode_kind(op));
        product.push_back(trace_operator(word));
    }
    return cache.emplace(key, std::move(product)).first->second;
}

TraceOperator single_mode_op(ModeOp::Kind kind, int mode)
{
    TraceOperator op;
    Term term;
    term.coeff = 1.0;
    term.ops.push_back({kind, static_cast<std::uint8_t>(mode)});
    op.terms.push_back(std::move(term));
    if (kind == ModeOp::FermionCreate)
        op.d_nf = 1;
    else if (kind == ModeOp::FermionAnnihilate)
        op.d_nf = -1;
    else if (kind == ModeOp::BosonCreate)
        op.d_bos = 1;
    else
        op.d_bos = -1;
    return op;
}

std::vector<Eigen::VectorXcd> brick_basis_vectors(int n_cut, int n_f, const FockSpace& space,
                                                  Exec exec)
{
    if (space.n_f() != n_f)
        throw std::invalid_argument("brick_basis_vectors: space sector mismatch");
    if (space.b_max() < n_cut)
        throw CapacityError("brick_basis_vectors: oracle capacity below the cut");
    if (n_f < 0 || n_f > 2)
        throw std::invalid_argument("brick_basis_vectors: brick path covers n_F = 0..2");

    const std::vector<basis::BasisState> states = basis::enumerate_basis(n_cut, n_f);
    const FockSpace bosonic(space.b_max(), 0);
    const TraceOperator quad = trace_operator({ModeOp::BosonCreate, ModeOp::BosonCreate});
    const TraceOperator cubic =
        trace_operator({ModeOp::BosonCreate, ModeOp::BosonCreate, ModeOp::BosonCreate});

    std::vector<Eigen::VectorXcd> vecs(states.size());
    for_each_column(static_cast<int>(states.size()), exec, [&](int i) {
        const basis::BasisState& st = states[static_cast<std::size_t>(i)];
        Eigen::VectorXcd v = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(bosonic.dim()));
        v(0) = 1.0; // Fock vacuum
        for (int c = 0; c < st.k; ++c) {
            Eigen::VectorXcd next = Eigen::VectorXcd::Zero(v.size());
            apply(cubic, bosonic, bosonic, v, next);
            v = std::move(next);
        }
        for (int c = 0; c < st.j; ++c) {
            Eigen::VectorXcd next = Eigen::VectorXcd::Zero(v.size());
            apply(quad, bosonic, bosonic, v, next);
            v = std::move(next);
        }
        if (n_f == 0) {
            vecs[static_cast<std::size_t>(i)] = std::move(v);
        } else {
            const basis::Brick& brick = basis::catalog(n_f)[static_cast<std::size_t>(st.alpha) - 1];
            vecs[static_cast<std::size_t>(i)] =
                apply_product(brick_operator(brick), bosonic, space, v);
        }
    });
    return vecs;
}

namespace {

template <typename Scalar>
void apply_hamiltonian_impl(const FockSpace& in, const FockSpace& out,
                            const Eigen::Matrix<Scalar, Eigen::Dynamic, 1>& x,
                            Eigen::Matrix<Scalar, Eigen::Dynamic, 1>& y)
{
    if (in.n_f() != out.n_f())
        throw std::invalid_argument("apply_hamiltonian: sectors differ");
    if (out.b_max() < in.b_max() + 2)
        throw CapacityError("apply_hamiltonian: output space must be padded by two quanta");
    const int nm = in.n_masks();
    for (std::size_t src = 0; src < in.dim(); ++src) {
        const Scalar amp = x(static_cast<Eigen::Index>(src));
        if (amp == Scalar(0))
            continue;
        const std::size_t bos = src / static_cast<std::size_t>(nm);
        const int mrank = static_cast<int>(src % static_cast<std::size_t>(nm));
        const auto& occ = in.occupation(bos);
        const int q = in.quanta(bos);

        // tr(a+a) + (N^2-1)/4 = (total quanta)/2 + 2
        std::int64_t self = out.bos_rank(occ);
        y(static_cast<Eigen::Index>(out.index(static_cast<std::size_t>(self), mrank)))
            += (0.5 * q + 2.0) * amp;

        for (int a = 0; a < kAdjointDim; ++a) {
            // -tr(a+a+)/2 = -1/4 sum_A a+_A a+_A
            std::array<std::uint8_t, 8> up = occ;
            up[static_cast<std::size_t>(a)] += 2;
            double w = std::sqrt(double(occ[static_cast<std::size_t>(a)]) + 1.0)
                       * std::sqrt(double(occ[static_cast<std::size_t>(a)]) + 2.0);
            std::int64_t r = out.bos_rank(up);
            y(static_cast<Eigen::Index>(out.index(static_cast<std::size_t>(r), mrank)))
                += Scalar(-0.25 * w) * amp;

            // -tr(aa)/2 = -1/4 sum_A a_A a_A
            if (occ[static_cast<std::size_t>(a)] >= 2) {
                std::array<std::uint8_t, 8> down = occ;
                down[static_cast<std::size_t>(a)] -= 2;
                double wd = std::sqrt(double(occ[static_cast<std::size_t>(a)]))
                            * std::sqrt(double(occ[static_cast<std::size_t>(a)]) - 1.0);
                std::int64_t rd = out.bos_rank(down);
                y(static_cast<Eigen::Index>(out.index(static_cast<std::size_t>(rd), mrank)))
                    += Scalar(-0.25 * wd) * amp;
            }
        }
    }
}

} // namespace

void apply_hamiltonian(const FockSpace& in, const FockSpace& out, const Eigen::VectorXcd& x,
                       Eigen::VectorXcd& y)
{
    apply_hamiltonian_impl<cplx>(in, out, x, y);
}

void apply_hamiltonian(const FockSpace& in, const FockSpace& out, const Eigen::VectorXd& x,
                       Eigen::VectorXd& y)
{
    apply_hamiltonian_impl<double>(in, out, x, y);
}

Eigen::MatrixXcd assemble_gram(const std::vector<Eigen::VectorXcd>& vecs, Exec exec)
{
    const int n = static_cast<int>(vecs.size());
    Eigen::MatrixXcd s(n, n);
    for_each_column(n, exec, [&](int c) {
        for (int r = 0; r <= c; ++r) {
            cplx acc = 0.0;
            const Eigen::VectorXcd& vr = vecs[static_cast<std::size_t>(r)];
            const Eigen::VectorXcd& vc = vecs[static_cast<std::size_t>(c)];
            for (Eigen::Index i = 0; i < vr.size(); ++i)
                acc += std::conj(vr(i)) * vc(i);
            s(r, c) = acc;
            s(c, r) = std::conj(acc);
        }
    });
    return s;
}

HamiltonianMatrices hamiltonian_matrix(int n_cut, int n_f, const OracleConfig& cfg)
{
    FockSpace space(n_cut, n_f, cfg.max_dim);
    FockSpace padded(n_cut + 2, n_f, cfg.max_dim);
    std::vector<Eigen::VectorXcd> vecs = brick_basis_vectors(n_cut, n_f, space, cfg.exec);
    const int n = static_cast<int>(vecs.size());
    for (Eigen::VectorXcd& v : vecs)
        v /= v.norm();

    HamiltonianMatrices out;
    out.s = assemble_gram(vecs, cfg.exec);
    out.leakage.assign(static_cast<std::size_t>(n), 0.0);

    std::vector<Eigen::VectorXcd> hv(static_cast<std::size_t>(n));
    for_each_column(n, cfg.exec, [&](int c) {
        Eigen::VectorXcd y = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(padded.dim()));
        apply_hamiltonian(space, padded, vecs[static_cast<std::size_t>(c)], y);
        out.leakage[static_cast<std::size_t>(c)] =
            y.tail(static_cast<Eigen::Index>(padded.dim() - space.dim())).norm();
        hv[static_cast<std::size_t>(c)] = y.head(static_cast<Eigen::Index>(space.dim()));
    });

    out.h.resize(n, n);
    for_each_column(n, cfg.exec, [&](int c) {
        for (int r = 0; r < n; ++r) {
            cplx acc = 0.0;
            const Eigen::VectorXcd& vr = vecs[static_cast<std::size_t>(r)];
            const Eigen::VectorXcd& hc = hv[static_cast<std::size_t>(c)];
            for (Eigen::Index i = 0; i < vr.size(); ++i)
                acc += std::conj(vr(i)) * hc(i);
            out.h(r, c) = acc;
        }
    });
    return out;
}

std::vector<double> oracle_spectrum(int n_cut, int n_f, const OracleConfig& cfg)
{
    HamiltonianMatrices mats = hamiltonian_matrix(n_cut, n_f, cfg);
    const int n = static_cast<int>(mats.s.rows());
    if (n == 0)
        return {};

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> gram(mats.s);
    if (gram.info() != Eigen::Success)
        throw std::runtime_error("oracle_spectrum: Gram eigendecomposition failed");
    double lo = gram.eigenvalues()(0);
    double hi = gram.eigenvalues()(n - 1);
    if (!(lo > cfg.gram_rcond_min * hi))
        throw IllConditionedGram("oracle_spectrum: Gram matrix nearly singular (min/max = "
                                     + std::to_string(lo / hi) + ")",
                                 gram.eigenvectors().col(0));

    // Whiten with S^{-1/2} and solve the ordinary Hermitian problem.
    Eigen::MatrixXcd w = gram.eigenvectors()
                         * gram.eigenvalues().cwiseSqrt().cwiseInverse().asDiagonal();
    Eigen::MatrixXcd a = w.adjoint() * mats.h * w;
    a = cplx(0.5, 0.0) * (a + a.adjoint()).eval();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(a, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("oracle_spectrum: eigensolver failed");
    std::vector<double> energies(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        energies[static_cast<std::size_t>(i)] = solver.eigenvalues()(i);
    return energies;
}

CasimirOperator::CasimirOperator(const FockSpace& space)
    : dim_(space.dim())
{
    const Su3Data& su3 = su3_data();
    const int nm = space.n_masks();
    for (int a = 0; a < kAdjointDim; ++a) {
        std::vector<Hop>& hops = rotor_[static_cast<std::size_t>(a)];
        for (std::size_t s = 0; s < space.dim(); ++s) {
            const std::size_t bos = s / static_cast<std::size_t>(nm);
            const int mrank = static_cast<int>(s % static_cast<std::size_t>(nm));
            const auto& occ = space.occupation(bos);
            const std::uint8_t mask = space.mask(mrank);
            for (const auto& pair : su3.f_pairs[a]) {
                const int b = static_cast<int>(pair[0]);
                const int c = static_cast<int>(pair[1]);
                const double f = pair[2];
                // bosonic hop a+_b a_c (b != c for nonzero f)
                if (occ[static_cast<std::size_t>(c)] > 0) {
                    std::array<std::uint8_t, 8> o2 = occ;
                    --o2[static_cast<std::size_t>(c)];
                    double w = std::sqrt(double(occ[static_cast<std::size_t>(c)]))
                               * std::sqrt(double(o2[static_cast<std::size_t>(b)]) + 1.0);
                    ++o2[static_cast<std::size_t>(b)];
                    std::int64_t r = space.bos_rank(o2);
                    hops.push_back({static_cast<std::int32_t>(s),
                                    static_cast<std::int32_t>(
                                        space.index(static_cast<std::size_t>(r), mrank)),
                                    f * w});
                }
                // fermionic hop f+_b f_c
                const std::uint8_t cbit = static_cast<std::uint8_t>(1u << c);
                const std::uint8_t bbit = static_cast<std::uint8_t>(1u << b);
                if ((mask & cbit) && !(mask & bbit)) {
                    std::uint8_t m2 = static_cast<std::uint8_t>(mask & ~cbit);
                    double sgn = 1.0;
                    if (std::popcount(static_cast<unsigned>(mask & (cbit - 1))) & 1)
                        sgn = -sgn;
                    if (std::popcount(static_cast<unsigned>(m2 & (bbit - 1))) & 1)
                        sgn = -sgn;
                    m2 = static_cast<std::uint8_t>(m2 | bbit);
                    hops.push_back({static_cast<std::int32_t>(s),
                                    static_cast<std::int32_t>(space.index(bos, space.mask_rank(m2))),
                                    f * sgn});
                }
            }
        }
    }
}

void CasimirOperator::apply(const Eigen::VectorXd& x, Eigen::VectorXd& y) const
{
    Eigen::VectorXd t(x.size());
    y.setZero();
    for (const std::vector<Hop>& hops : rotor_) {
        t.setZero();
        for (const Hop& h : hops)
            t(h.dst) += h.weight * x(h.src);
        for (const Hop& h : hops)
            y(h.dst) -= h.weight * t(h.src);
    }
}

void CasimirOperator::apply_block(const Eigen::MatrixXd& x, Eigen::MatrixXd& y, Exec exec) const
{
    y.resize(x.rows(), x.cols());
    for_each_column(static_cast<int>(x.cols()), exec, [&](int c) {
        Eigen::VectorXd in = x.col(c);
        Eigen::VectorXd out(in.size());
        apply(in, out);
        y.col(c) = out;
    });
}

void apply_casimir_sq(const FockSpace& space, const Eigen::VectorXd& x, Eigen::VectorXd& y)
{
    CasimirOperator(space).apply(x, y);
}

void apply_casimir_sq_block(const FockSpace& space, const Eigen::MatrixXd& x, Eigen::MatrixXd& y,
                            Exec exec)
{
    CasimirOperator(space).apply_block(x, y, exec);
}

namespace {

// Scaled Chebyshev filter amplifying the kernel of the positive semidefinite
// operator relative to the window [a, b] covering its nonzero spectrum.
Eigen::MatrixXd chebyshev_filter(const CasimirOperator& op, const Eigen::MatrixXd& x, int degree,
                                 double a, double b, Exec exec)
{
    const double e = 0.5 * (b - a);
    const double c = 0.5 * (b + a);
    double sigma = e / (0.0 - c);
    const double sigma1 = sigma;

    Eigen::MatrixXd prev = x;
    Eigen::MatrixXd t;
    op.apply_block(x, t, exec);
    Eigen::MatrixXd cur = (sigma1 / e) * (t - c * x);
    for (int k = 2; k <= degree; ++k) {
        double sigma_new = 1.0 / (2.0 / sigma1 - sigma);
        op.apply_block(cur, t, exec);
        Eigen::MatrixXd next =
            (2.0 * sigma_new / e) * (t - c * cur) - (sigma * sigma_new) * prev;
        prev = std::move(cur);
        cur = std::move(next);
        sigma = sigma_new;
    }
    return cur;
}

double estimate_casimir_top(const CasimirOperator& op)
{
    std::mt19937 rng(9001);
    std::normal_distribution<double> gauss;
    Eigen::VectorXd v(static_cast<Eigen::Index>(op.dim()));
    for (Eigen::Index i = 0; i < v.size(); ++i)
        v(i) = gauss(rng);
    v.normalize();
    double lam = 1.0;
    Eigen::VectorXd w(v.size());
    for (int it = 0; it < 40; ++it) {
        op.apply(v, w);
        lam = v.dot(w);
        double n = w.norm();
        if (n < 1e-30)
            break; // x already in the kernel-dominated subspace
        v = w / n;
    }
    return std::max(lam, 1.0);
}

} // namespace

KernelBasis casimir_kernel(const FockSpace& space, int hint, Exec exec)
{
    const std::size_t dim = space.dim();
    KernelBasis out;
    if (dim == 0)
        return out;

    const double kernel_tol = 1e-6;
    const CasimirOperator op(space);

    if (dim <= 1200) {
        Eigen::MatrixXd g2(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
        Eigen::MatrixXd id = Eigen::MatrixXd::Identity(static_cast<Eigen::Index>(dim),
                                                       static_cast<Eigen::Index>(dim));
        op.apply_block(id, g2, exec);
        g2 = 0.5 * (g2 + g2.transpose()).eval();
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(g2);
        if (solver.info() != Eigen::Success)
            throw std::runtime_error("casimir_kernel: dense eigensolver failed");
        int k = 0;
        while (k < static_cast<int>(dim) && solver.eigenvalues()(k) < kernel_tol)
            ++k;
        out.dim = k;
        out.vectors = solver.eigenvectors().leftCols(k);
        out.next_ritz = k < static_cast<int>(dim) ? solver.eigenvalues()(k) : -1.0;
        for (int i = 0; i < k; ++i) {
            Eigen::VectorXd r(static_cast<Eigen::Index>(dim));
            Eigen::VectorXd v = out.vectors.col(i);
            op.apply(v, r);
            out.max_residual = std::max(out.max_residual, r.norm());
        }
        return out;
    }

    // Chebyshev-filtered subspace iteration. The SU(3) Casimir on
    // triality-zero states has no eigenvalue in (0, 3); filter window
    // [1.5, top] keeps a comfortable margin on both sides.
    const double top = 1.2 * estimate_casimir_top(op) + 1.0;
    const double window_lo = 1.5;
    const int degree = 30;

    int block = std::max(hint > 0 ? hint + 8 : 16, 12);
    block = static_cast<int>(std::min<std::size_t>(static_cast<std::size_t>(block), dim));

    std::mt19937 rng(12345);
    std::normal_distribution<double> gauss;
    for (int attempt = 0; attempt < 6; ++attempt) {
        Eigen::MatrixXd x(static_cast<Eigen::Index>(dim), block);
        for (Eigen::Index j = 0; j < x.cols(); ++j)
            for (Eigen::Index i = 0; i < x.rows(); ++i)
                x(i, j) = gauss(rng);

        int stable_count = -1;
        for (int iter = 0; iter < 25; ++iter) {
            Eigen::MatrixXd y = chebyshev_filter(op, x, degree, window_lo, top, exec);
            Eigen::HouseholderQR<Eigen::MatrixXd> qr(y);
            Eigen::MatrixXd q = qr.householderQ() * Eigen::MatrixXd::Identity(
                                    static_cast<Eigen::Index>(dim), block);
            Eigen::MatrixXd g2q;
            op.apply_block(q, g2q, exec);
            Eigen::MatrixXd small = q.transpose() * g2q;
            small = 0.5 * (small + small.transpose()).eval();
            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> rr(small);
            x = q * rr.eigenvectors();

            int k = 0;
            while (k < block && rr.eigenvalues()(k) < kernel_tol)
                ++k;
            if (k == block)
                break; // block saturated with kernel candidates: enlarge
            // converged when the kernel count repeats and residuals are tight
            if (k == stable_count) {
                Eigen::MatrixXd kvecs = x.leftCols(k);
                Eigen::MatrixXd res;
                op.apply_block(kvecs, res, exec);
                double worst = k == 0 ? 0.0 : res.colwise().norm().maxCoeff();
                if (worst < 1e-10 && rr.eigenvalues()(k) > 1.0) {
                    out.vectors = std::move(kvecs);
                    out.dim = k;
                    out.next_ritz = rr.eigenvalues()(k);
                    out.max_residual = k == 0 ? 0.0 : worst;
                    return out;
                }
            }
            stable_count = k;
        }
        block = static_cast<int>(std::min<std::size_t>(static_cast<std::size_t>(block) * 2, dim));
    }
    throw std::runtime_error("casimir_kernel: subspace iteration failed to settle");
}

std::vector<double> casimir_spectrum(int n_cut, int n_f, const OracleConfig& cfg)
{
    FockSpace space(n_cut, n_f, cfg.max_dim);
    FockSpace padded(n_cut + 2, n_f, cfg.max_dim);
    int eff = n_f <= 4 ? n_f : 8 - n_f;
    int hint = static_cast<int>(basis::enumerate_basis(n_cut, eff).size());
    KernelBasis kernel = casimir_kernel(space, hint, cfg.exec);
    if (kernel.dim == 0)
        return {};

    Eigen::MatrixXd hk(kernel.dim, kernel.dim);
    std::vector<Eigen::VectorXd> hcols(static_cast<std::size_t>(kernel.dim));
    for_each_column(kernel.dim, cfg.exec, [&](int c) {
        Eigen::VectorXd y = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(padded.dim()));
        Eigen::VectorXd v = kernel.vectors.col(c);
        apply_hamiltonian(space, padded, v, y);
        hcols[static_cast<std::size_t>(c)] = y.head(static_cast<Eigen::Index>(space.dim()));
    });
    for (int c = 0; c < kernel.dim; ++c)
        for (int r = 0; r < kernel.dim; ++r)
            hk(r, c) = kernel.vectors.col(r).dot(hcols[static_cast<std::size_t>(c)]);
    hk = 0.5 * (hk + hk.transpose()).eval();

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(hk, Eigen::EigenvaluesOnly);
    std::vector<double> energies(static_cast<std::size_t>(kernel.dim));
    for (int i = 0; i < kernel.dim; ++i)
        energies[static_cast<std::size_t>(i)] = solver.eigenvalues()(i);
    return energies;
}

double gauss_law_violation(int n_cut, int n_f, const OracleConfig& cfg)
{
    const Su3Data& su3 = su3_data();
    FockSpace space(n_cut, n_f, cfg.max_dim);
    FockSpace padded(n_cut + 1, n_f, cfg.max_dim);
    int eff = n_f <= 4 ? n_f : 8 - n_f;
    int hint = static_cast<int>(basis::enumerate_basis(n_cut, eff).size());
    KernelBasis kernel = casimir_kernel(space, hint, cfg.exec);

    // W = 2^{-1/2} f_ABC (a_A + a+_A) f+_B f_C; the Hamiltonian's fermionic
    // term is -i g W, so ||W state|| measures the Gauss-law violation.
    const int nm = space.n_masks();
    double worst = 0.0;
    for (int col = 0; col < kernel.dim; ++col) {
        Eigen::VectorXd y = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(padded.dim()));
        for (std::size_t s = 0; s < space.dim(); ++s) {
            const double amp = kernel.vectors(static_cast<Eigen::Index>(s), col);
            if (amp == 0.0)
                continue;
            const std::size_t bos = s / static_cast<std::size_t>(nm);
            const int mrank = static_cast<int>(s % static_cast<std::size_t>(nm));
            const auto& occ = space.occupation(bos);
            const std::uint8_t mask = space.mask(mrank);
            for (int a = 0; a < kAdjointDim; ++a) {
                for (const auto& pair : su3.f_pairs[a]) {
                    const int b = static_cast<int>(pair[0]);
                    const int c = static_cast<int>(pair[1]);
                    const double f = pair[2];
                    const std::uint8_t cbit = static_cast<std::uint8_t>(1u << c);
                    const std::uint8_t bbit = static_cast<std::uint8_t>(1u << b);
                    if (!(mask & cbit))
                        continue;
                    std::uint8_t m2 = static_cast<std::uint8_t>(mask & ~cbit);
                    double sgn = 1.0;
                    if (std::popcount(static_cast<unsigned>(mask & (cbit - 1))) & 1)
                        sgn = -sgn;
                    if (m2 & bbit)
                        continue;
                    if (std::popcount(static_cast<unsigned>(m2 & (bbit - 1))) & 1)
                        sgn = -sgn;
                    m2 = static_cast<std::uint8_t>(m2 | bbit);
                    const int mr2 = space.mask_rank(m2);
                    const double base = f * sgn * amp / std::sqrt(2.0);

                    // a_A branch
                    if (occ[static_cast<std::size_t>(a)] > 0) {
                        std::array<std::uint8_t, 8> o2 = occ;
                        --o2[static_cast<std::size_t>(a)];
                        double w = std::sqrt(double(occ[static_cast<std::size_t>(a)]));
                        std::int64_t r = padded.bos_rank(o2);
                        y(static_cast<Eigen::Index>(
                            padded.index(static_cast<std::size_t>(r), mr2))) += base * w;
                    }
                    // a+_A branch
                    std::array<std::uint8_t, 8> o3 = occ;
                    ++o3[static_cast<std::size_t>(a)];
                    double wc = std::sqrt(double(occ[static_cast<std::size_t>(a)]) + 1.0);
                    std::int64_t rc = padded.bos_rank(o3);
                    y(static_cast<Eigen::Index>(
                        padded.index(static_cast<std::size_t>(rc), mr2))) += base * wc;
                }
            }
        }
        worst = std::max(worst, y.norm());
    }
    return worst;
}

} // namespace oracle
} // namespace symqm
