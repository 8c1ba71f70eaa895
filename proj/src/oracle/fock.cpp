#include "symqm/oracle/fock.hpp"

#include "symqm/oracle/su3.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <numeric>

namespace symqm {
namespace oracle {

namespace {

constexpr int kBinomMax = 72;

const double* binom_table()
{
    static const std::vector<double> table = [] {
        std::vector<double> t(static_cast<std::size_t>(kBinomMax + 1) * (kBinomMax + 1), 0.0);
        for (int n = 0; n <= kBinomMax; ++n) {
            t[binomial_index(n, 0)] = 1.0;
            for (int k = 1; k <= n; ++k)
                t[binomial_index(n, k)] = t[binomial_index(n - 1, k - 1)]
                                          + (k <= n - 1 ? t[binomial_index(n - 1, k)] : 0.0);
        }
        return t;
    }();
    return table.data();
}

// Number of weak compositions of s into m parts: C(s+m-1, m-1).
inline double comp_count(int s, int m)
{
    if (s < 0)
        return 0.0;
    return binom_table()[binomial_index(s + m - 1, m - 1)];
}

} // namespace

std::size_t binomial_index(int n, int k)
{
    return static_cast<std::size_t>(n) * (kBinomMax + 1) + static_cast<std::size_t>(k);
}

double binomial(int n, int k)
{
    if (k < 0 || k > n || n < 0 || n > kBinomMax)
        return 0.0;
    return binom_table()[binomial_index(n, k)];
}

FockSpace::FockSpace(int b_max, int n_f, std::size_t max_dim)
    : b_max_(b_max), n_f_(n_f)
{
    if (b_max < 0 || b_max > 56)
        throw std::invalid_argument("FockSpace: b_max out of range");
    if (n_f < 0 || n_f > 8)
        throw std::invalid_argument("FockSpace: n_f must be in 0..8");

    double n_bos_d = binomial(b_max + 8, 8);
    double n_mask_d = binomial(8, n_f);
    if (n_bos_d * n_mask_d > static_cast<double>(max_dim))
        throw CapacityError("FockSpace: dimension " + std::to_string(n_bos_d * n_mask_d)
                            + " exceeds the capacity bound " + std::to_string(max_dim));

    for (int m = 0; m < 256; ++m)
        mask_rank_[m] = -1;
    for (int m = 0; m < 256; ++m)
        if (std::popcount(static_cast<unsigned>(m)) == n_f) {
            mask_rank_[m] = static_cast<int>(masks_.size());
            masks_.push_back(static_cast<std::uint8_t>(m));
        }

    bos_occ_.reserve(static_cast<std::size_t>(n_bos_d));
    bos_quanta_.reserve(static_cast<std::size_t>(n_bos_d));
    shell_offset_.resize(static_cast<std::size_t>(b_max) + 2, 0);
    std::array<std::uint8_t, 8> occ{};
    for (int q = 0; q <= b_max; ++q) {
        shell_offset_[static_cast<std::size_t>(q)] = bos_occ_.size();
        // enumerate compositions of q in lexicographic order
        std::function<void(int, int)> rec = [&](int mode, int rest) {
            if (mode == 7) {
                occ[7] = static_cast<std::uint8_t>(rest);
                bos_occ_.push_back(occ);
                bos_quanta_.push_back(static_cast<std::uint8_t>(q));
                return;
            }
            for (int v = 0; v <= rest; ++v) {
                occ[static_cast<std::size_t>(mode)] = static_cast<std::uint8_t>(v);
                rec(mode + 1, rest - v);
            }
        };
        rec(0, q);
    }
    shell_offset_[static_cast<std::size_t>(b_max) + 1] = bos_occ_.size();
}

std::int64_t FockSpace::bos_rank(const std::array<std::uint8_t, 8>& occ) const
{
    int q = 0;
    for (int i = 0; i < 8; ++i)
        q += occ[static_cast<std::size_t>(i)];
    if (q > b_max_)
        return -1;
    // Lexicographic rank within the fixed-quanta shell. The count of tuples
    // below occ at position i is sum_{v<n_i} comp_count(rest-v, m), which the
    // hockey-stick identity collapses to C(rest+m, m) - C(rest-n_i+m, m).
    double rank = 0.0;
    int rest = q;
    for (int i = 0; i < 7; ++i) {
        int n = occ[static_cast<std::size_t>(i)];
        int m = 7 - i; // parts after this position
        rank += binomial(rest + m, m) - binomial(rest - n + m, m);
        rest -= n;
    }
    return static_cast<std::int64_t>(shell_offset_[static_cast<std::size_t>(q)])
           + static_cast<std::int64_t>(rank);
}

std::size_t FockSpace::shell_begin(int q) const
{
    return shell_offset_[static_cast<std::size_t>(q)] * masks_.size();
}

std::size_t FockSpace::shell_size(int q) const
{
    return (shell_offset_[static_cast<std::size_t>(q) + 1]
            - shell_offset_[static_cast<std::size_t>(q)])
           * masks_.size();
}

TraceOperator trace_operator(const std::vector<ModeOp::Kind>& word)
{
    const Su3Data& su3 = su3_data();
    const int length = static_cast<int>(word.size());
    if (length < 1 || length > 6)
        throw std::invalid_argument("trace_operator: word length must be 1..6");

    TraceOperator op;
    for (ModeOp::Kind k : word) {
        if (k == ModeOp::FermionCreate)
            ++op.d_nf;
        else if (k == ModeOp::FermionAnnihilate)
            --op.d_nf;
        else if (k == ModeOp::BosonCreate)
            ++op.d_bos;
        else
            --op.d_bos;
    }

    // Depth-first expansion of tr(T^{A_1}...T^{A_L}) with partial products.
    std::vector<int> tuple(static_cast<std::size_t>(length));
    std::vector<Eigen::Matrix3cd> partial(static_cast<std::size_t>(length) + 1);
    partial[0].setIdentity();
    std::function<void(int)> rec = [&](int pos) {
        if (pos == length) {
            cplx c = partial[static_cast<std::size_t>(length)].trace();
            if (std::abs(c) < 1e-14)
                return;
            Term term;
            term.coeff = c;
            term.ops.reserve(static_cast<std::size_t>(length));
            for (int i = length - 1; i >= 0; --i) {
                ModeOp mo;
                mo.kind = static_cast<ModeOp::Kind>(word[static_cast<std::size_t>(i)]);
                mo.mode = static_cast<std::uint8_t>(tuple[static_cast<std::size_t>(i)]);
                term.ops.push_back(mo);
            }
            op.terms.push_back(std::move(term));
            return;
        }
        for (int a = 0; a < kAdjointDim; ++a) {
            tuple[static_cast<std::size_t>(pos)] = a;
            partial[static_cast<std::size_t>(pos) + 1] =
                partial[static_cast<std::size_t>(pos)] * su3.generators[static_cast<std::size_t>(a)];
            rec(pos + 1);
        }
    };
    rec(0);
    return op;
}

namespace {

// Walk one term through a single basis state. Returns false when the
// amplitude dies (annihilating an empty mode, Pauli exclusion).
inline bool walk_term(const Term& term, std::array<std::uint8_t, 8>& occ, std::uint8_t& mask,
                      double& amp)
{
    for (const ModeOp& mo : term.ops) {
        const int m = mo.mode;
        const std::uint8_t bit = static_cast<std::uint8_t>(1u << m);
        switch (mo.kind) {
        case ModeOp::BosonCreate:
            amp *= std::sqrt(double(occ[static_cast<std::size_t>(m)]) + 1.0);
            ++occ[static_cast<std::size_t>(m)];
            break;
        case ModeOp::BosonAnnihilate:
            if (occ[static_cast<std::size_t>(m)] == 0)
                return false;
            amp *= std::sqrt(double(occ[static_cast<std::size_t>(m)]));
            --occ[static_cast<std::size_t>(m)];
            break;
        case ModeOp::FermionCreate:
            if (mask & bit)
                return false;
            if (std::popcount(static_cast<unsigned>(mask & (bit - 1))) & 1)
                amp = -amp;
            mask |= bit;
            break;
        case ModeOp::FermionAnnihilate:
            if (!(mask & bit))
                return false;
            if (std::popcount(static_cast<unsigned>(mask & (bit - 1))) & 1)
                amp = -amp;
            mask = static_cast<std::uint8_t>(mask & ~bit);
            break;
        }
    }
    return true;
}

} // namespace

void apply(const TraceOperator& op, const FockSpace& in, const FockSpace& out,
           const Eigen::VectorXcd& x, Eigen::VectorXcd& y, double* leak)
{
    if (in.n_f() + op.d_nf != out.n_f())
        throw std::invalid_argument("oracle::apply: fermion numbers of the spaces do not match the operator");
    if (x.size() != static_cast<Eigen::Index>(in.dim()) || y.size() != static_cast<Eigen::Index>(out.dim()))
        throw std::invalid_argument("oracle::apply: vector sizes do not match the spaces");

    const int n_masks_in = in.n_masks();
    for (std::size_t src = 0; src < in.dim(); ++src) {
        const cplx amp_in = x(static_cast<Eigen::Index>(src));
        if (amp_in == cplx(0.0, 0.0))
            continue;
        const std::size_t bos = src / static_cast<std::size_t>(n_masks_in);
        const int mrank = static_cast<int>(src % static_cast<std::size_t>(n_masks_in));
        for (const Term& term : op.terms) {
            std::array<std::uint8_t, 8> occ = in.occupation(bos);
            std::uint8_t mask = in.mask(mrank);
            double amp = 1.0;
            if (!walk_term(term, occ, mask, amp))
                continue;
            std::int64_t target_bos = out.bos_rank(occ);
            if (target_bos < 0) {
                double w = std::norm(amp_in * term.coeff * amp);
                if (leak)
                    *leak += w;
                else
                    throw CapacityError("oracle::apply: amplitude left the target space");
                continue;
            }
            y(static_cast<Eigen::Index>(
                  out.index(static_cast<std::size_t>(target_bos), out.mask_rank(mask))))
                += amp_in * term.coeff * amp;
        }
    }
}

Eigen::VectorXcd apply_product(const std::vector<TraceOperator>& product, const FockSpace& in,
                               const FockSpace& out, const Eigen::VectorXcd& x, double* leak)
{
    // Rightmost trace factor acts first; intermediate vectors live in spaces
    // interpolating between in and out.
    Eigen::VectorXcd cur = x;
    int nf = in.n_f();
    const FockSpace* cur_space = &in;
    std::vector<FockSpace> scratch;
    scratch.reserve(product.size());
    for (std::size_t i = product.size(); i-- > 0;) {
        const TraceOperator& op = product[i];
        int nf_next = nf + op.d_nf;
        const FockSpace* next_space = nullptr;
        if (i == 0) {
            if (nf_next != out.n_f())
                throw std::invalid_argument("apply_product: operator does not reach the target sector");
            next_space = &out;
        } else {
            scratch.emplace_back(out.b_max(), nf_next);
            next_space = &scratch.back();
        }
        Eigen::VectorXcd next = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(next_space->dim()));
        apply(op, *cur_space, *next_space, cur, next, leak);
        cur = std::move(next);
        cur_space = next_space;
        nf = nf_next;
    }
    return cur;
}

} // namespace oracle
} // namespace symqm
