#ifndef SYMQM_ORACLE_FOCK_HPP
#define SYMQM_ORACLE_FOCK_HPP

#include <Eigen/Dense>

#include <array>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace symqm {
namespace oracle {

using cplx = std::complex<double>;

// Execution policy of the data-parallel kernels. Serial is the reference
// implementation; Parallel runs the same loops under OpenMP.
enum class Exec { Serial, Parallel };

struct CapacityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Occupation-number Fock space over the 8 adjoint bosonic modes and the 8
// adjoint fermionic modes, restricted to total bosonic quanta <= b_max and
// fixed fermion number n_f.
//
// States are indexed bosonic-major, and bosonic configurations are ordered by
// total quanta first. A space with smaller b_max (same n_f) is therefore an
// index prefix of a larger one, and fixed-quanta blocks are contiguous.
class FockSpace {
public:
    FockSpace(int b_max, int n_f, std::size_t max_dim = 8u << 20);

    int b_max() const { return b_max_; }
    int n_f() const { return n_f_; }
    std::size_t n_bos() const { return bos_occ_.size(); }
    int n_masks() const { return static_cast<int>(masks_.size()); }
    std::size_t dim() const { return n_bos() * masks_.size(); }

    std::size_t index(std::size_t bos_rank, int mask_rank) const
    {
        return bos_rank * masks_.size() + static_cast<std::size_t>(mask_rank);
    }
    const std::array<std::uint8_t, 8>& occupation(std::size_t bos_rank) const
    {
        return bos_occ_[bos_rank];
    }
    int quanta(std::size_t bos_rank) const { return bos_quanta_[bos_rank]; }
    std::uint8_t mask(int mask_rank) const { return masks_[static_cast<std::size_t>(mask_rank)]; }
    int mask_rank(std::uint8_t mask) const { return mask_rank_[mask]; }

    // Rank of a bosonic occupation, or -1 if its total exceeds b_max.
    std::int64_t bos_rank(const std::array<std::uint8_t, 8>& occ) const;

    // First state index of the fixed-quanta block q and its size.
    std::size_t shell_begin(int q) const;
    std::size_t shell_size(int q) const;

private:
    int b_max_;
    int n_f_;
    std::vector<std::array<std::uint8_t, 8>> bos_occ_;
    std::vector<std::uint8_t> bos_quanta_;
    std::vector<std::size_t> shell_offset_; // bosonic rank of the first state with quanta q
    std::vector<std::uint8_t> masks_;
    int mask_rank_[256];
};

// C(n, k) with a precomputed table; n up to 72.
double binomial(int n, int k);
std::size_t binomial_index(int n, int k);

// One creation/annihilation operator acting on a named adjoint mode.
struct ModeOp {
    enum Kind : std::uint8_t { BosonCreate, BosonAnnihilate, FermionCreate, FermionAnnihilate };
    Kind kind;
    std::uint8_t mode;
};

// One contraction of a trace operator: coeff * op_1 op_2 ... (ops stored in
// application order, i.e. the rightmost factor of the trace first).
struct Term {
    cplx coeff;
    std::vector<ModeOp> ops;
};

// tr(O_1 O_2 ... O_L) expanded over generator indices with nonzero
// tr(T^{A_1} ... T^{A_L}); net fermion-number change is the same for every
// term.
struct TraceOperator {
    std::vector<Term> terms;
    int d_nf = 0;
    int d_bos = 0; // net change of bosonic quanta
};

TraceOperator trace_operator(const std::vector<ModeOp::Kind>& word);

// y += (operator applied to x). The input lives in `in`, the result in `out`
// (n_f must differ by d_nf). Amplitude landing above out.b_max is dropped and
// its squared norm accumulated into *leak if given, or raises CapacityError
// when leak == nullptr.
void apply(const TraceOperator& op, const FockSpace& in, const FockSpace& out,
           const Eigen::VectorXcd& x, Eigen::VectorXcd& y, double* leak = nullptr);

// Composition of trace operators applied right-to-left (multi-trace bricks).
Eigen::VectorXcd apply_product(const std::vector<TraceOperator>& product, const FockSpace& in,
                               const FockSpace& out, const Eigen::VectorXcd& x,
                               double* leak = nullptr);

} // namespace oracle
} // namespace symqm

#endif
