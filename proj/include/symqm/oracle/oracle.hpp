#ifndef SYMQM_ORACLE_ORACLE_HPP
#define SYMQM_ORACLE_ORACLE_HPP

#include "symqm/basis.hpp"
#include "symqm/oracle/fock.hpp"

#include <Eigen/Dense>

#include <vector>

namespace symqm {
namespace oracle {

struct OracleConfig {
    std::size_t max_dim = 8u << 20;   // capacity bound on space dimension
    double gram_rcond_min = 1e-10;    // S is rejected below this relative eigenvalue
    Exec exec = Exec::Parallel;
};

// Gram matrix rejected as numerically singular; carries the offending
// near-null direction in the brick basis.
struct IllConditionedGram : std::runtime_error {
    IllConditionedGram(const std::string& what, Eigen::VectorXcd v)
        : std::runtime_error(what), null_vector(std::move(v)) {}
    Eigen::VectorXcd null_vector;
};

// The trace-operator product realizing a catalog brick (cached).
const std::vector<TraceOperator>& brick_operator(const basis::Brick& brick);

// Convenience single-mode operator (coefficient 1), mostly for tests.
TraceOperator single_mode_op(ModeOp::Kind kind, int mode);

// One vector per cut-basis state |j,k,alpha>, built by applying the brick
// operators to the Fock vacuum. Raw normalization (no rescaling).
std::vector<Eigen::VectorXcd> brick_basis_vectors(int n_cut, int n_f, const FockSpace& space,
                                                  Exec exec = Exec::Parallel);

// y += H x with H = tr(a+a) + 2 - tr(a+a+)/2 - tr(aa)/2 built from mode
// operators. The output space must be padded by two quanta to hold the
// raised components exactly.
void apply_hamiltonian(const FockSpace& in, const FockSpace& out, const Eigen::VectorXcd& x,
                       Eigen::VectorXcd& y);
void apply_hamiltonian(const FockSpace& in, const FockSpace& out, const Eigen::VectorXd& x,
                       Eigen::VectorXd& y);

struct HamiltonianMatrices {
    Eigen::MatrixXcd h;           // <v_r|H|v_s> over unit-normalized brick vectors
    Eigen::MatrixXcd s;           // Gram matrix of the same vectors
    std::vector<double> leakage;  // norm of the above-cut component of H v_s per column
};

// Brick-basis Hamiltonian and Gram matrices for n_F = 0..2.
HamiltonianMatrices hamiltonian_matrix(int n_cut, int n_f, const OracleConfig& cfg = {});

// Generalized symmetric eigenproblem H v = E S v, energies ascending.
std::vector<double> oracle_spectrum(int n_cut, int n_f, const OracleConfig& cfg = {});

// Quadratic gauge Casimir G^2 built from the adjoint rotors
// G_A = -i f_ABC (a+_B a_C + f+_B f_C). The rotors are real antisymmetric and
// preserve quanta; their matrix elements are cached on construction so that
// repeated applications stream the stored hops.
class CasimirOperator {
public:
    explicit CasimirOperator(const FockSpace& space);

    // y = G^2 x = -sum_A R_A (R_A x)
    void apply(const Eigen::VectorXd& x, Eigen::VectorXd& y) const;
    // Columnwise block application; the OpenMP kernel and the serial
    // reference traverse each column identically, so results match bit for
    // bit.
    void apply_block(const Eigen::MatrixXd& x, Eigen::MatrixXd& y, Exec exec) const;

    std::size_t dim() const { return dim_; }

private:
    struct Hop {
        std::int32_t src;
        std::int32_t dst;
        double weight;
    };
    std::size_t dim_;
    std::array<std::vector<Hop>, 8> rotor_;
};

// One-shot conveniences over a freshly built operator.
void apply_casimir_sq(const FockSpace& space, const Eigen::VectorXd& x, Eigen::VectorXd& y);
void apply_casimir_sq_block(const FockSpace& space, const Eigen::MatrixXd& x, Eigen::MatrixXd& y,
                            Exec exec);

// Gram matrix of complex columns with an explicitly ordered per-entry sum;
// see apply_casimir_sq_block for the serial/parallel contract.
Eigen::MatrixXcd assemble_gram(const std::vector<Eigen::VectorXcd>& vecs, Exec exec);

struct KernelBasis {
    Eigen::MatrixXd vectors;      // orthonormal kernel columns
    int dim = 0;
    double next_ritz = 0.0;       // smallest non-kernel Ritz value seen
    double max_residual = 0.0;    // max ||G^2 v|| over kernel columns
};

// Orthonormal basis of the gauge-singlet subspace ker(G^2). Dense
// eigensolve for small spaces, Chebyshev-filtered subspace iteration above;
// the filter window relies on the spectral gap of the SU(3) Casimir (lowest
// nonzero value 3 on triality-zero states).
KernelBasis casimir_kernel(const FockSpace& space, int hint = -1, Exec exec = Exec::Parallel);

// Spectrum of H restricted to the gauge-singlet subspace (catalog-free path).
std::vector<double> casimir_spectrum(int n_cut, int n_f, const OracleConfig& cfg = {});

// Max over normalized singlet states of || f_ABC phi_A f+_B f_C  state ||,
// the fermionic Hamiltonian term the Gauss law removes.
double gauss_law_violation(int n_cut, int n_f, const OracleConfig& cfg = {});

} // namespace oracle
} // namespace symqm

#endif
