#ifndef SYMQM_EIGENVECTORS_HPP
#define SYMQM_EIGENVECTORS_HPP

#include "symqm/basis.hpp"
#include "symqm/oracle/fock.hpp"

#include <limits>
#include <string>
#include <vector>

namespace symqm {
namespace eigenvectors {

// A solution family of the cut eigenproblem: bosonic f_kappa/g_kappa or one
// of the four n_F = 1 types.
struct FamilyId {
    int n_f = 0;
    basis::Family type = basis::Family::f;
    int kappa = 0;
};

std::string to_string(const FamilyId& family);
// Parses "f2"/"g0" (bosonic) or "f1"/"g2_1" (n_F = 1, kappa suffix optional).
FamilyId parse_family(const std::string& name, int n_f);
// Quantization index gamma of the family's condition Lag^gamma_d(2E) = 0.
int quantization_index(const FamilyId& family);
int dimension(const FamilyId& family, int n_cut);
// Exponent of (2E) in the eigenstate normalization prefactor.
double prefactor_exponent(const FamilyId& family);
// All families with at least one state at the cut, in (type, kappa) order.
std::vector<FamilyId> list_families(int n_cut, int n_f);

struct EigenvectorSpec {
    FamilyId family;
    int m = 1; // 1-based root index
    int n_cut = 0;
};

// Eigenvector in the Fock expansion: entries map (brick alpha, j, k) to the
// raw coefficient; the normalization prefactor (2E)^p e^{-E} is kept apart so
// finite-cut comparisons with recursion solutions stay scale-independent.
struct CoefficientTable {
    FamilyId family;
    int m = 0;
    double energy = 0.0;
    double prefactor = 1.0;
    struct Entry {
        int alpha = 0;
        int j = 0;
        int k = 0;
        double value = 0.0;
    };
    std::vector<Entry> entries; // sorted by (alpha, k, j)
};

CoefficientTable bosonic_eigenvector(const EigenvectorSpec& spec);
CoefficientTable nf1_eigenvector(const EigenvectorSpec& spec);

// Infinite-cut solution truncated once the prefactored term magnitude stays
// below eps for five consecutive orders.
CoefficientTable continuum_eigenvector(double energy, const FamilyId& family, double eps,
                                       int n_max = 4000);

// Closed-form H action on a bosonic coefficient table, split into the part
// inside the cut and the leakage pushed above it.
struct HActionResult {
    std::vector<CoefficientTable::Entry> in_cut;
    std::vector<CoefficientTable::Entry> leakage;
};
HActionResult h_action(const std::vector<CoefficientTable::Entry>& table,
                       int n_cut = std::numeric_limits<int>::max());

// max |(H v - E v)_{j,k}| / max |v| over the cut for a bosonic table.
double h_action_residual(const CoefficientTable& table, int n_cut);
// Max relative row residual of the coupled n_F = 1 recursion set over the cut.
double nf1_recursion_residual(const CoefficientTable& table, int n_cut);
// The out-of-cut coefficient produced at the basis boundary, relative to the
// largest in-cut one; the quantization condition makes it vanish.
double boundary_cancellation(const CoefficientTable& table, int n_cut);

// Analytic norm N^alpha(n) of the orthogonalized state |n,2alpha>-bar versus
// the oracle inner product of the explicitly built vector.
struct GramNormCheck {
    double analytic = 0.0;
    double numeric = 0.0;
};
GramNormCheck gram_norm_check(int alpha, int n, const oracle::FockSpace& space);
// The orthogonalized bosonic vector itself, for off-diagonal Gram checks.
Eigen::VectorXcd overline_vector(int alpha, int n, const oracle::FockSpace& space);

// Realize a coefficient table as a vector in the oracle space, prefactor
// included: sum of value * C+(alpha) (a+a+)^j (a+a+a+)^k |0>.
Eigen::VectorXcd oracle_vector(const CoefficientTable& table, const oracle::FockSpace& space);

// Nonsingularity certificate of the Fock-to-eigenbasis transformation: the
// triangular factor has unit diagonal and each family block contributes a
// Vandermonde in the quantization roots.
struct CompletenessCertificate {
    bool nonzero = false;
    double min_gap = std::numeric_limits<double>::infinity(); // in x = 2E
    struct Block {
        std::string family;
        int dim = 0;
        double min_gap = std::numeric_limits<double>::infinity();
        double log_abs_det = 0.0;
    };
    std::vector<Block> blocks;
};
CompletenessCertificate completeness_determinant(int n_cut);

} // namespace eigenvectors
} // namespace symqm

#endif
