#ifndef SYMQM_SPECTRUM_HPP
#define SYMQM_SPECTRUM_HPP

#include <string>
#include <vector>

namespace symqm {
namespace spectrum {

// One quantization condition Lag^{index}_{order}(2E) = 0 entering the Theta
// product, tagged with its solution family.
struct ThetaFactor {
    int order = 0;       // d_i
    int index = 0;       // gamma_i
    int brick_label = 0; // alpha (0 for the bosonic unit brick)
    int n_b = 0;         // bosonic content of the brick
    int k = 0;           // cubic-brick count of the family
    std::string family;  // f0, g1, f1_0, a3k2, ...
    int kappa = 0;       // family kappa for sectors 0/1, else k
    bool even_quanta = false;
};

struct ThetaPolynomial {
    int n_cut = 0;
    int n_f = 0;
    std::vector<ThetaFactor> factors;

    // Product of all rescaled factors at the given energy.
    double eval(double energy) const;
    int root_count() const;
};

// Quantization-condition product of the sector: factors (d, gamma) with
// gamma = 3k + 3 + n_B^alpha over every brick and admissible k. Sectors
// n_F >= 5 use the catalog of 8 - n_F.
ThetaPolynomial theta(int n_cut, int n_f);

struct SpectrumEntry {
    double energy = 0;
    int m = 0; // 1-based root index within the factor
    ThetaFactor factor;
};

// All eigenenergies with provenance, ascending in E with ties broken by
// (gamma, d, m); cardinality equals the cut-basis size.
std::vector<SpectrumEntry> full_spectrum(int n_cut, int n_f);

// Structural equality of the explicit two-product n_F = 1 formula with the
// catalog-driven general formula.
bool consistency_nf1(int n_cut);

// Multiset equality of the spectra in sectors n_F and 8 - n_F. True by
// construction under the mirror map; the substantive check is the oracle's.
bool particle_hole_spectra_equal(int n_cut, int n_f, double tol = 1e-12);

} // namespace spectrum
} // namespace symqm

#endif
