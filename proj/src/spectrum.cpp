#include "symqm/spectrum.hpp"

#include "symqm/basis.hpp"
#include "symqm/laguerre.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <tuple>

namespace symqm {
namespace spectrum {

namespace {

std::string family_name(int n_f, int brick_label, int k)
{
    if (n_f == 0)
        return (k % 2 == 0) ? "f" + std::to_string(k / 2) : "g" + std::to_string((k - 1) / 2);
    if (n_f == 1) {
        if (brick_label == 1)
            return (k % 2 == 0) ? "g1_" + std::to_string(k / 2) : "f1_" + std::to_string((k - 1) / 2);
        return (k % 2 == 0) ? "f2_" + std::to_string(k / 2) : "g2_" + std::to_string((k - 1) / 2);
    }
    return "a" + std::to_string(brick_label) + "k" + std::to_string(k);
}

} // namespace

double ThetaPolynomial::eval(double energy) const
{
    double p = 1.0;
    for (const ThetaFactor& f : factors)
        p *= laguerre::eval_rescaled(f.order, f.index, 2.0 * energy);
    return p;
}

int ThetaPolynomial::root_count() const
{
    int n = 0;
    for (const ThetaFactor& f : factors)
        n += f.order;
    return n;
}

ThetaPolynomial theta(int n_cut, int n_f)
{
    if (n_cut < 0)
        throw std::invalid_argument("spectrum::theta: n_cut must be >= 0");
    if (n_f < 0 || n_f > 8)
        throw std::invalid_argument("spectrum::theta: n_F must be in 0..8");

    const int eff = n_f <= 4 ? n_f : 8 - n_f;
    std::vector<std::pair<int, int>> bricks; // (label, n_B)
    if (eff == 0)
        bricks.emplace_back(0, 0);
    else
        for (const basis::Brick& b : basis::catalog(eff))
            bricks.emplace_back(b.label, b.n_bosonic);

    ThetaPolynomial poly;
    poly.n_cut = n_cut;
    poly.n_f = n_f;
    for (auto [label, n_b] : bricks) {
        if (n_cut < n_b)
            continue;
        for (int k = 0; 3 * k <= n_cut - n_b; ++k) {
            ThetaFactor f;
            f.order = basis::floor_div(n_cut - 3 * k - n_b, 2) + 1;
            f.index = 3 * k + 3 + n_b;
            f.brick_label = label;
            f.n_b = n_b;
            f.k = k;
            f.family = family_name(eff, label, k);
            f.kappa = (eff <= 1) ? k / 2 : k;
            f.even_quanta = ((n_b + k) % 2) == 0;
            if (f.order > 0)
                poly.factors.push_back(f);
        }
    }
    return poly;
}

std::vector<SpectrumEntry> full_spectrum(int n_cut, int n_f)
{
    ThetaPolynomial poly = theta(n_cut, n_f);
    std::vector<SpectrumEntry> entries;
    for (const ThetaFactor& f : poly.factors) {
        std::vector<double> energies = laguerre::quantization_energies(f.order, f.index);
        for (int m = 1; m <= f.order; ++m) {
            SpectrumEntry e;
            e.energy = energies[static_cast<std::size_t>(m) - 1];
            e.m = m;
            e.factor = f;
            entries.push_back(e);
        }
    }
    std::stable_sort(entries.begin(), entries.end(),
                     [](const SpectrumEntry& a, const SpectrumEntry& b) {
                         return std::tie(a.energy, a.factor.index, a.factor.order, a.m)
                                < std::tie(b.energy, b.factor.index, b.factor.order, b.m);
                     });
    return entries;
}

bool consistency_nf1(int n_cut)
{
    std::vector<std::pair<int, int>> explicit_factors; // (order, index)
    for (int j = 0; 3 * j <= n_cut - 1; ++j)
        explicit_factors.emplace_back(basis::floor_div(n_cut - 3 * j - 1, 2) + 1, 3 * j + 4);
    for (int k = 0; 3 * k <= n_cut - 2; ++k)
        explicit_factors.emplace_back(basis::floor_div(n_cut - 3 * k - 2, 2) + 1, 3 * k + 5);

    std::vector<std::pair<int, int>> general_factors;
    for (const ThetaFactor& f : theta(n_cut, 1).factors)
        general_factors.emplace_back(f.order, f.index);

    std::sort(explicit_factors.begin(), explicit_factors.end());
    std::sort(general_factors.begin(), general_factors.end());
    return explicit_factors == general_factors;
}

bool particle_hole_spectra_equal(int n_cut, int n_f, double tol)
{
    if (n_f < 0 || n_f > 8)
        throw std::invalid_argument("spectrum::particle_hole_spectra_equal: n_F must be in 0..8");
    std::vector<SpectrumEntry> a = full_spectrum(n_cut, n_f);
    std::vector<SpectrumEntry> b = full_spectrum(n_cut, 8 - n_f);
    if (a.size() != b.size())
        return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (std::abs(a[i].energy - b[i].energy) > tol)
            return false;
    return true;
}

} // namespace spectrum
} // namespace symqm
