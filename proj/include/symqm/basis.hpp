#ifndef SYMQM_BASIS_HPP
#define SYMQM_BASIS_HPP

#include <string>
#include <vector>

namespace symqm {
namespace basis {

// A single creation operator inside a trace word.
enum class Op { BosonCreate, FermionCreate };

// One trace factor of a brick, e.g. (f+ a+ a+).
struct Trace {
    std::vector<Op> ops;
};

// A gauge-invariant creation-operator building block. Bricks with n_F = 0 are
// the two elementary bosonic traces; fermionic bricks may be multi-trace
// products, stored in the catalog's written order.
struct Brick {
    int sector = 0;          // n_F
    int label = 0;           // alpha, 1-based within the sector
    int n_bosonic = 0;       // number of a+ operators in the brick
    std::vector<Trace> word; // trace factors, left to right as printed
    std::string name;        // display form, e.g. "(f+ a+)(f+ a+ a+)"
};

// Brick catalog of a sector. Sector 0 holds the elementary bosonic bricks
// (a+ a+) and (a+ a+ a+); sectors 1..4 hold the fermionic bricks. Sectors
// 5..8 carry no catalog and are reached through the particle-hole map.
const std::vector<Brick>& catalog(int n_f);

// d^{n_F}: number of fermionic bricks in sectors 1..4 (2, 4, 8, 10).
int catalog_size(int n_f);

// Basis state C+(n_B^alpha, n_F, alpha) (a+a+)^j (a+a+a+)^k |0>. For the
// bosonic sector alpha = 0 denotes the unit brick.
struct BasisState {
    int alpha = 0;
    int j = 0;
    int k = 0;
    friend bool operator==(const BasisState&, const BasisState&) = default;
};

// All states with n_B^alpha + 2j + 3k <= n_cut in lexicographic (alpha, k, j)
// order. Sectors above 4 are rejected here; use the particle-hole map first.
std::vector<BasisState> enumerate_basis(int n_cut, int n_f);

// Solution families. f/g are the bosonic even/odd families; the rest are the
// four n_F = 1 families.
enum class Family { f, g, f1, f2, g1, g2 };

// Number of states in the family at the given cut-off; 0 when the floor
// formula goes nonpositive (empty family).
int family_dimension(int n_cut, int kappa, Family family);

// Count of families with dimension >= 1 for the sector. The literal floor
// counts printed in the source material undercount by one per brick; the
// partition identity (sum of dimensions = basis size) is what this count is
// kept consistent with.
int count_families(int n_cut, int n_f);

// Catalog dump for documentation and oracle consumption: JSON array of
// {sector, label, n_B, word}.
std::string catalog_json();

// floor(a / b) for b > 0, correct for negative a.
int floor_div(int a, int b);

} // namespace basis
} // namespace symqm

#endif
