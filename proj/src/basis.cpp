#include "symqm/basis.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

namespace symqm {
namespace basis {

namespace {

Brick make_brick(int sector, int label, const std::vector<std::string>& traces)
{
    Brick b;
    b.sector = sector;
    b.label = label;
    std::string name;
    for (const std::string& t : traces) {
        Trace trace;
        for (char c : t) {
            if (c == 'a') {
                trace.ops.push_back(Op::BosonCreate);
                ++b.n_bosonic;
            } else if (c == 'f') {
                trace.ops.push_back(Op::FermionCreate);
            } else {
                throw std::logic_error("bad brick table entry");
            }
        }
        name += "(";
        for (std::size_t i = 0; i < t.size(); ++i) {
            if (i)
                name += " ";
            name += t[i];
            name += "+";
        }
        name += ")";
        b.word.push_back(std::move(trace));
    }
    b.name = name;
    return b;
}

// Elementary bosonic bricks and the SU(3) fermionic bricks per sector.
std::vector<std::vector<Brick>> build_catalogs()
{
    std::vector<std::vector<Brick>> cats(5);
    auto add = [&](int nf, std::vector<std::string> traces) {
        cats[static_cast<std::size_t>(nf)].push_back(
            make_brick(nf, static_cast<int>(cats[static_cast<std::size_t>(nf)].size()) + 1,
                       traces));
    };
    add(0, {"aa"});
    add(0, {"aaa"});

    add(1, {"fa"});
    add(1, {"faa"});

    add(2, {"ffa"});
    add(2, {"ffaa"});
    add(2, {"faafa"});
    add(2, {"fa", "faa"});

    add(3, {"fff"});
    add(3, {"fffa"});
    add(3, {"fffaa"});
    add(3, {"fa", "ffa"});
    add(3, {"faffaa"});
    add(3, {"fa", "ffaa"});
    add(3, {"faa", "ffa"});
    add(3, {"faa", "ffaa"});

    add(4, {"ffffa"});
    add(4, {"fa", "fff"});
    add(4, {"ffffaa"});
    add(4, {"faa", "fff"});
    add(4, {"fa", "afff"});
    add(4, {"ffa", "ffa"});
    add(4, {"faa", "fffa"});
    add(4, {"ffa", "ffaa"});
    add(4, {"fa", "faa", "ffa"});
    add(4, {"ffa", "fafaa"});
    return cats;
}

const std::vector<std::vector<Brick>>& catalogs()
{
    static const std::vector<std::vector<Brick>> cats = build_catalogs();
    return cats;
}

} // namespace

int floor_div(int a, int b)
{
    int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0)))
        --q;
    return q;
}

const std::vector<Brick>& catalog(int n_f)
{
    if (n_f < 0 || n_f > 4)
        throw std::invalid_argument("basis::catalog: sectors 0..4 only; use the particle-hole map for n_F > 4");
    return catalogs()[static_cast<std::size_t>(n_f)];
}

int catalog_size(int n_f)
{
    if (n_f < 1 || n_f > 4)
        throw std::invalid_argument("basis::catalog_size: fermionic sectors are 1..4");
    return static_cast<int>(catalog(n_f).size());
}

std::vector<BasisState> enumerate_basis(int n_cut, int n_f)
{
    if (n_cut < 0)
        throw std::invalid_argument("basis::enumerate_basis: n_cut must be >= 0");
    if (n_f < 0 || n_f > 4)
        throw std::invalid_argument("basis::enumerate_basis: sectors 0..4 only");

    std::vector<std::pair<int, int>> bricks; // (alpha, n_B)
    if (n_f == 0) {
        bricks.emplace_back(0, 0); // unit brick
    } else {
        for (const Brick& b : catalog(n_f))
            bricks.emplace_back(b.label, b.n_bosonic);
    }

    std::vector<BasisState> states;
    for (auto [alpha, n_b] : bricks) {
        int budget = n_cut - n_b;
        for (int k = 0; 3 * k <= budget; ++k)
            for (int j = 0; 2 * j + 3 * k <= budget; ++j)
                states.push_back({alpha, j, k});
    }
    return states;
}

int family_dimension(int n_cut, int kappa, Family family)
{
    if (kappa < 0)
        throw std::invalid_argument("basis::family_dimension: kappa must be >= 0");
    int shift = 0;
    switch (family) {
    case Family::f: shift = 0; break;
    case Family::g: shift = 3; break;
    case Family::g1: shift = 1; break;
    case Family::f2: shift = 2; break;
    case Family::f1: shift = 4; break;
    case Family::g2: shift = 5; break;
    }
    int d = floor_div(n_cut - 6 * kappa - shift, 2) + 1;
    return d > 0 ? d : 0;
}

int count_families(int n_cut, int n_f)
{
    if (n_cut < 0)
        throw std::invalid_argument("basis::count_families: n_cut must be >= 0");
    if (n_f < 0 || n_f > 8)
        throw std::invalid_argument("basis::count_families: sectors 0..8");
    int eff = n_f <= 4 ? n_f : 8 - n_f;
    std::vector<int> nbs;
    if (eff == 0)
        nbs.push_back(0);
    else
        for (const Brick& b : catalog(eff))
            nbs.push_back(b.n_bosonic);
    int count = 0;
    for (int n_b : nbs)
        if (n_cut >= n_b)
            count += floor_div(n_cut - n_b, 3) + 1;
    return count;
}

std::string catalog_json()
{
    std::ostringstream out;
    out << "[";
    bool first = true;
    for (int nf = 0; nf <= 4; ++nf) {
        for (const Brick& b : catalog(nf)) {
            if (!first)
                out << ",";
            first = false;
            out << "\n  {\"sector\": " << b.sector << ", \"label\": " << b.label
                << ", \"n_B\": " << b.n_bosonic << ", \"word\": \"" << b.name << "\"}";
        }
    }
    out << "\n]\n";
    return out.str();
}

} // namespace basis
} // namespace symqm
