#include "symqm/eigenvectors.hpp"

#include "symqm/laguerre.hpp"
#include "symqm/oracle/oracle.hpp"
#include "symqm/recursion.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace symqm {
namespace eigenvectors {

using basis::Family;

std::string to_string(const FamilyId& fam)
{
    switch (fam.type) {
    case Family::f: return "f" + std::to_string(fam.kappa);
    case Family::g: return "g" + std::to_string(fam.kappa);
    case Family::f1: return "f1_" + std::to_string(fam.kappa);
    case Family::f2: return "f2_" + std::to_string(fam.kappa);
    case Family::g1: return "g1_" + std::to_string(fam.kappa);
    case Family::g2: return "g2_" + std::to_string(fam.kappa);
    }
    return {};
}

FamilyId parse_family(const std::string& name, int n_f)
{
    auto fail = [&]() -> FamilyId {
        throw std::invalid_argument("unknown family '" + name + "' for sector n_F="
                                    + std::to_string(n_f));
    };
    auto digits = [](const std::string& s) {
        return !s.empty() && s.find_first_not_of("0123456789") == std::string::npos;
    };
    FamilyId fam;
    fam.n_f = n_f;
    if (n_f == 0) {
        if (name.size() < 2 || (name[0] != 'f' && name[0] != 'g') || !digits(name.substr(1)))
            return fail();
        fam.type = name[0] == 'f' ? Family::f : Family::g;
        fam.kappa = std::stoi(name.substr(1));
        return fam;
    }
    if (n_f == 1) {
        if (name.size() < 2)
            return fail();
        std::string head = name.substr(0, 2);
        if (head == "f1") fam.type = Family::f1;
        else if (head == "f2") fam.type = Family::f2;
        else if (head == "g1") fam.type = Family::g1;
        else if (head == "g2") fam.type = Family::g2;
        else return fail();
        fam.kappa = 0;
        if (name.size() > 2) {
            if (name[2] != '_' || !digits(name.substr(3)))
                return fail();
            fam.kappa = std::stoi(name.substr(3));
        }
        return fam;
    }
    return fail();
}

int quantization_index(const FamilyId& fam)
{
    switch (fam.type) {
    case Family::f: return 6 * fam.kappa + 3;
    case Family::g: return 6 * fam.kappa + 6;
    case Family::g1: return 6 * fam.kappa + 4;
    case Family::f2: return 6 * fam.kappa + 5;
    case Family::f1: return 6 * fam.kappa + 7;
    case Family::g2: return 6 * fam.kappa + 8;
    }
    return 0;
}

int dimension(const FamilyId& fam, int n_cut)
{
    return basis::family_dimension(n_cut, fam.kappa, fam.type);
}

double prefactor_exponent(const FamilyId& fam)
{
    switch (fam.type) {
    case Family::f: return 3.0 * fam.kappa;
    case Family::g: return 3.0 * fam.kappa + 1.5;
    case Family::g1: return 3.0 * fam.kappa + 0.5;
    case Family::f2: return 3.0 * fam.kappa + 1.0;
    case Family::f1: return 3.0 * fam.kappa + 2.0;
    case Family::g2: return 3.0 * fam.kappa + 2.5;
    }
    return 0.0;
}

std::vector<FamilyId> list_families(int n_cut, int n_f)
{
    std::vector<FamilyId> out;
    std::vector<Family> types;
    if (n_f == 0)
        types = {Family::f, Family::g};
    else if (n_f == 1)
        types = {Family::g1, Family::f2, Family::f1, Family::g2};
    else
        throw std::invalid_argument("list_families: analytic eigenvectors cover n_F = 0, 1");
    for (Family t : types)
        for (int kappa = 0;; ++kappa) {
            FamilyId fam{n_f, t, kappa};
            if (dimension(fam, n_cut) < 1)
                break;
            out.push_back(fam);
        }
    return out;
}

namespace {

void sort_entries(std::vector<CoefficientTable::Entry>& entries)
{
    std::sort(entries.begin(), entries.end(),
              [](const CoefficientTable::Entry& a, const CoefficientTable::Entry& b) {
                  if (a.alpha != b.alpha) return a.alpha < b.alpha;
                  if (a.k != b.k) return a.k < b.k;
                  return a.j < b.j;
              });
}

double rational_to_double(const recursion::Rational& r)
{
    return mpq_get_d(r.get_mpq_t());
}

// Chain level -> brick label for the n_F = 1 families. The even-quanta chain
// carries the two-boson brick on even levels, the odd-quanta chain on odd
// levels.
int nf1_brick_of_level(bool even_quanta, int level)
{
    bool heavy = even_quanta ? (level % 2 == 0) : (level % 2 != 0);
    return heavy ? 2 : 1;
}

struct Nf1Chain {
    int m = 0;
    bool even_quanta = false;
    int top_brick = 0;
};

Nf1Chain nf1_chain_of(const FamilyId& fam)
{
    switch (fam.type) {
    case Family::g1: return {2 * fam.kappa, false, 1};
    case Family::g2: return {2 * fam.kappa + 1, false, 2};
    case Family::f1: return {2 * fam.kappa + 1, true, 1};
    case Family::f2: return {2 * fam.kappa, true, 2};
    default:
        throw std::invalid_argument("not an n_F = 1 family");
    }
}

} // namespace

CoefficientTable bosonic_eigenvector(const EigenvectorSpec& spec)
{
    const FamilyId& fam = spec.family;
    if (fam.n_f != 0 || (fam.type != Family::f && fam.type != Family::g))
        throw std::invalid_argument("bosonic_eigenvector: need a bosonic f/g family");
    const int d = dimension(fam, spec.n_cut);
    if (d < 1)
        throw std::invalid_argument("bosonic_eigenvector: family " + to_string(fam)
                                    + " is empty at n_cut=" + std::to_string(spec.n_cut));
    if (spec.m < 1 || spec.m > d)
        throw std::invalid_argument("bosonic_eigenvector: root index m out of 1.."
                                    + std::to_string(d));

    const int gamma = quantization_index(fam);
    const double x = laguerre::roots(d, gamma)[static_cast<std::size_t>(spec.m) - 1];
    const bool even = fam.type == Family::f;
    const int kappa = fam.kappa;
    const int k_top = even ? 2 * kappa : 2 * kappa + 1;

    std::vector<double> lag = laguerre::eval_rescaled_all(d - 1, gamma, x);

    CoefficientTable table;
    table.family = fam;
    table.m = spec.m;
    table.energy = 0.5 * x;
    table.prefactor = std::pow(x, prefactor_exponent(fam)) * std::exp(-table.energy);
    for (int n = 0; n < d; ++n) {
        table.entries.push_back({0, n, k_top, lag[static_cast<std::size_t>(n)]});
        for (int t = 1; t <= kappa; ++t) {
            double g = rational_to_double(even ? recursion::gamma_even(kappa, kappa - t)
                                               : recursion::gamma_odd(kappa, kappa - t));
            table.entries.push_back({0, n + 3 * t, k_top - 2 * t,
                                     g * lag[static_cast<std::size_t>(n)]});
        }
    }
    sort_entries(table.entries);
    return table;
}

CoefficientTable nf1_eigenvector(const EigenvectorSpec& spec)
{
    const FamilyId& fam = spec.family;
    if (fam.n_f != 1)
        throw std::invalid_argument("nf1_eigenvector: need an n_F = 1 family");
    const int d = dimension(fam, spec.n_cut);
    if (d < 1)
        throw std::invalid_argument("nf1_eigenvector: family " + to_string(fam)
                                    + " is empty at n_cut=" + std::to_string(spec.n_cut));
    if (spec.m < 1 || spec.m > d)
        throw std::invalid_argument("nf1_eigenvector: root index m out of range");

    const Nf1Chain chain = nf1_chain_of(fam);
    recursion::ChainSpec cspec = recursion::nf1_chain_spec(chain.m, chain.even_quanta, d - 1);
    recursion::ChainSolution sol = recursion::solve_twofold_chain(cspec);

    const double x = sol.roots[static_cast<std::size_t>(spec.m) - 1];
    std::vector<double> lag = laguerre::eval_rescaled_all(d - 1, sol.quantization_index, x);

    CoefficientTable table;
    table.family = fam;
    table.m = spec.m;
    table.energy = 0.5 * x;
    table.prefactor = std::pow(x, prefactor_exponent(fam)) * std::exp(-table.energy);
    for (int t = 0; t <= chain.m; ++t) {
        const double g = rational_to_double(sol.gamma[static_cast<std::size_t>(t)]);
        const int off = sol.offset[static_cast<std::size_t>(t)];
        const int brick = nf1_brick_of_level(chain.even_quanta, t);
        for (int n = 0; n < d; ++n)
            table.entries.push_back({brick, n + off, t, g * lag[static_cast<std::size_t>(n)]});
    }
    sort_entries(table.entries);
    return table;
}

CoefficientTable continuum_eigenvector(double energy, const FamilyId& fam, double eps, int n_max)
{
    if (!(energy > 0.0))
        throw std::invalid_argument("continuum_eigenvector: energy must be positive");
    if (!(eps > 0.0))
        throw std::invalid_argument("continuum_eigenvector: eps must be positive");

    const double x = 2.0 * energy;
    int gamma = quantization_index(fam);

    // Mixing multipliers and placement per chain level; cut-independent.
    struct Level {
        int brick;
        int k;
        int offset;
        double g;
    };
    std::vector<Level> levels;
    if (fam.n_f == 0) {
        const bool even = fam.type == Family::f;
        const int k_top = even ? 2 * fam.kappa : 2 * fam.kappa + 1;
        levels.push_back({0, k_top, 0, 1.0});
        for (int t = 1; t <= fam.kappa; ++t) {
            double g = rational_to_double(even ? recursion::gamma_even(fam.kappa, fam.kappa - t)
                                               : recursion::gamma_odd(fam.kappa, fam.kappa - t));
            levels.push_back({0, k_top - 2 * t, 3 * t, g});
        }
    } else if (fam.n_f == 1) {
        const Nf1Chain chain = nf1_chain_of(fam);
        recursion::ChainSpec cspec = recursion::nf1_chain_spec(chain.m, chain.even_quanta, 0);
        recursion::ChainSolution sol = recursion::solve_twofold_chain(cspec);
        for (int t = chain.m; t >= 0; --t)
            levels.push_back({nf1_brick_of_level(chain.even_quanta, t), t,
                              sol.offset[static_cast<std::size_t>(t)],
                              rational_to_double(sol.gamma[static_cast<std::size_t>(t)])});
    } else {
        throw std::invalid_argument("continuum_eigenvector: analytic families cover n_F = 0, 1");
    }
    double g_max = 0.0;
    for (const Level& lv : levels)
        g_max = std::max(g_max, std::abs(lv.g));

    CoefficientTable table;
    table.family = fam;
    table.m = 0;
    table.energy = energy;
    table.prefactor = std::pow(x, prefactor_exponent(fam)) * std::exp(-energy);

    int consecutive_small = 0;
    double lag_prev = 0.0;
    double lag_cur = std::exp(-std::lgamma(double(gamma) + 1.0));
    for (int n = 0; n <= n_max; ++n) {
        for (const Level& lv : levels)
            table.entries.push_back({lv.brick, n + lv.offset, lv.k, lv.g * lag_cur});
        if (std::abs(table.prefactor * lag_cur) * std::max(1.0, g_max) < eps) {
            if (++consecutive_small >= 5)
                break;
        } else {
            consecutive_small = 0;
        }
        double lag_next = ((2 * n + gamma + 1 - x) * lag_cur - lag_prev)
                          / (double(n + 1) * double(n + gamma + 1));
        lag_prev = lag_cur;
        lag_cur = lag_next;
    }
    if (consecutive_small < 5)
        throw std::runtime_error("continuum_eigenvector: no convergence within n_max="
                                 + std::to_string(n_max));
    sort_entries(table.entries);
    return table;
}

HActionResult h_action(const std::vector<CoefficientTable::Entry>& table, int n_cut)
{
    std::map<std::pair<int, int>, double> in_cut, leak;
    auto add = [&](int j, int k, double v) {
        if (j < 0 || k < 0 || v == 0.0)
            return;
        if (2 * j + 3 * k <= n_cut)
            in_cut[{j, k}] += v;
        else
            leak[{j, k}] += v;
    };
    for (const CoefficientTable::Entry& e : table) {
        if (e.alpha != 0)
            throw std::invalid_argument("h_action: bosonic tables only");
        const double a = e.value;
        const int i = e.j;
        const int k = e.k;
        add(i, k, (i + 1.5 * k + 2.0) * a);
        add(i + 1, k, -0.5 * a);
        add(i - 1, k, -0.5 * i * (i + 3 * k + 3) * a);
        add(i + 2, k - 2, -(3.0 / 16.0) * k * (k - 1) * a);
    }
    HActionResult out;
    for (const auto& [jk, v] : in_cut)
        out.in_cut.push_back({0, jk.first, jk.second, v});
    for (const auto& [jk, v] : leak)
        out.leakage.push_back({0, jk.first, jk.second, v});
    return out;
}

double h_action_residual(const CoefficientTable& table, int n_cut)
{
    HActionResult hv = h_action(table.entries, n_cut);
    std::map<std::pair<int, int>, double> diff;
    for (const CoefficientTable::Entry& e : hv.in_cut)
        diff[{e.j, e.k}] += e.value;
    double v_max = 0.0;
    for (const CoefficientTable::Entry& e : table.entries) {
        diff[{e.j, e.k}] -= table.energy * e.value;
        v_max = std::max(v_max, std::abs(e.value));
    }
    double r_max = 0.0;
    for (const auto& [jk, v] : diff)
        r_max = std::max(r_max, std::abs(v));
    return r_max / v_max;
}

double nf1_recursion_residual(const CoefficientTable& table, int n_cut)
{
    std::map<std::tuple<int, int, int>, double> coeff;
    for (const CoefficientTable::Entry& e : table.entries)
        coeff[{e.alpha, e.j, e.k}] = e.value;
    auto at = [&](int alpha, int j, int k) -> double {
        if (j < 0 || k < 0)
            return 0.0;
        auto it = coeff.find({alpha, j, k});
        return it == coeff.end() ? 0.0 : it->second;
    };
    const double x = 2.0 * table.energy;

    double worst = 0.0;
    auto row = [&](int alpha, int j, int k) {
        const int n_b = alpha; // brick 1 carries one boson, brick 2 two
        const int idx = 3 * k + 3 + n_b;
        double terms[5];
        terms[0] = at(alpha, j - 1, k);
        terms[1] = -(2 * j + idx + 1 - x) * at(alpha, j, k);
        terms[2] = double(j + 1) * double(j + idx + 1) * at(alpha, j + 1, k);
        terms[3] = (3.0 / 8.0) * (k + 1) * (k + 2) * at(alpha, j - 2, k + 2);
        terms[4] = alpha == 1 ? 0.5 * (k + 1) * at(2, j - 1, k + 1)
                              : 1.5 * (k + 1) * at(1, j, k + 1);
        double sum = 0.0, scale = 0.0;
        for (double t : terms) {
            sum += t;
            scale = std::max(scale, std::abs(t));
        }
        if (scale > 0.0)
            worst = std::max(worst, std::abs(sum) / scale);
    };
    for (int alpha = 1; alpha <= 2; ++alpha)
        for (int k = 0; 3 * k + alpha <= n_cut; ++k)
            for (int j = 0; alpha + 2 * j + 3 * k <= n_cut; ++j)
                row(alpha, j, k);
    return worst;
}

double boundary_cancellation(const CoefficientTable& table, int n_cut)
{
    const int d = dimension(table.family, n_cut);
    const int gamma = quantization_index(table.family);
    const double x = 2.0 * table.energy;
    std::vector<double> lag = laguerre::eval_rescaled_all(d, gamma, x);
    double scale = 0.0;
    for (int n = 0; n < d; ++n)
        scale = std::max(scale, std::abs(lag[static_cast<std::size_t>(n)]));
    return std::abs(lag[static_cast<std::size_t>(d)]) / scale;
}

GramNormCheck gram_norm_check(int alpha, int n, const oracle::FockSpace& space)
{
    if (alpha < 0 || alpha > 2)
        throw std::invalid_argument("gram_norm_check: closed forms cover alpha = 0..2");
    Eigen::VectorXcd v = overline_vector(alpha, n, space);
    GramNormCheck out;
    out.numeric = v.squaredNorm();
    out.analytic = std::exp(std::lgamma(double(n) + 1.0) + std::lgamma(double(n) + 4.0 + 6.0 * alpha))
                   / (6.0 * std::pow(24.0, 2 * alpha));
    return out;
}

Eigen::VectorXcd overline_vector(int alpha, int n, const oracle::FockSpace& space)
{
    if (space.n_f() != 0)
        throw std::invalid_argument("overline_vector: bosonic space required");
    if (space.b_max() < 2 * n + 6 * alpha)
        throw oracle::CapacityError("overline_vector: oracle capacity below the state's quanta");

    const oracle::TraceOperator quad =
        oracle::trace_operator({oracle::ModeOp::BosonCreate, oracle::ModeOp::BosonCreate});
    const oracle::TraceOperator cubic = oracle::trace_operator(
        {oracle::ModeOp::BosonCreate, oracle::ModeOp::BosonCreate, oracle::ModeOp::BosonCreate});
    auto fock_state = [&](int j, int k) {
        Eigen::VectorXcd v = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(space.dim()));
        v(0) = 1.0;
        for (int c = 0; c < k; ++c) {
            Eigen::VectorXcd next = Eigen::VectorXcd::Zero(v.size());
            oracle::apply(cubic, space, space, v, next);
            v = std::move(next);
        }
        for (int c = 0; c < j; ++c) {
            Eigen::VectorXcd next = Eigen::VectorXcd::Zero(v.size());
            oracle::apply(quad, space, space, v, next);
            v = std::move(next);
        }
        return v;
    };

    Eigen::VectorXcd v = fock_state(n, 2 * alpha);
    for (int t = 1; t <= alpha; ++t) {
        double g = rational_to_double(recursion::gamma_even(alpha, alpha - t));
        v += g * fock_state(n + 3 * t, 2 * alpha - 2 * t);
    }
    return v;
}

Eigen::VectorXcd oracle_vector(const CoefficientTable& table, const oracle::FockSpace& space)
{
    if (space.n_f() != table.family.n_f)
        throw std::invalid_argument("oracle_vector: space sector does not match the table");
    const oracle::FockSpace bosonic =
        table.family.n_f == 0 ? space : oracle::FockSpace(space.b_max(), 0);
    const oracle::TraceOperator quad =
        oracle::trace_operator({oracle::ModeOp::BosonCreate, oracle::ModeOp::BosonCreate});
    const oracle::TraceOperator cubic = oracle::trace_operator(
        {oracle::ModeOp::BosonCreate, oracle::ModeOp::BosonCreate, oracle::ModeOp::BosonCreate});

    Eigen::VectorXcd out = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(space.dim()));
    for (const CoefficientTable::Entry& e : table.entries) {
        Eigen::VectorXcd v = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(bosonic.dim()));
        v(0) = 1.0;
        for (int c = 0; c < e.k; ++c) {
            Eigen::VectorXcd next = Eigen::VectorXcd::Zero(v.size());
            oracle::apply(cubic, bosonic, bosonic, v, next);
            v = std::move(next);
        }
        for (int c = 0; c < e.j; ++c) {
            Eigen::VectorXcd next = Eigen::VectorXcd::Zero(v.size());
            oracle::apply(quad, bosonic, bosonic, v, next);
            v = std::move(next);
        }
        if (e.alpha != 0) {
            const basis::Brick& brick =
                basis::catalog(table.family.n_f)[static_cast<std::size_t>(e.alpha) - 1];
            v = oracle::apply_product(oracle::brick_operator(brick), bosonic, space, v);
        }
        out += (table.prefactor * e.value) * v;
    }
    return out;
}

CompletenessCertificate completeness_determinant(int n_cut)
{
    CompletenessCertificate cert;
    cert.nonzero = true;
    for (const FamilyId& fam : list_families(n_cut, 0)) {
        const int d = dimension(fam, n_cut);
        const int gamma = quantization_index(fam);
        CompletenessCertificate::Block block;
        block.family = to_string(fam);
        block.dim = d;
        std::vector<double> xs = laguerre::roots(d, gamma);
        for (int k = 0; k < d; ++k)
            block.log_abs_det -=
                std::lgamma(double(k) + 1.0) + std::lgamma(double(gamma) + 1.0 + k);
        for (int i = 0; i < d; ++i)
            for (int j = i + 1; j < d; ++j) {
                double gap = xs[static_cast<std::size_t>(j)] - xs[static_cast<std::size_t>(i)];
                block.min_gap = std::min(block.min_gap, gap);
                if (gap <= 0.0)
                    cert.nonzero = false;
                else
                    block.log_abs_det += std::log(gap);
            }
        cert.min_gap = std::min(cert.min_gap, block.min_gap);
        cert.blocks.push_back(block);
    }
    return cert;
}

} // namespace eigenvectors
} // namespace symqm
