#include "symqm/basis.hpp"
#include "symqm/eigenvectors.hpp"
#include "symqm/laguerre.hpp"
#include "symqm/oracle/oracle.hpp"
#include "symqm/oracle/su3.hpp"
#include "symqm/recursion.hpp"
#include "symqm/spectrum.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

namespace {

// Fixed 12-significant-digit formatting keeps byte-identical outputs across
// runs for a given configuration.
std::string fmt(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

struct Config {
    int ncut = 0;
    int nf = 0;
    std::string family;
    int m = 1;
    std::string format = "json";
    bool continuum = false;
    double energy = 0.0;
    double eps = 1e-14;
    std::string suite = "all";
    long long capacity = 8ll << 20;
};

int cmd_spectrum(const Config& cfg)
{
    std::vector<symqm::spectrum::SpectrumEntry> entries =
        symqm::spectrum::full_spectrum(cfg.ncut, cfg.nf);
    if (cfg.format == "csv") {
        std::cout << "E,family,kappa,parity,m,d,gamma\n";
        for (const auto& e : entries)
            std::cout << fmt(e.energy) << "," << e.factor.family << "," << e.factor.kappa << ","
                      << (e.factor.even_quanta ? "even" : "odd") << "," << e.m << ","
                      << e.factor.order << "," << e.factor.index << "\n";
    } else {
        std::cout << "[";
        for (std::size_t i = 0; i < entries.size(); ++i) {
            const auto& e = entries[i];
            std::cout << (i ? ",\n " : "\n ") << "{\"E\": " << fmt(e.energy) << ", \"family\": \""
                      << e.factor.family << "\", \"kappa\": " << e.factor.kappa
                      << ", \"parity\": \"" << (e.factor.even_quanta ? "even" : "odd")
                      << "\", \"m\": " << e.m << ", \"d\": " << e.factor.order
                      << ", \"gamma\": " << e.factor.index << "}";
        }
        std::cout << "\n]\n";
    }
    return 0;
}

void print_eigvec(const symqm::eigenvectors::CoefficientTable& table)
{
    std::cout << "{\n  \"family\": \"" << symqm::eigenvectors::to_string(table.family)
              << "\",\n  \"kappa\": " << table.family.kappa << ",\n  \"m\": " << table.m
              << ",\n  \"E\": " << fmt(table.energy)
              << ",\n  \"prefactor\": " << fmt(table.prefactor) << ",\n  \"entries\": [";
    for (std::size_t i = 0; i < table.entries.size(); ++i) {
        const auto& e = table.entries[i];
        std::cout << (i ? ",\n    " : "\n    ") << "{\"alpha\": " << e.alpha << ", \"j\": " << e.j
                  << ", \"k\": " << e.k << ", \"value\": " << fmt(e.value) << "}";
    }
    std::cout << "\n  ]\n}\n";
}

int cmd_eigvec(const Config& cfg)
{
    symqm::eigenvectors::FamilyId fam = symqm::eigenvectors::parse_family(cfg.family, cfg.nf);
    if (cfg.continuum) {
        print_eigvec(symqm::eigenvectors::continuum_eigenvector(cfg.energy, fam, cfg.eps));
        return 0;
    }
    symqm::eigenvectors::EigenvectorSpec spec{fam, cfg.m, cfg.ncut};
    print_eigvec(cfg.nf == 0 ? symqm::eigenvectors::bosonic_eigenvector(spec)
                             : symqm::eigenvectors::nf1_eigenvector(spec));
    return 0;
}

struct VerifyReport {
    int failures = 0;
    std::string first_failure;

    void check(const std::string& name, bool ok, const std::string& detail = "")
    {
        std::cout << (ok ? "PASS " : "FAIL ") << name;
        if (!detail.empty())
            std::cout << " " << detail;
        std::cout << "\n";
        if (!ok) {
            ++failures;
            if (first_failure.empty())
                first_failure = name;
        }
    }
};

void verify_analytic(const Config& cfg, VerifyReport& report)
{
    namespace lag = symqm::laguerre;
    namespace eig = symqm::eigenvectors;
    const int ncut = cfg.ncut;

    {
        bool ok = true;
        double worst = 0.0;
        for (int alpha : {3, 4, 6, 9, 15, 40})
            for (int n : {1, 2, 5, 12, 20}) {
                std::vector<double> xs = lag::roots(n, alpha);
                for (std::size_t i = 0; i + 1 < xs.size(); ++i)
                    ok = ok && xs[i] < xs[i + 1];
                ok = ok && xs.front() > 0.0;
                std::vector<double> prev = n > 1 ? lag::roots(n - 1, alpha) : std::vector<double>{};
                for (std::size_t i = 0; i + 1 < xs.size() && i < prev.size(); ++i)
                    ok = ok && xs[i] < prev[i] && prev[i] < xs[i + 1];
                for (double x : xs)
                    worst = std::max(worst, lag::recurrence_residual(n, alpha, x));
            }
        report.check("laguerre.roots", ok && worst < 1e-10, "max residual " + fmt(worst));
    }
    {
        bool ok = true;
        for (int n = 0; n <= std::min(ncut, 40); ++n)
            for (int nf : {0, 1}) {
                std::size_t total = 0;
                for (const eig::FamilyId& fam : eig::list_families(n, nf))
                    total += static_cast<std::size_t>(eig::dimension(fam, n));
                ok = ok && total == symqm::basis::enumerate_basis(n, nf).size();
            }
        report.check("basis.partition_identity", ok);
    }
    {
        bool ok = true;
        for (int n = 0; n <= std::min(ncut, 40); ++n)
            ok = ok && symqm::spectrum::consistency_nf1(n);
        report.check("theta.nf1_consistency", ok);
    }
    {
        bool ok = true;
        for (int n = 0; n <= std::min(ncut, 40); ++n)
            for (int nf : {0, 1})
                ok = ok
                     && symqm::spectrum::full_spectrum(n, nf).size()
                            == symqm::basis::enumerate_basis(n, nf).size();
        report.check("spectrum.cardinality", ok);
    }
    {
        bool ok = true;
        for (int kappa = 1; kappa <= 8; ++kappa) {
            symqm::recursion::ChainSolution even =
                symqm::recursion::solve_chain(symqm::recursion::bosonic_chain_spec(kappa, true, 0));
            symqm::recursion::ChainSolution odd =
                symqm::recursion::solve_chain(symqm::recursion::bosonic_chain_spec(kappa, false, 0));
            for (int t = 0; t < kappa; ++t) {
                ok = ok && even.gamma[static_cast<std::size_t>(t)] == symqm::recursion::gamma_even(kappa, t);
                ok = ok && odd.gamma[static_cast<std::size_t>(t)] == symqm::recursion::gamma_odd(kappa, t);
            }
        }
        report.check("recursion.closed_form_products", ok);
    }
    {
        double worst = 0.0;
        for (int nf : {0, 1})
            for (const eig::FamilyId& fam : eig::list_families(std::min(ncut, nf == 0 ? 12 : 9), nf)) {
                int cut = std::min(ncut, nf == 0 ? 12 : 9);
                int d = eig::dimension(fam, cut);
                for (int m = 1; m <= d; ++m) {
                    eig::EigenvectorSpec spec{fam, m, cut};
                    eig::CoefficientTable table = nf == 0 ? eig::bosonic_eigenvector(spec)
                                                          : eig::nf1_eigenvector(spec);
                    double r = nf == 0 ? eig::h_action_residual(table, cut)
                                       : eig::nf1_recursion_residual(table, cut);
                    worst = std::max(worst, r);
                    worst = std::max(worst, eig::boundary_cancellation(table, cut));
                }
            }
        report.check("eigenvectors.residuals", worst < 1e-10, "max " + fmt(worst));
    }
    {
        eig::CompletenessCertificate cert = eig::completeness_determinant(std::min(ncut, 20));
        report.check("completeness.vandermonde", cert.nonzero && cert.min_gap > 1e-9,
                     "min gap " + fmt(cert.min_gap));
    }
    {
        bool ok = true;
        double prev = std::numeric_limits<double>::infinity();
        for (int n = 0; n <= std::min(ncut, 30); ++n) {
            double ground = symqm::spectrum::full_spectrum(n, 0).front().energy;
            ok = ok && ground <= prev + 1e-12;
            prev = ground;
        }
        report.check("spectrum.ground_state_monotone", ok);
    }
    {
        bool ok = true;
        for (int nf = 0; nf <= 8; ++nf) {
            for (const auto& e : symqm::spectrum::full_spectrum(std::min(ncut, 12), nf))
                ok = ok && e.energy > 0.0;
            ok = ok && symqm::spectrum::particle_hole_spectra_equal(std::min(ncut, 12), nf);
        }
        report.check("spectrum.positivity_and_mirror", ok);
    }
}

bool spectra_match(const std::vector<double>& a, const std::vector<double>& b, double tol,
                   double* worst = nullptr)
{
    if (a.size() != b.size())
        return false;
    double w = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        w = std::max(w, std::abs(a[i] - b[i]));
    if (worst)
        *worst = w;
    return w <= tol;
}

void verify_oracle(const Config& cfg, VerifyReport& report)
{
    namespace orc = symqm::oracle;
    orc::OracleConfig ocfg;
    ocfg.max_dim = static_cast<std::size_t>(cfg.capacity);

    {
        const orc::Su3Data& su3 = orc::su3_data();
        double worst = 0.0;
        for (int a = 0; a < 8; ++a)
            for (int b = 0; b < 8; ++b) {
                auto tr = (su3.generators[a] * su3.generators[b]).trace();
                worst = std::max(worst, std::abs(tr - (a == b ? 0.5 : 0.0)));
            }
        report.check("su3.trace_normalization", worst < 1e-14, "max deviation " + fmt(worst));
    }

    const int nf = cfg.nf;
    if (nf <= 2) {
        std::vector<double> oracle_es = orc::oracle_spectrum(cfg.ncut, nf, ocfg);
        std::vector<double> theta_es;
        for (const auto& e : symqm::spectrum::full_spectrum(cfg.ncut, nf))
            theta_es.push_back(e.energy);
        double worst = 0.0;
        bool ok = spectra_match(oracle_es, theta_es, 1e-8, &worst);
        report.check("oracle.brick_spectrum_vs_theta", ok,
                     "ncut=" + std::to_string(cfg.ncut) + " nf=" + std::to_string(nf)
                         + " max dev " + fmt(worst));
    }
    {
        std::vector<double> casimir_es = orc::casimir_spectrum(cfg.ncut, nf, ocfg);
        std::vector<double> theta_es;
        for (const auto& e : symqm::spectrum::full_spectrum(cfg.ncut, nf))
            theta_es.push_back(e.energy);
        double worst = 0.0;
        bool ok = spectra_match(casimir_es, theta_es, 1e-8, &worst);
        report.check("oracle.casimir_spectrum_vs_theta", ok, "max dev " + fmt(worst));
    }
    {
        orc::FockSpace space(cfg.ncut, nf, ocfg.max_dim);
        int eff = nf <= 4 ? nf : 8 - nf;
        orc::KernelBasis kernel = orc::casimir_kernel(space, -1, ocfg.exec);
        bool ok = kernel.dim == static_cast<int>(symqm::basis::enumerate_basis(cfg.ncut, eff).size());
        report.check("oracle.casimir_kernel_dimension", ok,
                     "dim " + std::to_string(kernel.dim) + ", next ritz " + fmt(kernel.next_ritz));
    }
    {
        double v = orc::gauss_law_violation(std::min(cfg.ncut, 4), std::min(nf, 2), ocfg);
        report.check("oracle.gauss_law_term", v < 1e-10, "max norm " + fmt(v));
    }
    if (nf == 0) {
        bool ok = true;
        double worst_off = 0.0, worst_diag = 0.0;
        orc::FockSpace space(cfg.ncut, 0, ocfg.max_dim);
        std::vector<std::pair<int, int>> held;
        for (int alpha = 0; alpha <= 2; ++alpha)
            for (int n = 0; 2 * n + 6 * alpha <= cfg.ncut; ++n)
                held.emplace_back(alpha, n);
        for (auto [alpha, n] : held) {
            symqm::eigenvectors::GramNormCheck chk =
                symqm::eigenvectors::gram_norm_check(alpha, n, space);
            worst_diag = std::max(worst_diag,
                                  std::abs(chk.numeric - chk.analytic) / chk.analytic);
        }
        for (std::size_t i = 0; i < held.size(); ++i)
            for (std::size_t j = i + 1; j < held.size(); ++j) {
                auto vi = symqm::eigenvectors::overline_vector(held[i].first, held[i].second, space);
                auto vj = symqm::eigenvectors::overline_vector(held[j].first, held[j].second, space);
                worst_off = std::max(worst_off,
                                     std::abs(vi.dot(vj)) / (vi.norm() * vj.norm()));
            }
        ok = worst_diag < 1e-9 && worst_off < 1e-9;
        report.check("oracle.overline_norms", ok,
                     "diag dev " + fmt(worst_diag) + ", off-diag " + fmt(worst_off));
    }
}

int cmd_verify(const Config& cfg)
{
    VerifyReport report;
    try {
        if (cfg.suite == "analytic" || cfg.suite == "all")
            verify_analytic(cfg, report);
        if (cfg.suite == "oracle" || cfg.suite == "all")
            verify_oracle(cfg, report);
    } catch (const symqm::oracle::CapacityError& e) {
        std::cerr << "capacity error: " << e.what() << "\n";
        return 2;
    }
    if (report.failures) {
        std::cout << "FAILED " << report.failures << " invariant(s); first: "
                  << report.first_failure << "\n";
        return 1;
    }
    std::cout << "OK all invariants passed\n";
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact cut-Fock spectra and eigenvectors of D=2 SU(3) supersymmetric "
                 "Yang-Mills quantum mechanics"};
    app.require_subcommand(1);
    Config cfg;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--ncut", cfg.ncut, "Fock-space cut-off")->check(CLI::NonNegativeNumber);
        sub->add_option("--nf", cfg.nf, "fermionic sector 0..8")->check(CLI::Range(0, 8));
        sub->add_option("--capacity", cfg.capacity, "oracle dimension bound")
            ->check(CLI::PositiveNumber);
    };

    CLI::App* sp = app.add_subcommand("spectrum", "full spectrum of a sector at a cut-off");
    add_common(sp);
    sp->add_option("--format", cfg.format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));

    CLI::App* ev = app.add_subcommand("eigvec", "eigenvector coefficient table");
    add_common(ev);
    ev->add_option("--family", cfg.family, "family name, e.g. f1, g0, f2_1")->required();
    ev->add_option("--m", cfg.m, "root index within the family (1-based)")
        ->check(CLI::PositiveNumber);
    ev->add_flag("--continuum", cfg.continuum, "infinite-cut solution at --energy");
    ev->add_option("--energy", cfg.energy, "continuum energy E > 0");
    ev->add_option("--eps", cfg.eps, "continuum truncation tolerance")
        ->check(CLI::PositiveNumber);

    CLI::App* vf = app.add_subcommand("verify", "run invariant suites");
    add_common(vf);
    vf->add_option("--suite", cfg.suite, "analytic, oracle or all")
        ->check(CLI::IsMember({"analytic", "oracle", "all"}));

    CLI::App* cat = app.add_subcommand("catalog", "dump the brick catalog as JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) { // --help
            app.exit(e);
            return 0;
        }
        std::cerr << e.what() << "\n";
        return 2;
    }

    try {
        if (sp->parsed())
            return cmd_spectrum(cfg);
        if (ev->parsed())
            return cmd_eigvec(cfg);
        if (vf->parsed()) {
            if (!vf->count("--ncut"))
                cfg.ncut = cfg.suite == "analytic" ? 20 : 6;
            return cmd_verify(cfg);
        }
        if (cat->parsed()) {
            std::cout << symqm::basis::catalog_json();
            return 0;
        }
    } catch (const symqm::oracle::CapacityError& e) {
        std::cerr << "capacity error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
