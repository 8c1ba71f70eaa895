#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "symqm/basis.hpp"
#include "symqm/eigenvectors.hpp"

#include <set>

using namespace symqm::basis;

TEST_CASE("bosonic catalog is the two elementary traces")
{
    const std::vector<Brick>& cat = catalog(0);
    REQUIRE(cat.size() == 2);
    CHECK(cat[0].n_bosonic == 2);
    CHECK(cat[0].word.size() == 1);
    CHECK(cat[0].word[0].ops.size() == 2);
    CHECK(cat[1].n_bosonic == 3);
    CHECK(cat[1].name == "(a+ a+ a+)");
}

TEST_CASE("fermionic catalog sizes and nf=1 content")
{
    CHECK(catalog_size(1) == 2);
    CHECK(catalog_size(2) == 4);
    CHECK(catalog_size(3) == 8);
    CHECK(catalog_size(4) == 10);

    const std::vector<Brick>& cat = catalog(1);
    CHECK(cat[0].n_bosonic == 1);
    CHECK(cat[0].name == "(f+ a+)");
    CHECK(cat[1].n_bosonic == 2);
    CHECK(cat[1].name == "(f+ a+ a+)");
}

TEST_CASE("fermion counts match the sector everywhere in the catalog")
{
    for (int nf = 1; nf <= 4; ++nf)
        for (const Brick& b : catalog(nf)) {
            int count = 0;
            for (const Trace& t : b.word)
                for (Op op : t.ops)
                    if (op == Op::FermionCreate)
                        ++count;
            CHECK(count == nf);
            CHECK(b.sector == nf);
        }
}

TEST_CASE("enumerate_basis examples")
{
    std::vector<BasisState> b30 = enumerate_basis(3, 0);
    REQUIRE(b30.size() == 3);
    CHECK(b30[0] == BasisState{0, 0, 0});
    CHECK(b30[1] == BasisState{0, 1, 0});
    CHECK(b30[2] == BasisState{0, 0, 1});

    std::vector<BasisState> b00 = enumerate_basis(0, 0);
    REQUIRE(b00.size() == 1);
    CHECK(b00[0] == BasisState{0, 0, 0});

    // brick (f+a+): 2j+3k <= 3, brick (f+a+a+): 2j+3k <= 2
    std::vector<BasisState> b41 = enumerate_basis(4, 1);
    REQUIRE(b41.size() == 5);
    CHECK(b41[0] == BasisState{1, 0, 0});
    CHECK(b41[1] == BasisState{1, 1, 0});
    CHECK(b41[2] == BasisState{1, 0, 1});
    CHECK(b41[3] == BasisState{2, 0, 0});
    CHECK(b41[4] == BasisState{2, 1, 0});
}

TEST_CASE("enumeration is ordered and duplicate-free")
{
    for (int nf = 0; nf <= 4; ++nf)
        for (int n = 0; n <= 25; ++n) {
            std::vector<BasisState> states = enumerate_basis(n, nf);
            std::set<std::tuple<int, int, int>> seen;
            for (std::size_t i = 0; i < states.size(); ++i) {
                CHECK(seen.insert({states[i].alpha, states[i].k, states[i].j}).second);
                if (i > 0) {
                    auto a = std::tuple{states[i - 1].alpha, states[i - 1].k, states[i - 1].j};
                    auto b = std::tuple{states[i].alpha, states[i].k, states[i].j};
                    CHECK(a < b);
                }
            }
        }
    CHECK_THROWS_AS(enumerate_basis(3, 5), std::invalid_argument);
}

TEST_CASE("family dimension formulas")
{
    CHECK(family_dimension(5, 0, Family::f) == 3);
    CHECK(family_dimension(5, 0, Family::g) == 2);
    CHECK(family_dimension(15, 1, Family::f) == 5);
    CHECK(family_dimension(2, 0, Family::g) == 0);
    CHECK(family_dimension(7, 0, Family::g1) == 4);
    CHECK(family_dimension(7, 0, Family::f2) == 3);
    CHECK(family_dimension(7, 0, Family::f1) == 2);
    CHECK(family_dimension(7, 0, Family::g2) == 2);
    CHECK(family_dimension(7, 1, Family::g1) == 1);
}

TEST_CASE("family dimension monotone in n_cut, nonincreasing in kappa")
{
    for (Family fam : {Family::f, Family::g, Family::f1, Family::f2, Family::g1, Family::g2})
        for (int kappa = 0; kappa <= 4; ++kappa)
            for (int n = 0; n <= 30; ++n) {
                CHECK(family_dimension(n + 1, kappa, fam) >= family_dimension(n, kappa, fam));
                CHECK(family_dimension(n, kappa + 1, fam) <= family_dimension(n, kappa, fam));
            }
}

TEST_CASE("partition identity: family dimensions exhaust the basis")
{
    for (int nf : {0, 1})
        for (int n = 0; n <= 40; ++n) {
            std::size_t total = 0;
            for (const auto& fam : symqm::eigenvectors::list_families(n, nf))
                total += static_cast<std::size_t>(symqm::eigenvectors::dimension(fam, n));
            CHECK(total == enumerate_basis(n, nf).size());
        }
}

TEST_CASE("count_families counts nonempty families")
{
    // f0 exists whenever the vacuum fits
    CHECK(count_families(0, 0) == 1);
    CHECK(count_families(2, 0) == 1);
    CHECK(count_families(3, 0) == 2);
    // one family per Theta factor
    CHECK(count_families(15, 0) == 6);
    CHECK(count_families(7, 1) == 5);
    for (int nf : {0, 1})
        for (int n = 0; n <= 40; ++n)
            CHECK(count_families(n, nf)
                  == static_cast<int>(symqm::eigenvectors::list_families(n, nf).size()));
}

TEST_CASE("catalog JSON dump names every brick")
{
    std::string json = catalog_json();
    CHECK(json.find("\"sector\": 4") != std::string::npos);
    CHECK(json.find("(f+ a+)(f+ a+ a+)") != std::string::npos);
    CHECK(json.find("\"n_B\": 3") != std::string::npos);
}
