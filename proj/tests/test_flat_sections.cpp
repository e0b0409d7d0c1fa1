#include <doctest.h>

#include "qst/flat_sections.hpp"

using namespace qst;

TEST_CASE("master polynomial degree and bihomogeneity") {
    PrimeModulus mod(5);
    auto phi = master_polynomial(mod, 2);
    // s^m (s - z1)^{p-m} (s - z2)^{p-m}: degree 2 + 3 + 3 = 8 in s
    CHECK(phi.size() == 9);
    CHECK(phi[8].terms.size() == 1); // leading coefficient 1
    for (size_t k = 0; k < phi.size(); ++k)
        CHECK(bipoly_homogeneous(phi[k], static_cast<int>(8 - k)));
}

TEST_CASE("psi coefficients are bihomogeneous of degree p - m") {
    for (int64_t p : {3, 5, 7}) {
        PrimeModulus mod(p);
        for (int64_t m = 0; m < p; ++m) {
            auto psi = psi_coefficients(mod, m);
            CHECK(bipoly_homogeneous(psi[0], static_cast<int>(p - m)));
            CHECK(bipoly_homogeneous(psi[1], static_cast<int>(p - m)));
        }
    }
}

TEST_CASE("frozen section at p = 3, m = 2") {
    PrimeModulus mod(3);
    FlatSection sec = arithmetic_flat_section(mod, 2);
    // I = -(1-q)^4 (q, 1)
    std::vector<int64_t> e0 = {0, 2, 1, 0, 1, 2};
    std::vector<int64_t> e1 = {2, 1, 0, 1, 2, 0};
    REQUIRE(sec.entries[0].size() >= e0.size());
    REQUIRE(sec.entries[1].size() >= e1.size());
    for (size_t d = 0; d < e0.size(); ++d) {
        CHECK(sec.entries[0][d].v == e0[d]);
        CHECK(sec.entries[1][d].v == e1[d]);
    }
}

TEST_CASE("sections solve the quantum differential equation") {
    for (int64_t p : {3, 5, 7}) {
        PrimeModulus mod(p);
        for (int64_t m = 0; m < p; ++m)
            CHECK(flat_section_qde_check(arithmetic_flat_section(mod, m)));
    }
}

TEST_CASE("checker rejects a perturbed section") {
    PrimeModulus mod(3);
    FlatSection sec = arithmetic_flat_section(mod, 1);
    sec.entries[0][1] += Fp{1, mod};
    CHECK(!flat_section_qde_check(sec));
}

TEST_CASE("specialized matrices, frozen values") {
    PrimeModulus m3(3);
    auto s = sigma_d_specialized(m3, Fp{2, m3}, 1);
    CHECK(s[0][0].v == 2);
    CHECK(s[0][1].v == 0);
    CHECK(s[1][0].v == 1);
    CHECK(s[1][1].v == 1);
    PrimeModulus m5(5);
    auto s2 = sigma_d_specialized(m5, Fp{3, m5}, 2);
    CHECK(s2[0][0].v == 4);
    CHECK(s2[0][1].v == 3);
    CHECK(s2[1][0].v == 0);
    CHECK(s2[1][1].v == 1);
}

TEST_CASE("boundary matrices") {
    PrimeModulus mod(5);
    Fp mu{2, mod};
    auto s0 = sigma_d_specialized(mod, mu, 0);
    CHECK(s0[0][0].v == 0);
    CHECK(s0[0][1].v == 0);
    CHECK(s0[1][0] == mu);
    CHECK(s0[1][1].v == 0);
    auto sp = sigma_d_specialized(mod, mu, 5);
    CHECK(sp[0][0].v == 0);
    CHECK(sp[0][1] == mu);
    CHECK(sp[1][0] == mu);
    CHECK(sp[1][1].v == 0);
}

TEST_CASE("annihilation identity for every parameter") {
    for (int64_t p : {3, 5, 7}) {
        PrimeModulus mod(p);
        for (int64_t m = 0; m < p; ++m) CHECK(annihilation_check(mod, m));
    }
}

TEST_CASE("hypergeometric values") {
    PrimeModulus mod(7);
    for (int64_t mu = 0; mu < 7; ++mu) {
        Fp m{mu, mod};
        // d = 1 collapses to 2 mu^3
        CHECK(hypergeometric_structure_constant(mod, m, 1) ==
              Fp{2, mod} * m * m * m);
        // mu = 0 kills every degree
        for (int64_t d = 1; d < 7; ++d)
            CHECK(hypergeometric_structure_constant(mod, Fp{0, mod}, d).v == 0);
        // matches the lower-left specialized entry
        for (int64_t d = 1; d < 7; ++d)
            CHECK(hypergeometric_structure_constant(mod, m, d) ==
                  sigma_d_specialized(mod, m, d)[1][0]);
    }
    CHECK_THROWS_AS(hypergeometric_structure_constant(mod, Fp{1, mod}, 7),
                    DomainError);
}

TEST_CASE("dynamical equations before the gauge") {
    for (int64_t p : {3, 5, 7}) {
        PrimeModulus mod(p);
        for (int64_t m = 0; m < p; ++m) CHECK(reduced_dde_check(mod, m));
    }
}
