#include <doctest.h>

#include "qst/engine.hpp"

using namespace qst;

TEST_CASE("degree split") {
    PrimeModulus mod(5);
    DegreeSplit s(mod, 12);
    CHECK(s.alpha == 2);
    CHECK(s.beta == 2);
    CHECK_THROWS_AS(DegreeSplit(mod, 0), DomainError);
}

TEST_CASE("non-equivariant constants, hand values at p = 3") {
    PrimeModulus mod(3);
    // d = 1: (1,1) -> -2, (1,b) -> -t, (b,1) -> t, (b,b) -> 0
    CHECK(structure_constant_noneq(mod, 1, Insertion::one, Insertion::one)
              .coeff(Monomial{}) == Fp{1, mod});
    CHECK(structure_constant_noneq(mod, 1, Insertion::one, Insertion::b)
              .coeff(Monomial{0, 1, 0, 0}) == Fp{2, mod});
    CHECK(structure_constant_noneq(mod, 1, Insertion::b, Insertion::one)
              .coeff(Monomial{0, 1, 0, 0}) == Fp{1, mod});
    CHECK(structure_constant_noneq(mod, 1, Insertion::b, Insertion::b).is_zero());
    // d = 3: only (b,b) survives, value -t^2
    CHECK(structure_constant_noneq(mod, 3, Insertion::b, Insertion::b)
              .coeff(Monomial{0, 2, 0, 0}) == Fp{2, mod});
    CHECK(structure_constant_noneq(mod, 3, Insertion::one, Insertion::b).is_zero());
}

TEST_CASE("closed form matches the engine across the sweep") {
    for (int64_t p : {3, 5}) {
        PrimeModulus mod(p);
        for (int64_t d = 1; d <= 2 * p; ++d) {
            for (Insertion a : {Insertion::one, Insertion::b}) {
                for (Insertion b : {Insertion::one, Insertion::b}) {
                    CHECK(structure_constant_noneq(mod, d, a, b).terms ==
                          noneq_closed_form(mod, d, a, b).terms);
                }
            }
        }
    }
}

TEST_CASE("frozen bracket values") {
    PrimeModulus m3(3);
    // p=3, d=1, (1,1): bracket is the constant 1 through h^2
    Series<Fp> b11 = localization_bracket(m3, 1, Insertion::one, Insertion::one, 2);
    CHECK(b11.terms.size() == 1);
    CHECK(b11.coeff(Monomial{}) == Fp{1, m3});
    // p=3, d=2, (b,1): 2t + h
    Series<Fp> bb1 = localization_bracket(m3, 2, Insertion::b, Insertion::one, 2);
    CHECK(bb1.terms.size() == 2);
    CHECK(bb1.coeff(Monomial{0, 1, 0, 0}) == Fp{2, m3});
    CHECK(bb1.coeff(Monomial{0, 0, 1, 0}) == Fp{1, m3});
    // p=5, d=1, (1,b): deformed pairing coefficient is 4 t^3 h
    PrimeModulus m5(5);
    Series<Fp> s1 = structure_constant_s1(m5, 1, Insertion::one, Insertion::b, 2);
    CHECK(s1.terms.size() == 1);
    CHECK(s1.coeff(Monomial{0, 3, 1, 0}) == Fp{4, m5});
}

TEST_CASE("quotient-ring oracle agrees with localization") {
    for (int64_t p : {3, 5}) {
        PrimeModulus mod(p);
        Window w;
        w.q_max = 0;
        w.h_max = 3;
        w.x_max = 0;
        w.h_min = 0;
        w.t_min = -1000;
        for (int64_t d = 1; d <= p + 2; ++d) {
            for (Insertion a : {Insertion::one, Insertion::b}) {
                for (Insertion b : {Insertion::one, Insertion::b}) {
                    CHECK(localization_bracket(mod, d, a, b, 3).truncated(w) ==
                          integral_quotient_ring(mod, d, a, b, 3).truncated(w));
                }
            }
        }
    }
}

TEST_CASE("h-expansion closed forms, frozen slice") {
    PrimeModulus mod(3);
    // p=3, d=2, (1,1), order 1: the constant 1
    Series<Fp> o1 = h_expansion_closed_form(mod, 2, Insertion::one, Insertion::one, 1);
    CHECK(o1.terms.size() == 1);
    CHECK(o1.coeff(Monomial{}) == Fp{1, mod});
    // p=3, d=3 (p | d), (1,1), order 2 vanishes
    CHECK(h_expansion_closed_form(mod, 3, Insertion::one, Insertion::one, 2).is_zero());
    // both orders agree with the bracket slices
    for (int64_t d = 1; d <= 6; ++d) {
        Series<Fp> br = localization_bracket(mod, d, Insertion::one, Insertion::b, 2);
        for (int order = 1; order <= 2; ++order) {
            CHECK(br.slice_h(order - 1).terms ==
                  h_expansion_closed_form(mod, d, Insertion::one, Insertion::b, order).terms);
        }
    }
}

TEST_CASE("multiple cover integral is 1") {
    PrimeModulus mod(7);
    for (int64_t d = 1; d <= 5; ++d) CHECK(multiple_cover_integral(mod, d).v == 1);
}

TEST_CASE("classical term") {
    PrimeModulus mod(3);
    Window w = Window::standard(3);
    Endo2<Fp> geo = classical_steenrod_term(mod, Basis::geometric, w);
    CHECK(geo(1, 0).coeff(Monomial{0, 2, 0, 0}) == Fp{2, mod});
    CHECK(geo(0, 0).is_zero());
    CHECK(geo(0, 1).is_zero());
    CHECK(geo(1, 1).is_zero());
    Endo2<Fp> st = classical_steenrod_term(mod, Basis::stable, w);
    CHECK(st(1, 0).coeff(Monomial{0, 2, 1, 0}) == Fp{1, mod});
}

TEST_CASE("pairing values are homogeneous") {
    for (int64_t p : {3, 5}) {
        PrimeModulus mod(p);
        Window w = Window::standard(p);
        auto g = pairing_values(mod, w);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                CHECK(homogeneity_check(g[static_cast<size_t>(i)][static_cast<size_t>(j)],
                                        static_cast<int>(p) - 2 + i + j));
    }
}

TEST_CASE("classical part of the matrix sits at q^0") {
    PrimeModulus mod(3);
    Window w = Window::standard(3);
    Endo2<Fp> m = qsigma_matrix(mod, w);
    CHECK(!m(1, 0).slice_q(0).is_zero());
    CHECK(m(0, 0).slice_q(0).is_zero());
}
