#include <doctest.h>

#include "qst/series.hpp"

using namespace qst;

namespace {

Window small() {
    Window w;
    w.q_max = 4;
    w.h_max = 4;
    w.x_max = 2;
    w.t_min = -6;
    w.h_min = -2;
    return w;
}

} // namespace

TEST_CASE("window truncation drops out-of-range terms on insertion") {
    PrimeModulus mod(5);
    Series<Fp> s(small());
    s.add_term(Monomial{5, 0, 0, 0}, Fp{1, mod}); // q beyond window
    s.add_term(Monomial{0, -7, 0, 0}, Fp{1, mod}); // t below floor
    CHECK(s.is_zero());
    s.add_term(Monomial{4, -6, 4, 2}, Fp{1, mod}); // corner is kept
    CHECK(s.terms.size() == 1);
}

TEST_CASE("cancellation removes stored terms") {
    PrimeModulus mod(3);
    Series<Fp> s(small());
    s.add_term(Monomial{1, 0, 0, 0}, Fp{1, mod});
    s.add_term(Monomial{1, 0, 0, 0}, Fp{2, mod});
    CHECK(s.is_zero());
}

TEST_CASE("geometric series is the inverse of 1 - q") {
    PrimeModulus mod(5);
    Window w = small();
    Fp one{1, mod};
    Series<Fp> omq(w);
    omq.add_term(Monomial{}, one);
    omq.add_term(Monomial{1, 0, 0, 0}, -one);
    Series<Fp> unit(w);
    unit.add_term(Monomial{}, one);
    CHECK(omq * novikov_geometric(w, one) == unit);
    CHECK(series_inv_unit(omq) == novikov_geometric(w, one));
}

TEST_CASE("inversion rejects non-units") {
    PrimeModulus mod(3);
    Window w = small();
    Series<Fp> q(w);
    q.add_term(Monomial{1, 0, 0, 0}, Fp{1, mod});
    CHECK_THROWS_AS(series_inv_unit(q), NotAUnit);
    Series<Fp> two_monos(w);
    two_monos.add_term(Monomial{0, 0, 0, 0}, Fp{1, mod});
    two_monos.add_term(Monomial{0, 1, 0, 0}, Fp{1, mod});
    CHECK_THROWS_AS(series_inv_unit(two_monos), NotAUnit);
}

TEST_CASE("tq_dq kills p-divisible degrees mod p") {
    PrimeModulus mod(3);
    Window w = small();
    Series<Fp> s(w);
    s.add_term(Monomial{3, 0, 0, 0}, Fp{1, mod});
    s.add_term(Monomial{2, 0, 0, 0}, Fp{1, mod});
    Series<Fp> d = tq_dq(s);
    CHECK(d.terms.size() == 1);
    CHECK(d.coeff(Monomial{2, 1, 0, 0}).v == 2);
}

TEST_CASE("substitute_h maps t^a h^b to mu^b t^{a+b}") {
    PrimeModulus mod(5);
    Window w = small();
    Series<Fp> s(w);
    s.add_term(Monomial{1, 1, 2, 0}, Fp{1, mod});
    Series<Fp> got = substitute_h(s, Fp{3, mod});
    CHECK(got.terms.size() == 1);
    CHECK(got.coeff(Monomial{1, 3, 0, 0}).v == 4); // 3^2 = 9 = 4
}

TEST_CASE("substitute_h at mu = 0 needs nonnegative h exponents") {
    PrimeModulus mod(5);
    Window w = small();
    Series<Fp> neg(w);
    neg.add_term(Monomial{0, 0, -1, 0}, Fp{1, mod});
    CHECK_THROWS_AS(substitute_h(neg, Fp{0, mod}), DivisionByZero);
    Series<Fp> pos(w);
    pos.add_term(Monomial{0, 2, 1, 0}, Fp{1, mod});
    CHECK(substitute_h(pos, Fp{0, mod}).is_zero());
}

TEST_CASE("homogeneity check counts t + h + x") {
    PrimeModulus mod(3);
    Series<Fp> s(small());
    s.add_term(Monomial{2, -1, 2, 1}, Fp{1, mod});
    s.add_term(Monomial{0, 2, 0, 0}, Fp{1, mod});
    CHECK(homogeneity_check(s, 2));
    CHECK(!homogeneity_check(s, 1));
}

TEST_CASE("q and h slices clear the sliced exponent") {
    PrimeModulus mod(3);
    Series<Fp> s(small());
    s.add_term(Monomial{2, 1, 3, 0}, Fp{1, mod});
    s.add_term(Monomial{1, 1, 3, 0}, Fp{2, mod});
    Series<Fp> sq = s.slice_q(2);
    CHECK(sq.terms.size() == 1);
    CHECK(sq.coeff(Monomial{0, 1, 3, 0}).v == 1);
    Series<Fp> sh = s.slice_h(3);
    CHECK(sh.terms.size() == 2);
    CHECK(sh.coeff(Monomial{1, 1, 0, 0}).v == 2);
}
