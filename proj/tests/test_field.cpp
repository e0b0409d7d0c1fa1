#include <doctest.h>

#include "qst/field.hpp"
#include "qst/rational.hpp"

using namespace qst;

TEST_CASE("prime modulus rejects non-primes") {
    CHECK_THROWS_AS(PrimeModulus(4), DomainError);
    CHECK_THROWS_AS(PrimeModulus(2), DomainError);
    CHECK_THROWS_AS(PrimeModulus(1), DomainError);
    CHECK_NOTHROW(PrimeModulus(101));
}

TEST_CASE("canonical representation and arithmetic") {
    PrimeModulus mod(5);
    Fp a{7, mod}, b{-3, mod};
    CHECK(a.v == 2);
    CHECK(b.v == 2);
    CHECK((a + b).v == 4);
    CHECK((a * b).v == 4);
    CHECK((a - b).v == 0);
    CHECK((-a).v == 3);
}

TEST_CASE("cross-modulus arithmetic is rejected") {
    Fp a{1, PrimeModulus(3)}, b{1, PrimeModulus(5)};
    CHECK_THROWS_AS(a + b, RingMismatch);
    CHECK_THROWS_AS(a * b, RingMismatch);
}

TEST_CASE("pow uses the literal convention 0^0 = 1") {
    PrimeModulus mod(3);
    CHECK(pow(Fp{0, mod}, 0).v == 1);
    CHECK(pow(Fp{0, mod}, 2).v == 0);
    CHECK(pow(Fp{2, mod}, 4).v == 1);
}

TEST_CASE("inverse round trips and rejects zero") {
    PrimeModulus mod(7);
    for (int64_t a = 1; a < 7; ++a) {
        Fp x{a, mod};
        CHECK((x * inv(x)).v == 1);
        CHECK(inv(inv(x)) == x);
    }
    CHECK_THROWS_AS(inv(Fp{0, mod}), DivisionByZero);
}

TEST_CASE("binomial by Lucas against hand values") {
    PrimeModulus mod(5);
    CHECK(binom_lucas(7, 2, mod).v == 1);  // 21 mod 5
    CHECK(binom_lucas(10, 5, mod).v == 2); // 252 mod 5
    CHECK(binom_lucas(5, 1, mod).v == 0);  // p | C(5,1)
    CHECK(binom_lucas(4, 7, mod).v == 0);
}

TEST_CASE("generalized binomial agrees with Lucas on integer tops") {
    for (int64_t p : {3, 5, 7}) {
        PrimeModulus mod(p);
        for (int64_t n = 0; n < p * p; ++n)
            for (int64_t k = 0; k < p; ++k)
                CHECK(binom_field(Fp{n, mod}, k) == binom_lucas(n, k, mod));
    }
}

TEST_CASE("generalized binomial on negative tops") {
    PrimeModulus mod(5);
    // C(-1, k) = (-1)^k
    CHECK(binom_field(Fp{-1, mod}, 2).v == 1);
    CHECK(binom_field(Fp{-1, mod}, 3).v == 4);
}

TEST_CASE("rational reduction mod p") {
    PrimeModulus mod(5);
    CHECK(reduce_mod_p(Rat(3) / 2, mod).v == 4); // 3 * inv(2) = 3 * 3
    CHECK_THROWS_AS(reduce_mod_p(Rat(1) / 5, mod), DomainError);
}
