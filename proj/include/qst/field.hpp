#pragma once

#include <cstdint>
#include <ostream>

#include "qst/errors.hpp"

namespace qst {

// Odd prime modulus, primality checked by trial division at construction.
// All primes in this project are desk-scale (p <= a few hundred), so trial
// division is entirely adequate.
struct PrimeModulus {
    int64_t p;

    explicit PrimeModulus(int64_t prime);
};

bool is_odd_prime(int64_t n);

// Element of F_p in canonical representation 0 <= v < p. Each element
// carries its modulus; arithmetic between different moduli is a hard error
// rather than a coercion, to prevent silent cross-prime contamination in
// sweeps over p.
struct Fp {
    int64_t v = 0;
    int64_t p = 0; // 0 marks a default-constructed placeholder

    Fp() = default;
    Fp(int64_t value, const PrimeModulus& mod) : p(mod.p) { v = norm(value, p); }
    Fp(int64_t value, int64_t prime) : p(prime) { v = norm(value, prime); }

    static int64_t norm(int64_t x, int64_t p) {
        x %= p;
        return x < 0 ? x + p : x;
    }

    bool is_zero() const { return v == 0; }

    friend void check_same(const Fp& a, const Fp& b) {
        if (a.p != b.p)
            throw RingMismatch("field elements have different moduli");
    }

    friend Fp operator+(const Fp& a, const Fp& b) {
        check_same(a, b);
        int64_t s = a.v + b.v;
        if (s >= a.p) s -= a.p;
        return Fp{s, a.p, 0};
    }
    friend Fp operator-(const Fp& a, const Fp& b) {
        check_same(a, b);
        int64_t s = a.v - b.v;
        if (s < 0) s += a.p;
        return Fp{s, a.p, 0};
    }
    friend Fp operator*(const Fp& a, const Fp& b) {
        check_same(a, b);
        return Fp{a.v * b.v % a.p, a.p, 0};
    }
    Fp operator-() const { return Fp{v == 0 ? 0 : p - v, p, 0}; }

    Fp& operator+=(const Fp& b) { return *this = *this + b; }
    Fp& operator-=(const Fp& b) { return *this = *this - b; }
    Fp& operator*=(const Fp& b) { return *this = *this * b; }

    friend bool operator==(const Fp& a, const Fp& b) {
        return a.p == b.p && a.v == b.v;
    }
    friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }

    friend std::ostream& operator<<(std::ostream& os, const Fp& a) {
        return os << a.v;
    }

private:
    // trusted constructor: value already canonical
    Fp(int64_t value, int64_t prime, int) : v(value), p(prime) {}
};

// a^e for e >= 0, with the convention 0^0 = 1.
Fp pow(const Fp& a, int64_t e);

// Multiplicative inverse via Fermat; throws DivisionByZero on zero input.
Fp inv(const Fp& a);

inline Fp operator/(const Fp& a, const Fp& b) { return a * inv(b); }

// Generalized binomial a(a-1)...(a-k+1)/k! in F_p; requires k < p so that
// k! is invertible. This is the "binomial with symbolic top entry" used by
// the hypergeometric evaluations.
Fp binom_field(const Fp& a, int64_t k);

// Integer binomial coefficient mod p by Lucas' theorem: the product of
// digitwise binomials in base p. Independent oracle for binom_field on
// integer inputs.
Fp binom_lucas(int64_t n, int64_t k, const PrimeModulus& mod);

} // namespace qst
