#include "qst/field.hpp"

namespace qst {

bool is_odd_prime(int64_t n) {
    if (n < 3 || n % 2 == 0) return false;
    for (int64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

PrimeModulus::PrimeModulus(int64_t prime) : p(prime) {
    if (!is_odd_prime(prime))
        throw DomainError("modulus must be an odd prime >= 3");
}

Fp pow(const Fp& a, int64_t e) {
    if (e < 0) throw DomainError("pow: negative exponent");
    Fp r{1, a.p};
    Fp base = a;
    while (e > 0) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

Fp inv(const Fp& a) {
    if (a.is_zero()) throw DivisionByZero("inverse of zero in F_p");
    return pow(a, a.p - 2);
}

Fp binom_field(const Fp& a, int64_t k) {
    if (k < 0 || k >= a.p)
        throw DomainError("binom_field: need 0 <= k < p");
    Fp num{1, a.p};
    for (int64_t i = 0; i < k; ++i)
        num *= a - Fp{i, a.p};
    Fp den{1, a.p};
    for (int64_t i = 2; i <= k; ++i)
        den *= Fp{i, a.p};
    return num * inv(den);
}

Fp binom_lucas(int64_t n, int64_t k, const PrimeModulus& mod) {
    if (n < 0 || k < 0) return Fp{0, mod};
    if (k > n) return Fp{0, mod};
    Fp r{1, mod};
    while (n > 0 || k > 0) {
        int64_t nd = n % mod.p, kd = k % mod.p;
        if (kd > nd) return Fp{0, mod};
        r *= binom_field(Fp{nd, mod}, kd);
        n /= mod.p;
        k /= mod.p;
    }
    return r;
}

} // namespace qst
