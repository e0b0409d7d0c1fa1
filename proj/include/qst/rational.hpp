#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

#include "qst/errors.hpp"
#include "qst/field.hpp"

namespace qst {

// Arbitrary-precision rational scalar for the characteristic-0 pipeline.
// cpp_rational keeps values reduced with positive denominator.
using Rat = boost::multiprecision::cpp_rational;

inline bool is_zero(const Rat& a) { return a == 0; }
inline bool is_zero(const Fp& a) { return a.is_zero(); }

inline Rat scalar_inv(const Rat& a) {
    if (a == 0) throw DivisionByZero("inverse of zero rational");
    return 1 / a;
}
inline Fp scalar_inv(const Fp& a) { return inv(a); }

// Build the integer n in the same scalar ring as `like`.
inline Rat scalar_from_int(const Rat&, int64_t n) { return Rat(n); }
inline Fp scalar_from_int(const Fp& like, int64_t n) { return Fp{n, like.p}; }

inline std::string scalar_to_string(const Rat& a) { return a.str(); }
inline std::string scalar_to_string(const Fp& a) { return std::to_string(a.v); }

// Reduce a rational mod p; the denominator must be prime to p.
inline Fp reduce_mod_p(const Rat& a, const PrimeModulus& mod) {
    using boost::multiprecision::cpp_int;
    cpp_int num = boost::multiprecision::numerator(a) % mod.p;
    cpp_int den = boost::multiprecision::denominator(a) % mod.p;
    int64_t n = static_cast<int64_t>(num);
    int64_t d = static_cast<int64_t>(den);
    if (d % mod.p == 0)
        throw DomainError("rational has denominator divisible by p");
    return Fp{n, mod} * inv(Fp{d, mod});
}

} // namespace qst
