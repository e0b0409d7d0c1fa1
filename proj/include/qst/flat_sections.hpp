#pragma once

#include <array>
#include <map>
#include <utility>
#include <vector>

#include "qst/field.hpp"

namespace qst {

// Bivariate polynomial in z1, z2 over F_p, sparse on (z1 exp, z2 exp).
struct BiPoly {
    std::map<std::pair<int, int>, Fp> terms;

    void add(int a, int b, const Fp& c) {
        if (c.is_zero()) return;
        auto key = std::make_pair(a, b);
        auto it = terms.find(key);
        if (it == terms.end()) {
            terms.emplace(key, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms.erase(it);
        }
    }
    bool is_zero() const { return terms.empty(); }

    friend bool operator==(const BiPoly& a, const BiPoly& b) {
        return a.terms == b.terms;
    }
};

BiPoly bipoly_add(const BiPoly& a, const BiPoly& b);
BiPoly bipoly_mul(const BiPoly& a, const BiPoly& b);
BiPoly bipoly_scale(const BiPoly& a, const Fp& c);
// z_i d/dz_i, var is 1 or 2
BiPoly bipoly_euler(const BiPoly& a, int var, const PrimeModulus& mod);
// true iff every monomial has total degree `deg`
bool bipoly_homogeneous(const BiPoly& a, int deg);

// The mod p master polynomial Phi_p = s^m (s - z1)^{p-m} (s - z2)^{p-m},
// returned as its coefficient list in s (index = s exponent).
std::vector<BiPoly> master_polynomial(const PrimeModulus& mod, int64_t m);

// Psi_{p,i} = Coeff(s^{p-1} : Phi_p / (s - z_i)) for i = 1, 2, computed by
// exact synthetic division (DivisionNotExact if a remainder survives).
std::array<BiPoly, 2> psi_coefficients(const PrimeModulus& mod, int64_t m);

// The distinguished mod p solution of the quantum differential equation in
// the stable basis, at the parameter mu = m: a pair of q-polynomials
// (1-q)^{2m} z1^{-(p-m)} (Psi_{p,1}, Psi_{p,2}).
struct FlatSection {
    int64_t p = 0;
    int64_t m = 0;
    std::array<std::vector<Fp>, 2> entries; // index = q exponent
};

FlatSection arithmetic_flat_section(const PrimeModulus& mod, int64_t m);

// Check that I solves (1-q) q I' = -mu ((1-q) N + q E) I as an exact
// polynomial identity, with N = [[0,0],[1,0]] and E the all-ones matrix.
bool flat_section_qde_check(const FlatSection& sec);

// Entries of Coeff(q^d : QSigma in the stable basis at h = mu t) divided by
// t^p, as a constant 2x2 matrix over F_p. Defined for 0 <= d <= p; the
// q-dependence of the full operation only sees d mod p.
std::array<std::array<Fp, 2>, 2> sigma_d_specialized(const PrimeModulus& mod,
                                                     const Fp& mu, int64_t d);

// The exact identity behind the annihilation of the arithmetic flat
// section: q^p (Sigma_0 - Sigma_p) I = (sum_{d=0}^{p-1} Sigma_d q^d) I,
// which is equivalent to QSigma|_{h = mu t} I_mu = 0.
bool annihilation_check(const PrimeModulus& mod, int64_t m);

// mu sum_{l <= d} binom(mu-l+d-1, d) binom(mu-l+d, d) binom(d, l)^2: the
// lower-left entry of sigma_d_specialized, a generalized hypergeometric
// value. Requires 0 <= d < p.
Fp hypergeometric_structure_constant(const PrimeModulus& mod, const Fp& mu,
                                     int64_t d);

// The dynamical differential equation satisfied by (Psi_1, Psi_2), as
// polynomial identities cleared of denominators: with B' = [[-1,1],[1,-1]],
//   (z1-z2) z1 d1 Psi = m ((z1-z2) [[0,-1],[0,0]] + z1 B') Psi
//   (z2-z1) z2 d2 Psi = m ((z2-z1) [[0,0],[-1,0]] + z2 B') Psi
// and their one-dimensional reduction along z2/z1 = q:
//   (z2-z1)(z2 d2 - z1 d1) Psi = m ((z2-z1) [[0,1],[-1,0]] + (z1+z2) B') Psi.
// Also checks that both entries are homogeneous of degree p - m.
bool reduced_dde_check(const PrimeModulus& mod, int64_t m);

} // namespace qst
