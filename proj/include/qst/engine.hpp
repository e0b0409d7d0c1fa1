#pragma once

#include <array>

#include "qst/endo.hpp"
#include "qst/ratfn.hpp"
#include "qst/series.hpp"

namespace qst {

// Incidence class at the marked points: the unit 1 in H^0 or the fiber
// class b in H^2.
enum class Insertion { one, b };

inline const char* insertion_name(Insertion c) {
    return c == Insertion::one ? "1" : "b";
}

// Euclidean split d = alpha p + beta, 0 <= beta < p.
struct DegreeSplit {
    int64_t d;
    int64_t alpha;
    int64_t beta;

    DegreeSplit(const PrimeModulus& mod, int64_t degree)
        : d(degree), alpha(degree / mod.p), beta(degree % mod.p) {
        if (degree < 1) throw DomainError("degree must be positive");
    }
};

// Complex dimension of the fixed component with character ell:
// 2 floor((d - ell)/p) + 1, which is 2 alpha + 1 for ell <= beta and
// 2 alpha - 1 for ell > beta (the latter only nonnegative when alpha >= 1).
inline int64_t fixed_component_dim(const PrimeModulus& mod, const DegreeSplit& s,
                                   int64_t ell) {
    int64_t fl = (s.d - ell) >= 0 ? (s.d - ell) / mod.p : -1;
    return 2 * fl + 1;
}

// The factor c_{0,infty}(H, t) of the incidence-constraint Euler class,
// as a polynomial in H (stored in the x slot) over F_p[t].
Series<Fp> incidence_factor(Insertion b0, Insertion binf, int64_t d,
                            const PrimeModulus& mod);

// Obstruction-bundle Euler class prod_{k=1}^{d-1} (H - kt - [h])^2,
// polynomial in H (x slot); with_h = false drops the h shift.
Series<Fp> obs_euler(int64_t d, bool with_h, const PrimeModulus& mod);

// The power series C_{d,ell}(x, t, h) =
//   (x^{p-1} - t^{p-1})^{1-2a} c_{0,infty}(x + ell t, t)
//   prod_{k=1}^{d-1} (x + (ell-k)t - h)^2
// truncated in x at x_max. For a >= 1 the first factor is a genuine x-adic
// series (its constant term -t^{p-1} is a unit).
Series<Fp> c_dl(const PrimeModulus& mod, const DegreeSplit& split, int64_t ell,
                Insertion b0, Insertion binf, int x_max);

// The bare localization sum over fixed components for degree d: the value
// of the equivariant integral Obs * IC over the section space. Its h^0
// slice is the non-equivariant structure constant; multiplied by h it is
// the q^d coefficient of the deformed pairing.
Series<Fp> localization_bracket(const PrimeModulus& mod, int64_t d,
                                Insertion b0, Insertion binf, int h_max);

// q^d coefficient of (QSigma^{S1}(b0), binf) minus its classical part,
// i.e. h times the bracket. Result lives in t, h only.
Series<Fp> structure_constant_s1(const PrimeModulus& mod, int64_t d,
                                 Insertion b0, Insertion binf, int h_max);

// h = 0 slice: the non-equivariant structure constant of the local P^1
// geometry (closed form: the entries -d^{p-2} t^{p-2}, -t^{p-1},
// -2 d^{p-3} t^{p-3}, d^{p-2} t^{p-2}).
Series<Fp> structure_constant_noneq(const PrimeModulus& mod, int64_t d,
                                    Insertion b0, Insertion binf);

// The closed-form value of structure_constant_noneq, evaluated without
// localization (powers of d read literally in F_p, so d^0 = 1 even when
// p | d).
Series<Fp> noneq_closed_form(const PrimeModulus& mod, int64_t d,
                             Insertion b0, Insertion binf);

// Independent oracle: coefficient of H^{2d+1} in the remainder of
// Obs * IC modulo the relation H^2 (H-t)^2 ... (H-dt)^2, computed by monic
// polynomial division over F_p[t, h]. Equals the bare localization bracket.
Series<Fp> integral_quotient_ring(const PrimeModulus& mod, int64_t d,
                                  Insertion b0, Insertion binf, int h_max);

// Closed forms for the low h-orders of the deformed pairing coefficient:
// order 0 is the (vanishing) non-classical h^0 part, order 1 and 2 are the
// h^1 and h^2 coefficients. Result lives in t only.
Series<Fp> h_expansion_closed_form(const PrimeModulus& mod, int64_t d,
                                   Insertion b0, Insertion binf, int order);

// Quotient-ring evaluation of the degree-d multiple-cover integral with
// three point constraints; equals 1 for every d >= 1.
Fp multiple_cover_integral(const PrimeModulus& mod, int64_t d);

// The q^0 endomorphism: cup product with the classical Steenrod power
// St(b) = -t^{p-1} b. Geometric basis [[0,0],[-t^{p-1},0]]; stable basis
// [[0,0],[h t^{p-1},0]] (which becomes mu t^p [[0,0],[1,0]] at h = mu t).
Endo2<Fp> classical_steenrod_term(const PrimeModulus& mod, Basis basis,
                                  const Window& win);

// All four pairing values (QSigma^{S1}(e_j), e_i) as q-series: classical
// part at q^0 plus h * bracket_d * q^d for d >= 1. Index [i][j]: i tags the
// output insertion (0 = 1, 1 = b), j the input insertion.
std::array<std::array<Series<Fp>, 2>, 2> pairing_values(const PrimeModulus& mod,
                                                        const Window& win);

// The endomorphism matrix of QSigma_b^{S1} on the basis (1, b): inverse
// Poincare pairing applied to the pairing values.
Endo2<Fp> qsigma_matrix(const PrimeModulus& mod, const Window& win);

} // namespace qst
