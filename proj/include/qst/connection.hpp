#pragma once

#include <vector>

#include "qst/endo.hpp"
#include "qst/rational.hpp"

namespace qst {

// Matrix of quantum multiplication by the fiber class b on (1, b), the
// endomorphism part of the quantum connection tq d/dq + b*. With
// Q = q/(1-q):
//   geometric basis: [[0, h^2 Q], [1, -2 h Q]]
//   stable basis:    -h [[Q, Q], [1 + Q, Q]]
// `one` fixes the scalar ring (and the modulus in characteristic p).
template <class K>
Endo2<K> quantum_product_b(const Window& w, Basis basis, const K& one) {
    Endo2<K> r(w, basis);
    Series<K> geo = novikov_geometric(w, one); // 1/(1-q)
    Series<K> unit = Series<K>::monomial(w, Monomial{}, one);
    Series<K> Q = geo - unit;                  // q/(1-q)
    if (basis == Basis::geometric) {
        r(0, 1) = Q.shifted(Monomial{0, 0, 2, 0}, one);
        r(1, 0) = unit;
        r(1, 1) = Q.shifted(Monomial{0, 0, 1, 0}, scalar_from_int(one, -2));
    } else {
        K neg = scalar_from_int(one, -1);
        Monomial hm{0, 0, 1, 0};
        r(0, 0) = Q.shifted(hm, neg);
        r(0, 1) = Q.shifted(hm, neg);
        r(1, 0) = geo.shifted(hm, neg); // 1 + Q = 1/(1-q)
        r(1, 1) = Q.shifted(hm, neg);
    }
    return r;
}

// tq d/dq (m) - [B, m] where B is the quantum product matrix in the basis
// of m. Vanishes exactly on covariantly constant endomorphisms.
template <class K>
Endo2<K> covariant_constancy_defect(const Endo2<K>& m, const K& one) {
    Window w = m(0, 0).win;
    if (w.q_max < 2)
        throw TruncationTooShallow(
            "covariant constancy needs at least two Novikov orders");
    Endo2<K> b = quantum_product_b(w, m.basis, one);
    return tq_dq(m) - commutator(b, m);
}

// Conjugate a geometric-basis endomorphism into the stable basis
// (w1, w2) = (b - h, b): W = [[-h, 0], [1, 1]], result W^{-1} m W.
Endo2<Fp> to_stable_basis(const Endo2<Fp>& m);

// Inverse Poincare pairing applied to the pairing values
// g[i][j] = (QSigma(e_j), e_i): the matrix [[0, h], [h, -2]] g, which is the
// endomorphism matrix of QSigma on (1, b).
Endo2<Fp> pairing_to_matrix(const std::array<std::array<Series<Fp>, 2>, 2>& g,
                            const Window& w);

// Degree-by-degree solution of the characteristic-0 flatness recursion
//   t k Sigma^(k) - [N, Sigma^(k)] = sum_{j<k} [B^(k-j), Sigma^(j)],
// seed Sigma^(0) = -N, where N = [[0,0],[1,0]] and B^(m) = [[0,h^2],[0,-2h]]
// for m >= 1. Returns Sigma^(0..k_max) with q cleared.
std::vector<Endo2<Rat>> char0_recursion(int k_max, const Window& w);

// The same recursion run directly in F_p. Throws NonInvertibleOrder(k) at
// the first order divisible by p, where t k is no longer invertible.
std::vector<Endo2<Fp>> char0_recursion_mod_p(const PrimeModulus& mod, int k_max,
                                             const Window& w);

// Solve the flatness equation for a normalized endomorphism
// [[u, b], [c, 0]] given the p-divisible part of its lower-left entry
// (c_prime, supported on powers q^{pk}). For p-divisible q-degrees the
// equations are degenerate: the coefficient comes from c_prime and the
// remaining equation must hold on its own, otherwise InconsistentSystem.
Endo2<Fp> modp_flat_solver(const PrimeModulus& mod, const Series<Fp>& c_prime,
                           const Window& w);

// Coordinates of a flat endomorphism in the rank-2 module over F_p[[q^p]]
// generated by the identity and the normalized quantum Steenrod matrix:
// sigma = f1 id + f2 qsigma. Throws NotFlat if sigma is outside the module.
struct Rank2Decomposition {
    Series<Fp> f1;
    Series<Fp> f2;
};

Rank2Decomposition rank2_decompose(const Endo2<Fp>& sigma,
                                   const Endo2<Fp>& qsigma);

} // namespace qst
