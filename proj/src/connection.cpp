#include "qst/connection.hpp"

namespace qst {

namespace {

template <class K>
Endo2<K> nilpotent_n(const Window& w, const K& one) {
    Endo2<K> n(w, Basis::geometric);
    n(1, 0).add_term(Monomial{}, one);
    return n;
}

template <class K>
Endo2<K> b_tail(const Window& w, const K& one) {
    // B^(m) for m >= 1: [[0, h^2], [0, -2h]]
    Endo2<K> b(w, Basis::geometric);
    b(0, 1).add_term(Monomial{0, 0, 2, 0}, one);
    b(1, 1).add_term(Monomial{0, 0, 1, 0}, scalar_from_int(one, -2));
    return b;
}

template <class K>
Endo2<K> shift_all(const Endo2<K>& m, const Monomial& s, const K& c) {
    Endo2<K> r;
    r.basis = m.basis;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) r(i, j) = m(i, j).shifted(s, c);
    return r;
}

// shared body of the two recursion entry points; inv_order(k) supplies 1/k
// in the scalar ring or throws
template <class K, class InvOrder>
std::vector<Endo2<K>> recursion_impl(int k_max, const Window& w, const K& one,
                                     InvOrder inv_order) {
    if (k_max < 0) throw DomainError("recursion order must be >= 0");
    Endo2<K> N = nilpotent_n(w, one);
    Endo2<K> B1 = b_tail(w, one);
    std::vector<Endo2<K>> sigma;
    sigma.reserve(static_cast<size_t>(k_max) + 1);
    sigma.push_back(shift_all(N, Monomial{}, scalar_from_int(one, -1)));
    for (int k = 1; k <= k_max; ++k) {
        Endo2<K> rhs(w, Basis::geometric);
        for (int j = 0; j < k; ++j) rhs = rhs + commutator(B1, sigma[static_cast<size_t>(j)]);
        // invert t k - ad_N by the finite Neumann series (ad_N^3 = 0)
        K kinv = inv_order(k);
        Endo2<K> cur = rhs;
        Endo2<K> sol(w, Basis::geometric);
        K scale = kinv;
        for (int i = 0; i < 3; ++i) {
            sol = sol + shift_all(cur, Monomial{0, -(i + 1), 0, 0}, scale);
            cur = commutator(N, cur);
            scale = scale * kinv;
        }
        sigma.push_back(sol);
    }
    return sigma;
}

} // namespace

Endo2<Fp> to_stable_basis(const Endo2<Fp>& m) {
    if (m.basis != Basis::geometric)
        throw RingMismatch("basis change expects a geometric-basis matrix");
    Window w = m(0, 0).win;
    w.h_min -= 1; // conjugation shifts h exponents by one in both directions
    w.h_max += 1;
    int64_t prime = 0;
    for (const auto& row : m.e)
        for (const auto& s : row)
            if (!s.terms.empty()) prime = s.terms.begin()->second.p;
    if (prime == 0) {
        Endo2<Fp> r(w, Basis::stable);
        return r;
    }
    Fp one{1, prime};
    Monomial hinv{0, 0, -1, 0};
    Monomial hpos{0, 0, 1, 0};
    Fp neg{-1, one.p};
    Endo2<Fp> r(w, Basis::stable);
    auto widen = [&](const Series<Fp>& s) { return s.truncated(w); };
    Series<Fp> m00 = widen(m(0, 0)), m01 = widen(m(0, 1));
    Series<Fp> m10 = widen(m(1, 0)), m11 = widen(m(1, 1));
    r(0, 0) = m00 - m01.shifted(hinv, one);
    r(0, 1) = m01.shifted(hinv, neg);
    r(1, 0) = m01.shifted(hinv, one) - m00 - m10.shifted(hpos, one) + m11;
    r(1, 1) = m01.shifted(hinv, one) + m11;
    return r;
}

Endo2<Fp> pairing_to_matrix(const std::array<std::array<Series<Fp>, 2>, 2>& g,
                            const Window& w) {
    int64_t prime = 0;
    for (const auto& row : g)
        for (const auto& s : row)
            if (!s.terms.empty()) prime = s.terms.begin()->second.p;
    if (prime == 0) throw DomainError("pairing_to_matrix: empty pairing table");
    Fp one{1, prime};
    Monomial hpos{0, 0, 1, 0};
    Fp m2{-2, one.p};
    Endo2<Fp> r(w, Basis::geometric);
    for (int j = 0; j < 2; ++j) {
        r(0, j) = g[1][static_cast<size_t>(j)].truncated(w).shifted(hpos, one);
        r(1, j) = g[0][static_cast<size_t>(j)].truncated(w).shifted(hpos, one) +
                  g[1][static_cast<size_t>(j)].truncated(w).scaled(m2);
    }
    return r;
}

std::vector<Endo2<Rat>> char0_recursion(int k_max, const Window& w) {
    return recursion_impl<Rat>(k_max, w, Rat(1),
                               [](int k) { return Rat(1) / k; });
}

std::vector<Endo2<Fp>> char0_recursion_mod_p(const PrimeModulus& mod, int k_max,
                                             const Window& w) {
    return recursion_impl<Fp>(k_max, w, Fp{1, mod}, [&mod](int k) {
        if (k % mod.p == 0) throw NonInvertibleOrder(k);
        return inv(Fp{k, mod});
    });
}

Endo2<Fp> modp_flat_solver(const PrimeModulus& mod, const Series<Fp>& c_prime,
                           const Window& w) {
    for (const auto& [m, coeff] : c_prime.terms) {
        if (m.q % mod.p != 0)
            throw DomainError("prescribed part must be a function of q^p");
        if (m.x != 0) throw DomainError("prescribed part must be x-free");
    }
    // internal window: deep t floor, the recursion divides by t^3 per order
    Window iw = w;
    iw.t_min = w.t_min - 3 * (w.q_max + 1);
    Fp one{1, mod}, two{2, mod};
    Monomial t1{0, 1, 0, 0}, t2{0, 2, 0, 0}, tm3{0, -3, 0, 0};
    Monomial h1{0, 0, 1, 0}, h2{0, 0, 2, 0};

    int n_max = w.q_max;
    std::vector<Series<Fp>> u, b, c;
    Series<Fp> su(iw), sb(iw), sc(iw); // prefix sums over degrees < n
    u.assign(static_cast<size_t>(n_max) + 1, Series<Fp>(iw));
    b.assign(static_cast<size_t>(n_max) + 1, Series<Fp>(iw));
    c.assign(static_cast<size_t>(n_max) + 1, Series<Fp>(iw));
    c[0] = c_prime.slice_q(0).truncated(iw);

    for (int n = 1; n <= n_max; ++n) {
        size_t k = static_cast<size_t>(n);
        su += u[k - 1];
        sb += b[k - 1];
        sc += c[k - 1];
        if (n % mod.p != 0) {
            Fp kn{n, mod};
            Series<Fp> u_known = sc.shifted(h1, two);
            Series<Fp> b_known =
                sc.shifted(h2, one) - u_known.shifted(t1, kn * inv(two));
            Series<Fp> g = b_known.shifted(t1, kn) + su.shifted(h2, one) +
                           sb.shifted(h1, Fp{-2, mod});
            c[k] = g.shifted(tm3, two * inv(pow(kn, 3)));
            u[k] = c[k].shifted(t1, kn) + u_known;
            b[k] = b_known - c[k].shifted(t2, kn * kn * inv(two));
        } else {
            u[k] = sc.shifted(h1, two);
            b[k] = sc.shifted(h2, one);
            Series<Fp> residual = su.shifted(h2, one) + sb.shifted(h1, Fp{-2, mod});
            if (!residual.is_zero())
                throw InconsistentSystem(
                    "flatness has no solution with the prescribed part at q^" +
                    std::to_string(n));
            c[k] = c_prime.slice_q(n).truncated(iw);
        }
    }

    Endo2<Fp> r(w, Basis::geometric);
    for (int n = 0; n <= n_max; ++n) {
        size_t k = static_cast<size_t>(n);
        Monomial qn{n, 0, 0, 0};
        r(0, 0) += u[k].truncated(w).shifted(qn, one);
        r(0, 1) += b[k].truncated(w).shifted(qn, one);
        r(1, 0) += c[k].truncated(w).shifted(qn, one);
    }
    return r;
}

Rank2Decomposition rank2_decompose(const Endo2<Fp>& sigma,
                                   const Endo2<Fp>& qsigma) {
    Endo2<Fp>::check_basis(sigma, qsigma);
    const Series<Fp>& cq = qsigma(1, 0);
    if (cq.terms.empty())
        throw NotFlat("reference matrix has zero lower-left entry");
    Fp one{1, cq.terms.begin()->second.p};
    Series<Fp> f2 = sigma(1, 0) * series_inv_unit(cq);
    Series<Fp> f1 =
        (sigma.trace() - f2 * qsigma.trace()).scaled(inv(Fp{2, one.p}));
    for (const auto* f : {&f1, &f2})
        for (const auto& [m, coeff] : f->terms)
            if (m.q % one.p != 0 || m.h != 0 || m.x != 0)
                throw NotFlat("coordinates are not functions of q^p");
    Window w = sigma(0, 0).win;
    Endo2<Fp> defect = sigma - identity_endo(w, sigma.basis, one).scaled(f1) -
                       qsigma.scaled(f2);
    if (!defect.is_zero())
        throw NotFlat("matrix is outside the rank-2 module");
    return Rank2Decomposition{f1, f2};
}

} // namespace qst
