#pragma once

#include <array>

#include "qst/series.hpp"

namespace qst {

enum class Basis { geometric, stable };

inline const char* basis_name(Basis b) {
    return b == Basis::geometric ? "geometric" : "stable";
}

// 2x2 matrix of graded series: connection endomorphism parts, Steenrod
// endomorphisms, classical terms. The basis tag is fixed at construction;
// arithmetic across bases is an error.
template <class K>
struct Endo2 {
    std::array<std::array<Series<K>, 2>, 2> e;
    Basis basis = Basis::geometric;

    Endo2() = default;
    Endo2(const Window& w, Basis b) : basis(b) {
        for (auto& row : e)
            for (auto& s : row) s = Series<K>(w);
    }

    Series<K>& operator()(int i, int j) { return e[static_cast<size_t>(i)][static_cast<size_t>(j)]; }
    const Series<K>& operator()(int i, int j) const {
        return e[static_cast<size_t>(i)][static_cast<size_t>(j)];
    }

    bool is_zero() const {
        for (const auto& row : e)
            for (const auto& s : row)
                if (!s.is_zero()) return false;
        return true;
    }

    static void check_basis(const Endo2& a, const Endo2& b) {
        if (a.basis != b.basis)
            throw RingMismatch("matrix arithmetic across different bases");
    }

    friend Endo2 operator+(const Endo2& a, const Endo2& b) {
        check_basis(a, b);
        Endo2 r;
        r.basis = a.basis;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) r(i, j) = a(i, j) + b(i, j);
        return r;
    }
    friend Endo2 operator-(const Endo2& a, const Endo2& b) {
        check_basis(a, b);
        Endo2 r;
        r.basis = a.basis;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) r(i, j) = a(i, j) - b(i, j);
        return r;
    }
    friend Endo2 operator*(const Endo2& a, const Endo2& b) {
        check_basis(a, b);
        Endo2 r;
        r.basis = a.basis;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                r(i, j) = a(i, 0) * b(0, j) + a(i, 1) * b(1, j);
        return r;
    }

    Endo2 scaled(const Series<K>& s) const {
        Endo2 r;
        r.basis = basis;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) r(i, j) = e[i][j] * s;
        return r;
    }

    Endo2 slice_q(int d) const {
        Endo2 r;
        r.basis = basis;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) r(i, j) = e[i][j].slice_q(d);
        return r;
    }

    Series<K> trace() const { return e[0][0] + e[1][1]; }

    friend bool operator==(const Endo2& a, const Endo2& b) {
        return a.basis == b.basis && a.e == b.e;
    }
};

template <class K>
Endo2<K> commutator(const Endo2<K>& a, const Endo2<K>& b) {
    return a * b - b * a;
}

template <class K>
Endo2<K> tq_dq(const Endo2<K>& m) {
    Endo2<K> r;
    r.basis = m.basis;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) r(i, j) = tq_dq(m(i, j));
    return r;
}

template <class K>
Endo2<K> identity_endo(const Window& w, Basis basis, const K& one) {
    Endo2<K> r(w, basis);
    r(0, 0).add_term(Monomial{}, one);
    r(1, 1).add_term(Monomial{}, one);
    return r;
}

} // namespace qst
