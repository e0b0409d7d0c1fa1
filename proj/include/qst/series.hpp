#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <vector>

#include "qst/errors.hpp"
#include "qst/field.hpp"
#include "qst/rational.hpp"

namespace qst {

// Exponent vector of one term. q is the Novikov variable (adic, q_exp >= 0),
// t and h are equivariant parameters (Laurent), x is the localization
// variable (adic, x_exp >= 0).
struct Monomial {
    int32_t q = 0;
    int32_t t = 0;
    int32_t h = 0;
    int32_t x = 0;

    friend bool operator==(const Monomial&, const Monomial&) = default;
};

// Deterministic ordering: lexicographic on (q, h, t, x). This is the
// serialization order, fixed once for golden files.
struct MonomialOrder {
    bool operator()(const Monomial& a, const Monomial& b) const {
        if (a.q != b.q) return a.q < b.q;
        if (a.h != b.h) return a.h < b.h;
        if (a.t != b.t) return a.t < b.t;
        return a.x < b.x;
    }
};

// Truncation window. Terms outside the window are dropped on insertion;
// arithmetic on series with different windows works in the intersection.
struct Window {
    int q_max = 0;
    int h_max = 0;
    int x_max = 0;
    int t_min = 0;
    int h_min = 0;

    bool contains(const Monomial& m) const {
        return m.q >= 0 && m.q <= q_max && m.x >= 0 && m.x <= x_max &&
               m.h >= h_min && m.h <= h_max && m.t >= t_min;
    }

    static Window intersect(const Window& a, const Window& b) {
        Window w;
        w.q_max = std::min(a.q_max, b.q_max);
        w.h_max = std::min(a.h_max, b.h_max);
        w.x_max = std::min(a.x_max, b.x_max);
        w.t_min = std::max(a.t_min, b.t_min);
        w.h_min = std::max(a.h_min, b.h_min);
        return w;
    }

    // default window for the mod-p pipeline
    static Window standard(int64_t p) {
        Window w;
        w.q_max = static_cast<int>(3 * p);
        w.h_max = 4;
        w.x_max = 0;
        w.t_min = -static_cast<int>(p + 4);
        w.h_min = -2;
        return w;
    }

    friend bool operator==(const Window&, const Window&) = default;
};

// Sparse truncated series over the scalar ring K (Fp or Rat).
template <class K>
struct Series {
    using Map = std::map<Monomial, K, MonomialOrder>;
    Map terms;
    Window win;

    Series() = default;
    explicit Series(const Window& w) : win(w) {}

    static Series monomial(const Window& w, const Monomial& m, const K& c) {
        Series s(w);
        s.add_term(m, c);
        return s;
    }

    bool is_zero() const { return terms.empty(); }

    void add_term(const Monomial& m, const K& c) {
        if (qst::is_zero(c) || !win.contains(m)) return;
        auto it = terms.find(m);
        if (it == terms.end()) {
            terms.emplace(m, c);
        } else {
            it->second = it->second + c;
            if (qst::is_zero(it->second)) terms.erase(it);
        }
    }

    K coeff(const Monomial& m) const {
        auto it = terms.find(m);
        if (it == terms.end()) return K{};
        return it->second;
    }

    // re-truncate into a (usually narrower) window
    Series truncated(const Window& w) const {
        Series r(w);
        for (const auto& [m, c] : terms) r.add_term(m, c);
        return r;
    }

    friend Series operator+(const Series& a, const Series& b) {
        Series r(Window::intersect(a.win, b.win));
        for (const auto& [m, c] : a.terms) r.add_term(m, c);
        for (const auto& [m, c] : b.terms) r.add_term(m, c);
        return r;
    }
    friend Series operator-(const Series& a, const Series& b) {
        Series r(Window::intersect(a.win, b.win));
        for (const auto& [m, c] : a.terms) r.add_term(m, c);
        for (const auto& [m, c] : b.terms) r.add_term(m, -c);
        return r;
    }
    Series operator-() const {
        Series r(win);
        for (const auto& [m, c] : terms) r.terms.emplace(m, -c);
        return r;
    }
    friend Series operator*(const Series& a, const Series& b) {
        Series r(Window::intersect(a.win, b.win));
        for (const auto& [ma, ca] : a.terms) {
            for (const auto& [mb, cb] : b.terms) {
                Monomial m{ma.q + mb.q, ma.t + mb.t, ma.h + mb.h, ma.x + mb.x};
                r.add_term(m, ca * cb);
            }
        }
        return r;
    }

    Series& operator+=(const Series& b) { return *this = *this + b; }
    Series& operator-=(const Series& b) { return *this = *this - b; }
    Series& operator*=(const Series& b) { return *this = *this * b; }

    Series scaled(const K& c) const {
        Series r(win);
        if (qst::is_zero(c)) return r;
        for (const auto& [m, k] : terms) r.add_term(m, k * c);
        return r;
    }

    // multiply by a single monomial (exponent shift)
    Series shifted(const Monomial& s, const K& c) const {
        Series r(win);
        for (const auto& [m, k] : terms)
            r.add_term(Monomial{m.q + s.q, m.t + s.t, m.h + s.h, m.x + s.x}, k * c);
        return r;
    }

    // sub-series of terms with q_exp == d, with q cleared
    Series slice_q(int d) const {
        Series r(win);
        for (const auto& [m, c] : terms)
            if (m.q == d) r.add_term(Monomial{0, m.t, m.h, m.x}, c);
        return r;
    }
    // sub-series of terms with h_exp == k, with h cleared
    Series slice_h(int k) const {
        Series r(win);
        for (const auto& [m, c] : terms)
            if (m.h == k) r.add_term(Monomial{m.q, m.t, 0, m.x}, c);
        return r;
    }
    // sub-series of terms with x_exp == k, with x cleared
    Series slice_x(int k) const {
        Series r(win);
        for (const auto& [m, c] : terms)
            if (m.x == k) r.add_term(Monomial{m.q, m.t, m.h, 0}, c);
        return r;
    }

    int max_q() const {
        int d = 0;
        for (const auto& [m, c] : terms) d = std::max(d, static_cast<int>(m.q));
        return d;
    }

    friend bool operator==(const Series& a, const Series& b) {
        return a.terms == b.terms;
    }
};

template <class K>
Series<K> series_mul(const Series<K>& a, const Series<K>& b) {
    return a * b;
}

// Invert a series that is a unit for the (q, x)-adic topology: its part of
// adic degree zero must be a single Laurent monomial in t, h. Everything we
// invert in practice (1 - q, squared linear forms x + ct, powers of
// x^{p-1} - t^{p-1}) is of this shape.
template <class K>
Series<K> series_inv_unit(const Series<K>& a) {
    // split by adic degree q_exp + x_exp
    std::map<int, Series<K>> parts;
    int max_deg = a.win.q_max + a.win.x_max;
    for (const auto& [m, c] : a.terms) {
        int d = m.q + m.x;
        auto it = parts.find(d);
        if (it == parts.end()) it = parts.emplace(d, Series<K>(a.win)).first;
        it->second.add_term(m, c);
    }
    auto p0 = parts.find(0);
    if (p0 == parts.end() || p0->second.terms.size() != 1)
        throw NotAUnit("series_inv_unit: adic constant term is not a single monomial");
    const auto& [m0, c0] = *p0->second.terms.begin();
    Monomial m0inv{0, -m0.t, -m0.h, 0};
    K c0inv = scalar_inv(c0);

    std::vector<Series<K>> r;
    r.reserve(max_deg + 1);
    r.push_back(Series<K>::monomial(a.win, m0inv, c0inv));
    for (int k = 1; k <= max_deg; ++k) {
        Series<K> acc(a.win);
        for (int j = 1; j <= k; ++j) {
            auto it = parts.find(j);
            if (it != parts.end()) acc += it->second * r[static_cast<size_t>(k - j)];
        }
        r.push_back((-acc).shifted(m0inv, c0inv));
    }
    Series<K> out(a.win);
    for (const auto& s : r) out += s;
    return out;
}

// Substitute h -> mu * t (every monomial t^a h^b becomes mu^b t^{a+b}).
// Negative h exponents use the inverse of mu and therefore require mu != 0.
Series<Fp> substitute_h(const Series<Fp>& s, const Fp& mu);

// True iff every stored monomial has total equivariant weight
// t_exp + h_exp + x_exp equal to `weight` (q carries weight 0).
template <class K>
bool homogeneity_check(const Series<K>& s, int weight) {
    for (const auto& [m, c] : s.terms)
        if (m.t + m.h + m.x != weight) return false;
    return true;
}

// q d/dq followed by multiplication by t; the derivative part of the
// quantum connection. Works in both scalar modes (the q-degree is reduced
// into the coefficient ring, so mod p the degree p terms die).
template <class K>
Series<K> tq_dq(const Series<K>& s) {
    Series<K> r(s.win);
    for (const auto& [m, c] : s.terms) {
        if (m.q == 0) continue;
        K f = scalar_from_int(c, m.q);
        r.add_term(Monomial{m.q, m.t + 1, m.h, m.x}, c * f);
    }
    return r;
}

// geometric series 1/(1-q) up to the window
template <class K>
Series<K> novikov_geometric(const Window& w, const K& one) {
    Series<K> r(w);
    for (int d = 0; d <= w.q_max; ++d) r.add_term(Monomial{d, 0, 0, 0}, one);
    return r;
}

} // namespace qst
