#include "qst/engine.hpp"

#include <vector>

#include "qst/connection.hpp"

namespace qst {

namespace {

// internal window for x-adic work in degree d; generous t floor so that no
// intermediate term of a homogeneous computation gets dropped
Window bracket_window(const PrimeModulus& mod, const DegreeSplit& s, int h_max,
                      int x_max) {
    Window w;
    w.q_max = 0;
    w.x_max = x_max;
    w.h_max = h_max;
    w.h_min = 0;
    w.t_min = -static_cast<int>((mod.p - 1) * (2 * s.alpha + 1) + x_max +
                                2 * s.d + 2 * mod.p + 8);
    return w;
}

Series<Fp> linear_x(const Window& w, const Fp& tcoef, const Fp& hcoef,
                    const PrimeModulus& mod) {
    // x + tcoef * t + hcoef * h
    Series<Fp> s(w);
    s.add_term(Monomial{0, 0, 0, 1}, Fp{1, mod});
    s.add_term(Monomial{0, 1, 0, 0}, tcoef);
    s.add_term(Monomial{0, 0, 1, 0}, hcoef);
    return s;
}

// (x^{p-1} - t^{p-1}) as an x-polynomial
Series<Fp> frobenius_factor(const Window& w, const PrimeModulus& mod) {
    Series<Fp> s(w);
    s.add_term(Monomial{0, 0, 0, static_cast<int>(mod.p - 1)}, Fp{1, mod});
    s.add_term(Monomial{0, static_cast<int>(mod.p - 1), 0, 0}, Fp{-1, mod});
    return s;
}

Series<Fp> c0inf_at(const Window& w, const PrimeModulus& mod, int64_t d,
                    int64_t ell, Insertion b0, Insertion binf) {
    // c_{0,infty}(x + ell t, t)
    Series<Fp> H = linear_x(w, Fp{ell, mod}, Fp{0, mod}, mod);
    Series<Fp> Hd = linear_x(w, Fp{ell - d, mod}, Fp{0, mod}, mod);
    if (b0 == Insertion::one && binf == Insertion::one) {
        Series<Fp> one(w);
        one.add_term(Monomial{}, Fp{1, mod});
        return one;
    }
    if (b0 == Insertion::b && binf == Insertion::one) return Hd;
    if (b0 == Insertion::one && binf == Insertion::b) return H;
    return H * Hd;
}

Series<Fp> c_dl_in_window(const PrimeModulus& mod, const DegreeSplit& s,
                          int64_t ell, Insertion b0, Insertion binf,
                          const Window& w) {
    Series<Fp> frob = frobenius_factor(w, mod);
    Series<Fp> acc(w);
    if (s.alpha == 0) {
        acc = frob; // exponent 1 - 2 alpha = 1
    } else {
        // negative exponent 1 - 2 alpha: invert frob^{2 alpha - 1} x-adically
        Series<Fp> pw(w);
        pw.add_term(Monomial{}, Fp{1, mod});
        for (int64_t i = 0; i < 2 * s.alpha - 1; ++i) pw *= frob;
        acc = series_inv_unit(pw);
    }
    acc *= c0inf_at(w, mod, s.d, ell, b0, binf);
    for (int64_t k = 1; k < s.d; ++k) {
        Series<Fp> f = linear_x(w, Fp{ell - k, mod}, Fp{-1, mod}, mod);
        acc *= f * f;
    }
    return acc;
}

} // namespace

Series<Fp> incidence_factor(Insertion b0, Insertion binf, int64_t d,
                            const PrimeModulus& mod) {
    Window w;
    w.q_max = 0;
    w.x_max = 2;
    w.h_max = 0;
    w.h_min = 0;
    w.t_min = 0;
    return c0inf_at(w, mod, d, 0, b0, binf);
}

Series<Fp> obs_euler(int64_t d, bool with_h, const PrimeModulus& mod) {
    if (d < 1) throw DomainError("obs_euler: degree must be >= 1");
    Window w;
    w.q_max = 0;
    w.x_max = static_cast<int>(2 * (d - 1));
    w.h_max = with_h ? static_cast<int>(2 * (d - 1)) : 0;
    w.h_min = 0;
    w.t_min = 0;
    Series<Fp> acc(w);
    acc.add_term(Monomial{}, Fp{1, mod});
    for (int64_t k = 1; k < d; ++k) {
        Series<Fp> f = linear_x(w, Fp{-k, mod}, with_h ? Fp{-1, mod} : Fp{0, mod}, mod);
        acc *= f * f;
    }
    return acc;
}

Series<Fp> c_dl(const PrimeModulus& mod, const DegreeSplit& s, int64_t ell,
                Insertion b0, Insertion binf, int x_max) {
    if (ell < 0 || ell >= mod.p) throw DomainError("c_dl: need 0 <= ell < p");
    Window w = bracket_window(mod, s, static_cast<int>(2 * s.d), x_max);
    return c_dl_in_window(mod, s, ell, b0, binf, w);
}

Series<Fp> localization_bracket(const PrimeModulus& mod, int64_t d,
                                Insertion b0, Insertion binf, int h_max) {
    DegreeSplit s(mod, d);
    int x_max = static_cast<int>(2 * s.alpha + 4);
    Window w = bracket_window(mod, s, h_max, x_max);
    Series<Fp> total(w);
    for (int64_t ell = 0; ell < mod.p; ++ell) {
        if (ell > s.beta && s.alpha == 0) continue; // empty fixed component
        int extract = static_cast<int>(ell <= s.beta ? 2 * s.alpha : 2 * s.alpha - 2);
        // h exponents only grow under the products below, so the restricted
        // h window is an exact truncation
        Series<Fp> num = c_dl_in_window(mod, s, ell, b0, binf, w);
        std::vector<std::pair<Fp, int>> den;
        if (ell <= s.beta) {
            for (int64_t j = 1; j <= ell; ++j) den.emplace_back(Fp{j, mod}, 2);
            for (int64_t j = 1; j <= s.beta - ell; ++j) den.emplace_back(Fp{-j, mod}, 2);
        } else {
            for (int64_t j = 0; j <= s.beta; ++j) den.emplace_back(Fp{ell - j, mod}, 2);
        }
        total += coeff_x(FactoredRationalFn(num, den), extract);
    }
    return total;
}

Series<Fp> structure_constant_s1(const PrimeModulus& mod, int64_t d,
                                 Insertion b0, Insertion binf, int h_max) {
    Series<Fp> br = localization_bracket(mod, d, b0, binf, h_max);
    Window w = br.win;
    w.h_max += 1; // the overall h prefactor raises every exponent by one
    Series<Fp> r(w);
    for (const auto& [m, c] : br.terms)
        r.add_term(Monomial{m.q, m.t, m.h + 1, m.x}, c);
    return r;
}

Series<Fp> structure_constant_noneq(const PrimeModulus& mod, int64_t d,
                                    Insertion b0, Insertion binf) {
    return localization_bracket(mod, d, b0, binf, 0).slice_h(0);
}

Series<Fp> noneq_closed_form(const PrimeModulus& mod, int64_t d,
                             Insertion b0, Insertion binf) {
    Window w;
    w.q_max = 0;
    w.x_max = 0;
    w.h_max = 0;
    w.h_min = 0;
    w.t_min = 0;
    Series<Fp> r(w);
    Fp dd{d, mod};
    if (b0 == Insertion::one && binf == Insertion::b) {
        r.add_term(Monomial{0, static_cast<int>(mod.p - 2), 0, 0}, -pow(dd, mod.p - 2));
    } else if (b0 == Insertion::b && binf == Insertion::b) {
        if (d % mod.p == 0)
            r.add_term(Monomial{0, static_cast<int>(mod.p - 1), 0, 0}, Fp{-1, mod});
    } else if (b0 == Insertion::one && binf == Insertion::one) {
        Fp two{2, mod};
        r.add_term(Monomial{0, static_cast<int>(mod.p - 3), 0, 0}, -(two * pow(dd, mod.p - 3)));
    } else {
        r.add_term(Monomial{0, static_cast<int>(mod.p - 2), 0, 0}, pow(dd, mod.p - 2));
    }
    return r;
}

Series<Fp> integral_quotient_ring(const PrimeModulus& mod, int64_t d,
                                  Insertion b0, Insertion binf, int h_max) {
    if (d < 1) throw DomainError("integral_quotient_ring: degree must be >= 1");
    Window w;
    w.q_max = 0;
    w.x_max = 0;
    w.h_max = static_cast<int>(2 * d);
    w.h_min = 0;
    w.t_min = 0;

    // polynomials in H as coefficient vectors over F_p[t, h]
    using Poly = std::vector<Series<Fp>>;
    auto lin = [&](int64_t tc, int64_t hc) {
        // H + tc*t + hc*h
        Series<Fp> c0(w);
        c0.add_term(Monomial{0, 1, 0, 0}, Fp{tc, mod});
        c0.add_term(Monomial{0, 0, 1, 0}, Fp{hc, mod});
        Series<Fp> c1(w);
        c1.add_term(Monomial{}, Fp{1, mod});
        return Poly{c0, c1};
    };
    auto mul = [&](const Poly& a, const Poly& b) {
        Poly r(a.size() + b.size() - 1, Series<Fp>(w));
        for (size_t i = 0; i < a.size(); ++i)
            for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
        return r;
    };

    Poly num{[&] {
        Series<Fp> one(w);
        one.add_term(Monomial{}, Fp{1, mod});
        return one;
    }()};
    // IC Euler class: H (H - t) ... (H - (p-1)t) * c_{0,infty}(H, t)
    for (int64_t k = 0; k < mod.p; ++k) num = mul(num, lin(-k, 0));
    switch ((b0 == Insertion::b ? 2 : 0) + (binf == Insertion::b ? 1 : 0)) {
        case 0: break;                                  // 1
        case 1: num = mul(num, lin(0, 0)); break;       // H
        case 2: num = mul(num, lin(-d, 0)); break;      // H - dt
        case 3: num = mul(num, mul(lin(0, 0), lin(-d, 0))); break;
    }
    // Obs Euler class
    for (int64_t k = 1; k < d; ++k) {
        Poly f = lin(-k, -1);
        num = mul(num, mul(f, f));
    }
    // relation prod_{k=0}^{d} (H - kt)^2, monic of degree 2d+2
    Poly rel{[&] {
        Series<Fp> one(w);
        one.add_term(Monomial{}, Fp{1, mod});
        return one;
    }()};
    for (int64_t k = 0; k <= d; ++k) {
        Poly f = lin(-k, 0);
        rel = mul(rel, mul(f, f));
    }
    size_t D = rel.size() - 1;
    while (num.size() > D) {
        Series<Fp> top = num.back();
        if (!top.is_zero()) {
            size_t base = num.size() - 1 - D;
            for (size_t i = 0; i < D; ++i) num[base + i] -= rel[i] * top;
        }
        num.pop_back();
    }
    size_t want = static_cast<size_t>(2 * d + 1);
    Series<Fp> r = want < num.size() ? num[want] : Series<Fp>(w);
    // restrict to the requested h range
    Window out = w;
    out.h_max = h_max;
    return r.truncated(out);
}

Series<Fp> h_expansion_closed_form(const PrimeModulus& mod, int64_t d,
                                   Insertion b0, Insertion binf, int order) {
    if (order < 0 || order > 2)
        throw DomainError("h_expansion_closed_form: order must be 0, 1 or 2");
    DegreeSplit s(mod, d);
    Window w;
    w.q_max = 0;
    w.x_max = 6;
    w.h_max = 0;
    w.h_min = 0;
    w.t_min = -static_cast<int>(mod.p + 8);
    Series<Fp> out(w);
    if (order == 0) return out; // non-classical h^0 content vanishes

    auto cpoly = [&](int64_t shift) { return c0inf_at(w, mod, d, shift, b0, binf); };
    auto cx = [&](int64_t shift, int k) { return cpoly(shift).slice_x(k); };

    if (order == 1) {
        if (s.beta != 0) {
            Fp sc = -inv(Fp{s.beta * s.beta, mod});
            Monomial tp3{0, static_cast<int>(mod.p - 3), 0, 0};
            out += (cx(s.beta, 0) + cx(0, 0)).shifted(tp3, sc);
        } else {
            // (x^2 : (x^{p-1} - t^{p-1}) c(x, t)); the x^{p-1} term matters
            // exactly when p = 3
            Series<Fp> q = frobenius_factor(w, mod) * cpoly(0);
            out += q.slice_x(2);
        }
        return out;
    }

    // order == 2
    if (s.beta != 0) {
        Fp b2inv = inv(Fp{s.beta * s.beta, mod});
        Fp b3inv = inv(Fp{s.beta * s.beta % mod.p * s.beta, mod});
        Monomial tp4{0, static_cast<int>(mod.p - 4), 0, 0};
        Monomial tp3{0, static_cast<int>(mod.p - 3), 0, 0};
        for (int64_t m = 1; m < d; ++m) {
            if ((m - s.beta) % mod.p != 0)
                out += cx(s.beta, 0).shifted(
                    tp4, Fp{2, mod} * inv(Fp{s.beta - m, mod}) * b2inv);
            if (m % mod.p != 0)
                out += cx(0, 0).shifted(tp4, Fp{-2, mod} * inv(Fp{m, mod}) * b2inv);
        }
        Fp twoAlpha{2 * s.alpha, mod};
        // character-beta component: + 2a t^{p-4} (x^1 : (t/b^2 - 2x/b^3) c(x + bt, t))
        out += cx(s.beta, 1).shifted(tp3, twoAlpha * b2inv);
        out += cx(s.beta, 0).shifted(tp4, twoAlpha * Fp{-2, mod} * b3inv);
        // character-0 component: + 2a t^{p-4} (x^1 : (t/b^2 + 2x/b^3) c(x, t))
        out += cx(0, 1).shifted(tp3, twoAlpha * b2inv);
        out += cx(0, 0).shifted(tp4, twoAlpha * Fp{2, mod} * b3inv);
        return out;
    }
    // p | d
    Series<Fp> frobc = frobenius_factor(w, mod) * cpoly(0);
    for (int64_t m = 1; m < d; ++m) {
        if (m % mod.p == 0) continue;
        FactoredRationalFn f(frobc.shifted(Monomial{}, Fp{-2, mod}),
                             {{Fp{-m, mod}, 1}});
        out += coeff_x(f, 2);
    }
    out += frobc.slice_x(3).shifted(Monomial{}, Fp{-2 * (s.alpha - 1), mod});
    return out;
}

Fp multiple_cover_integral(const PrimeModulus& mod, int64_t d) {
    if (d < 1) throw DomainError("multiple_cover_integral: degree must be >= 1");
    Window w;
    w.q_max = 0;
    w.x_max = 0;
    w.h_max = 0;
    w.h_min = 0;
    w.t_min = 0;
    using Poly = std::vector<Series<Fp>>;
    auto lin = [&](int64_t tc) {
        Series<Fp> c0(w);
        c0.add_term(Monomial{0, 1, 0, 0}, Fp{tc, mod});
        Series<Fp> c1(w);
        c1.add_term(Monomial{}, Fp{1, mod});
        return Poly{c0, c1};
    };
    auto mul = [&](const Poly& a, const Poly& b) {
        Poly r(a.size() + b.size() - 1, Series<Fp>(w));
        for (size_t i = 0; i < a.size(); ++i)
            for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
        return r;
    };
    // numerator: Obs (h = 0) times H^3 (three point constraints)
    Poly num = mul(lin(0), mul(lin(0), lin(0)));
    for (int64_t k = 1; k < d; ++k) {
        Poly f = lin(-k);
        num = mul(num, mul(f, f));
    }
    Poly rel{[&] {
        Series<Fp> one(w);
        one.add_term(Monomial{}, Fp{1, mod});
        return one;
    }()};
    for (int64_t k = 0; k <= d; ++k) {
        Poly f = lin(-k);
        rel = mul(rel, mul(f, f));
    }
    size_t D = rel.size() - 1;
    while (num.size() > D) {
        Series<Fp> top = num.back();
        if (!top.is_zero()) {
            size_t base = num.size() - 1 - D;
            for (size_t i = 0; i < D; ++i) num[base + i] -= rel[i] * top;
        }
        num.pop_back();
    }
    size_t want = static_cast<size_t>(2 * d + 1);
    if (want >= num.size()) return Fp{0, mod};
    return num[want].coeff(Monomial{});
}

Endo2<Fp> classical_steenrod_term(const PrimeModulus& mod, Basis basis,
                                  const Window& win) {
    Endo2<Fp> r(win, basis);
    if (basis == Basis::geometric) {
        r(1, 0).add_term(Monomial{0, static_cast<int>(mod.p - 1), 0, 0}, Fp{-1, mod});
    } else {
        r(1, 0).add_term(Monomial{0, static_cast<int>(mod.p - 1), 1, 0}, Fp{1, mod});
    }
    return r;
}

std::array<std::array<Series<Fp>, 2>, 2> pairing_values(const PrimeModulus& mod,
                                                        const Window& win) {
    std::array<std::array<Series<Fp>, 2>, 2> g{
        {{Series<Fp>(win), Series<Fp>(win)}, {Series<Fp>(win), Series<Fp>(win)}}};
    // classical part: (St(b) cup e_j, e_i); only (1, 1) survives,
    // equal to -t^{p-1} (b, 1) = -t^{p-1} h^{-1}
    g[0][0].add_term(Monomial{0, static_cast<int>(mod.p - 1), -1, 0}, Fp{-1, mod});
    Insertion tags[2] = {Insertion::one, Insertion::b};
    for (int64_t d = 1; d <= win.q_max; ++d) {
        for (int i = 0; i < 2; ++i) {
            for (int j = 0; j < 2; ++j) {
                Series<Fp> sc =
                    structure_constant_s1(mod, d, tags[j], tags[i], win.h_max);
                g[i][j] += sc.truncated(win).shifted(
                    Monomial{static_cast<int>(d), 0, 0, 0}, Fp{1, mod});
            }
        }
    }
    return g;
}

Endo2<Fp> qsigma_matrix(const PrimeModulus& mod, const Window& win) {
    return pairing_to_matrix(pairing_values(mod, win), win);
}

} // namespace qst
