#include "qst/flat_sections.hpp"

#include <algorithm>

#include "qst/errors.hpp"

namespace qst {

BiPoly bipoly_add(const BiPoly& a, const BiPoly& b) {
    BiPoly r = a;
    for (const auto& [k, c] : b.terms) r.add(k.first, k.second, c);
    return r;
}

BiPoly bipoly_mul(const BiPoly& a, const BiPoly& b) {
    BiPoly r;
    for (const auto& [ka, ca] : a.terms)
        for (const auto& [kb, cb] : b.terms)
            r.add(ka.first + kb.first, ka.second + kb.second, ca * cb);
    return r;
}

BiPoly bipoly_scale(const BiPoly& a, const Fp& c) {
    BiPoly r;
    for (const auto& [k, v] : a.terms) r.add(k.first, k.second, v * c);
    return r;
}

BiPoly bipoly_euler(const BiPoly& a, int var, const PrimeModulus& mod) {
    BiPoly r;
    for (const auto& [k, v] : a.terms) {
        int e = var == 1 ? k.first : k.second;
        r.add(k.first, k.second, v * Fp{e, mod});
    }
    return r;
}

bool bipoly_homogeneous(const BiPoly& a, int deg) {
    for (const auto& [k, v] : a.terms)
        if (k.first + k.second != deg) return false;
    return true;
}

std::vector<BiPoly> master_polynomial(const PrimeModulus& mod, int64_t m) {
    if (m < 0 || m >= mod.p)
        throw DomainError("master_polynomial: need 0 <= m < p");
    int64_t e = mod.p - m;
    // coefficient list in s; start from s^m
    std::vector<BiPoly> phi(static_cast<size_t>(m) + 1);
    phi.back().add(0, 0, Fp{1, mod});
    for (int var = 1; var <= 2; ++var) {
        for (int64_t rep = 0; rep < e; ++rep) {
            // multiply by (s - z_var)
            std::vector<BiPoly> next(phi.size() + 1);
            for (size_t i = 0; i < phi.size(); ++i) {
                next[i + 1] = bipoly_add(next[i + 1], phi[i]);
                BiPoly z;
                z.add(var == 1 ? 1 : 0, var == 2 ? 1 : 0, Fp{-1, mod});
                next[i] = bipoly_add(next[i], bipoly_mul(phi[i], z));
            }
            phi = std::move(next);
        }
    }
    return phi;
}

namespace {

// exact division of an s-polynomial by (s - z_var); synthetic division from
// the top, remainder must vanish
std::vector<BiPoly> divide_by_root(const std::vector<BiPoly>& poly, int var,
                                   const PrimeModulus& mod) {
    if (poly.empty()) return {};
    std::vector<BiPoly> quot(poly.size() - 1);
    BiPoly run; // running coefficient, equals the remainder at the end
    BiPoly z;
    z.add(var == 1 ? 1 : 0, var == 2 ? 1 : 0, Fp{1, mod});
    for (size_t i = poly.size(); i-- > 0;) {
        run = bipoly_add(bipoly_mul(run, z), poly[i]);
        if (i > 0)
            quot[i - 1] = run;
        else if (!run.is_zero())
            throw DivisionNotExact("polynomial has no root at z_" +
                                   std::to_string(var));
    }
    return quot;
}

} // namespace

std::array<BiPoly, 2> psi_coefficients(const PrimeModulus& mod, int64_t m) {
    std::vector<BiPoly> phi = master_polynomial(mod, m);
    std::array<BiPoly, 2> psi;
    for (int i = 0; i < 2; ++i) {
        std::vector<BiPoly> q = divide_by_root(phi, i + 1, mod);
        size_t want = static_cast<size_t>(mod.p - 1);
        psi[static_cast<size_t>(i)] = want < q.size() ? q[want] : BiPoly{};
    }
    return psi;
}

FlatSection arithmetic_flat_section(const PrimeModulus& mod, int64_t m) {
    std::array<BiPoly, 2> psi = psi_coefficients(mod, m);
    FlatSection sec;
    sec.p = mod.p;
    sec.m = m;
    int64_t e = mod.p - m;
    for (int i = 0; i < 2; ++i) {
        // z1^{-(p-m)} Psi_i: homogeneity turns z1^j z2^k into q^k
        std::vector<Fp> poly(static_cast<size_t>(e) + 1, Fp{0, mod});
        for (const auto& [key, c] : psi[static_cast<size_t>(i)].terms) {
            if (key.first + key.second != e)
                throw DomainError("psi coefficient is not homogeneous");
            poly[static_cast<size_t>(key.second)] = c;
        }
        // multiply by (1-q)^{2m}
        for (int64_t rep = 0; rep < 2 * m; ++rep) {
            std::vector<Fp> next(poly.size() + 1, Fp{0, mod});
            for (size_t j = 0; j < poly.size(); ++j) {
                next[j] += poly[j];
                next[j + 1] -= poly[j];
            }
            poly = std::move(next);
        }
        sec.entries[static_cast<size_t>(i)] = std::move(poly);
    }
    return sec;
}

namespace {

using QPoly = std::vector<Fp>;

QPoly padded(const QPoly& a, size_t n, const PrimeModulus& mod) {
    QPoly r = a;
    r.resize(std::max(n, a.size()), Fp{0, mod});
    return r;
}

bool all_zero(const QPoly& a) {
    for (const auto& c : a)
        if (!c.is_zero()) return false;
    return true;
}

QPoly qpoly_sub(const QPoly& a, const QPoly& b, const PrimeModulus& mod) {
    size_t n = std::max(a.size(), b.size());
    QPoly r = padded(a, n, mod);
    QPoly bb = padded(b, n, mod);
    for (size_t i = 0; i < n; ++i) r[i] -= bb[i];
    return r;
}

} // namespace

bool flat_section_qde_check(const FlatSection& sec) {
    PrimeModulus mod(sec.p);
    Fp mu{sec.m, mod};
    size_t n = sec.entries[0].size() + 2;
    QPoly a = padded(sec.entries[0], n, mod);
    QPoly b = padded(sec.entries[1], n, mod);
    auto qd = [&](const QPoly& u) {
        QPoly r(u.size(), Fp{0, mod});
        for (size_t i = 0; i < u.size(); ++i) r[i] = u[i] * Fp{static_cast<int64_t>(i), mod};
        return r;
    };
    auto onemq = [&](const QPoly& u) {
        QPoly r(u.size() + 1, Fp{0, mod});
        for (size_t i = 0; i < u.size(); ++i) {
            r[i] += u[i];
            r[i + 1] -= u[i];
        }
        return r;
    };
    auto shift = [&](const QPoly& u) {
        QPoly r(u.size() + 1, Fp{0, mod});
        for (size_t i = 0; i < u.size(); ++i) r[i + 1] = u[i];
        return r;
    };
    auto scale = [&](const QPoly& u, const Fp& c) {
        QPoly r = u;
        for (auto& x : r) x *= c;
        return r;
    };
    QPoly s(n, Fp{0, mod});
    for (size_t i = 0; i < n; ++i) s[i] = a[i] + b[i];
    // (1-q) q I' = -mu ((1-q) N I + q E I); N I = (0, a), E I = (s, s)
    QPoly lhs0 = onemq(qd(a));
    QPoly lhs1 = onemq(qd(b));
    QPoly rhs0 = scale(shift(s), -mu);
    QPoly rhs1 = qpoly_sub(QPoly{}, onemq(scale(a, mu)), mod);
    rhs1 = qpoly_sub(rhs1, shift(scale(s, mu)), mod);
    return all_zero(qpoly_sub(lhs0, rhs0, mod)) &&
           all_zero(qpoly_sub(lhs1, rhs1, mod));
}

std::array<std::array<Fp, 2>, 2> sigma_d_specialized(const PrimeModulus& mod,
                                                     const Fp& mu, int64_t d) {
    if (d < 0 || d > mod.p)
        throw DomainError("sigma_d_specialized: need 0 <= d <= p");
    std::array<std::array<Fp, 2>, 2> r{
        {{Fp{0, mod}, Fp{0, mod}}, {Fp{0, mod}, Fp{0, mod}}}};
    if (d == 0) {
        r[1][0] = mu;
        return r;
    }
    if (d == mod.p) {
        r[0][1] = mu;
        r[1][0] = mu;
        return r;
    }
    auto A = [&](int64_t l, int64_t dd) {
        // binom(mu + dd - l - 1, dd) binom(dd, l), zero for l < 0 or l > dd
        if (l < 0 || l > dd || dd < 0) return Fp{0, mod};
        return binom_field(mu + Fp{dd - l - 1, mod}, dd) *
               binom_lucas(dd, l, mod);
    };
    auto B = [&](int64_t l, int64_t dd) {
        if (l < 0 || l > dd || dd < 0) return Fp{0, mod};
        return binom_field(mu + Fp{dd - l, mod}, dd) * binom_lucas(dd, l, mod);
    };
    for (int64_t l = 0; l <= d; ++l) {
        Fp am = A(l - 1, d - 1);
        r[0][0] -= am * B(l, d);
        r[0][1] -= am * B(l, d - 1);
        r[1][0] += A(l, d) * B(l, d);
        r[1][1] += A(l, d) * B(l, d - 1);
    }
    for (auto& row : r)
        for (auto& x : row) x *= mu;
    return r;
}

bool annihilation_check(const PrimeModulus& mod, int64_t m) {
    FlatSection sec = arithmetic_flat_section(mod, m);
    Fp mu{m, mod};
    size_t n = sec.entries[0].size() + 2 * static_cast<size_t>(mod.p) + 2;
    std::array<QPoly, 2> I = {padded(sec.entries[0], n, mod),
                              padded(sec.entries[1], n, mod)};
    auto apply = [&](const std::array<std::array<Fp, 2>, 2>& M, int64_t qshift) {
        std::array<QPoly, 2> r = {QPoly(n, Fp{0, mod}), QPoly(n, Fp{0, mod})};
        for (int row = 0; row < 2; ++row)
            for (size_t i = 0; i + static_cast<size_t>(qshift) < n; ++i)
                r[static_cast<size_t>(row)][i + static_cast<size_t>(qshift)] =
                    M[static_cast<size_t>(row)][0] * I[0][i] +
                    M[static_cast<size_t>(row)][1] * I[1][i];
        return r;
    };
    auto s0 = sigma_d_specialized(mod, mu, 0);
    auto sp = sigma_d_specialized(mod, mu, mod.p);
    std::array<std::array<Fp, 2>, 2> diff;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            diff[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                s0[static_cast<size_t>(i)][static_cast<size_t>(j)] -
                sp[static_cast<size_t>(i)][static_cast<size_t>(j)];
    std::array<QPoly, 2> lhs = apply(diff, mod.p);
    std::array<QPoly, 2> rhs = {QPoly(n, Fp{0, mod}), QPoly(n, Fp{0, mod})};
    for (int64_t d = 0; d < mod.p; ++d) {
        auto part = apply(sigma_d_specialized(mod, mu, d), d);
        for (int row = 0; row < 2; ++row)
            for (size_t i = 0; i < n; ++i)
                rhs[static_cast<size_t>(row)][i] += part[static_cast<size_t>(row)][i];
    }
    return all_zero(qpoly_sub(lhs[0], rhs[0], mod)) &&
           all_zero(qpoly_sub(lhs[1], rhs[1], mod));
}

Fp hypergeometric_structure_constant(const PrimeModulus& mod, const Fp& mu,
                                     int64_t d) {
    if (d < 0 || d >= mod.p)
        throw DomainError("hypergeometric_structure_constant: need 0 <= d < p");
    Fp acc{0, mod};
    for (int64_t l = 0; l <= d; ++l) {
        Fp bl = binom_lucas(d, l, mod);
        acc += binom_field(mu + Fp{d - l - 1, mod}, d) *
               binom_field(mu + Fp{d - l, mod}, d) * bl * bl;
    }
    return acc * mu;
}

bool reduced_dde_check(const PrimeModulus& mod, int64_t m) {
    std::array<BiPoly, 2> psi = psi_coefficients(mod, m);
    if (!bipoly_homogeneous(psi[0], static_cast<int>(mod.p - m)) ||
        !bipoly_homogeneous(psi[1], static_cast<int>(mod.p - m)))
        return false;
    Fp mu{m, mod};
    BiPoly z1, z2;
    z1.add(1, 0, Fp{1, mod});
    z2.add(0, 1, Fp{1, mod});
    BiPoly z1mz2 = bipoly_add(z1, bipoly_scale(z2, Fp{-1, mod}));
    BiPoly z2mz1 = bipoly_scale(z1mz2, Fp{-1, mod});
    BiPoly z1pz2 = bipoly_add(z1, z2);
    int64_t bp[2][2] = {{-1, 1}, {1, -1}};
    auto matap = [&](const int64_t M[2][2], const BiPoly& coef,
                     const std::array<BiPoly, 2>& v) {
        std::array<BiPoly, 2> out;
        for (int r = 0; r < 2; ++r)
            for (int c = 0; c < 2; ++c)
                if (M[r][c] % mod.p != 0)
                    out[static_cast<size_t>(r)] = bipoly_add(
                        out[static_cast<size_t>(r)],
                        bipoly_scale(bipoly_mul(coef, v[static_cast<size_t>(c)]),
                                     Fp{M[r][c], mod}));
        return out;
    };
    auto equal2 = [](const std::array<BiPoly, 2>& a,
                     const std::array<BiPoly, 2>& b) {
        return a[0] == b[0] && a[1] == b[1];
    };
    std::array<BiPoly, 2> d1 = {bipoly_euler(psi[0], 1, mod),
                                bipoly_euler(psi[1], 1, mod)};
    std::array<BiPoly, 2> d2 = {bipoly_euler(psi[0], 2, mod),
                                bipoly_euler(psi[1], 2, mod)};

    // (z1-z2) z1 d1 Psi = m ((z1-z2) [[0,-1],[0,0]] + z1 B') Psi
    int64_t e1[2][2] = {{0, -1}, {0, 0}};
    std::array<BiPoly, 2> lhs = {bipoly_mul(z1mz2, d1[0]), bipoly_mul(z1mz2, d1[1])};
    auto rhs = matap(e1, z1mz2, psi);
    auto tail = matap(bp, z1, psi);
    for (int i = 0; i < 2; ++i)
        rhs[static_cast<size_t>(i)] = bipoly_scale(
            bipoly_add(rhs[static_cast<size_t>(i)], tail[static_cast<size_t>(i)]), mu);
    if (!equal2(lhs, rhs)) return false;

    // (z2-z1) z2 d2 Psi = m ((z2-z1) [[0,0],[-1,0]] + z2 B') Psi
    int64_t e2[2][2] = {{0, 0}, {-1, 0}};
    lhs = {bipoly_mul(z2mz1, d2[0]), bipoly_mul(z2mz1, d2[1])};
    rhs = matap(e2, z2mz1, psi);
    tail = matap(bp, z2, psi);
    for (int i = 0; i < 2; ++i)
        rhs[static_cast<size_t>(i)] = bipoly_scale(
            bipoly_add(rhs[static_cast<size_t>(i)], tail[static_cast<size_t>(i)]), mu);
    if (!equal2(lhs, rhs)) return false;

    // (z2-z1)(z2 d2 - z1 d1) Psi = m ((z2-z1) [[0,1],[-1,0]] + (z1+z2) B') Psi
    int64_t e3[2][2] = {{0, 1}, {-1, 0}};
    lhs = {bipoly_mul(z2mz1, bipoly_add(d2[0], bipoly_scale(d1[0], Fp{-1, mod}))),
           bipoly_mul(z2mz1, bipoly_add(d2[1], bipoly_scale(d1[1], Fp{-1, mod})))};
    rhs = matap(e3, z2mz1, psi);
    tail = matap(bp, z1pz2, psi);
    for (int i = 0; i < 2; ++i)
        rhs[static_cast<size_t>(i)] = bipoly_scale(
            bipoly_add(rhs[static_cast<size_t>(i)], tail[static_cast<size_t>(i)]), mu);
    return equal2(lhs, rhs);
}

} // namespace qst
