#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "qst/series.hpp"

namespace qst {

// A rational function numerator / prod_i (x + c_i t)^{m_i} with all c_i
// nonzero, so the denominator is a unit in the x-adic series ring and the
// whole expression has a well-defined x-adic expansion.
struct FactoredRationalFn {
    Series<Fp> numerator;                           // polynomial in x over F_p[t, h]
    std::vector<std::pair<Fp, int>> denominator;    // (c, multiplicity), c != 0

    FactoredRationalFn(Series<Fp> num, std::vector<std::pair<Fp, int>> den)
        : numerator(std::move(num)), denominator(std::move(den)) {
        for (const auto& [c, m] : denominator)
            if (c.is_zero())
                throw NotAUnit("denominator factor x + c t needs c != 0");
    }
};

// Coefficient of x^k in the x-adic expansion of f. The result is a Laurent
// polynomial in t, h (x cleared).
inline Series<Fp> coeff_x(const FactoredRationalFn& f, int k) {
    Series<Fp> acc = f.numerator;
    for (const auto& [c, mult] : f.denominator) {
        Series<Fp> lin(acc.win);
        lin.add_term(Monomial{0, 1, 0, 0}, c);
        lin.add_term(Monomial{0, 0, 0, 1}, Fp{1, c.p});
        Series<Fp> pw = lin;
        for (int i = 1; i < mult; ++i) pw *= lin;
        acc *= series_inv_unit(pw);
    }
    return acc.slice_x(k);
}

} // namespace qst
