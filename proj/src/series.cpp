#include "qst/series.hpp"

namespace qst {

Series<Fp> substitute_h(const Series<Fp>& s, const Fp& mu) {
    Series<Fp> r(s.win);
    Fp mu_inv{0, mu.p};
    bool have_inv = false;
    for (const auto& [m, c] : s.terms) {
        Fp factor{1, mu.p};
        if (m.h > 0) {
            factor = pow(mu, m.h);
        } else if (m.h < 0) {
            if (mu.is_zero())
                throw DivisionByZero("substitute_h: negative h power at mu = 0");
            if (!have_inv) {
                mu_inv = inv(mu);
                have_inv = true;
            }
            factor = pow(mu_inv, -m.h);
        }
        r.add_term(Monomial{m.q, m.t + m.h, 0, m.x}, c * factor);
    }
    return r;
}

} // namespace qst
