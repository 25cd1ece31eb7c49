#pragma once

#include "maninalg/poly.hpp"
#include "maninalg/series.hpp"

namespace manin {

// Partial derivative with respect to one generator of a commutative ring.
inline Poly partial_derivative(const Poly& p, GenId g) {
    if (!p.ring()->is_commutative())
        throw precondition_error("partial derivative needs a commutative ring");
    TermMap out;
    for (auto& [w, c] : p.terms()) {
        for (std::size_t pos = 0; pos < w.g.size(); ++pos) {
            if (w.g[pos] != g) continue;
            Word reduced;
            reduced.g.reserve(w.g.size() - 1);
            for (std::size_t k = 0; k < w.g.size(); ++k)
                if (k != pos) reduced.g.push_back(w.g[k]);
            add_term(out, reduced, c);
        }
    }
    return Poly::from_terms(p.ring(), out);
}

// Symplectic bracket {p_i, x_j} = delta_ij extended by bilinearity and
// Leibniz: {f, g} = sum_i df/dp_i dg/dx_i - df/dx_i dg/dp_i.
inline Poly poisson_bracket(const Poly& f, const Poly& g) {
    require_same_ring(f.ring(), g.ring());
    const auto& ps = f.ring()->poisson();
    if (!ps) throw precondition_error("ring " + f.ring()->descriptor() +
                                      " carries no Poisson structure");
    Poly acc = Poly::zero(f.ring());
    for (std::size_t i = 0; i < ps->xs.size(); ++i) {
        acc = acc + partial_derivative(f, ps->ps[i]) * partial_derivative(g, ps->xs[i]);
        acc = acc - partial_derivative(f, ps->xs[i]) * partial_derivative(g, ps->ps[i]);
    }
    return acc;
}

// Bracket extended to truncated series coefficientwise in the central
// parameter: {sum a_k t^k, sum b_l t^l} = sum_m t^m sum_{k+l=m} {a_k, b_l}.
inline Series<Poly> poisson_bracket(const Series<Poly>& f, const Series<Poly>& g) {
    if (f.param() != g.param() || f.degree() != g.degree())
        throw shape_error("series mismatch in Poisson bracket");
    std::vector<Poly> c;
    c.reserve(f.degree() + 1);
    for (int m = 0; m <= f.degree(); ++m) {
        Poly acc = zero_like(f[0]);
        for (int k = 0; k <= m; ++k) acc = acc + poisson_bracket(f[k], g[m - k]);
        c.push_back(std::move(acc));
    }
    return Series<Poly>(f.param(), std::move(c));
}

} // namespace manin
