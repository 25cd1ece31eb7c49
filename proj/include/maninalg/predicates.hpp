#pragma once

#include <string>
#include <utility>
#include <vector>

#include "maninalg/matrix.hpp"
#include "maninalg/presets.hpp"
#include "maninalg/seriesmat.hpp"

namespace manin {

struct ResidualSet {
    std::vector<std::pair<std::string, Poly>> items;

    void add(std::string label, Poly p) { items.emplace_back(std::move(label), std::move(p)); }

    bool all_zero() const {
        for (auto& [l, p] : items)
            if (!p.is_zero()) return false;
        return true;
    }

    std::vector<Poly> nonzero() const {
        std::vector<Poly> out;
        for (auto& [l, p] : items)
            if (!p.is_zero()) out.push_back(p);
        return out;
    }
};

inline std::string ij(int i, int j) {
    return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

// Manin residuals: same-column commutators [M_pq, M_kq] (p<k) and cross-term
// differences [M_pq, M_kl] - [M_kq, M_pl] (p<k, q<l). All must vanish.
inline ResidualSet manin_residuals(const NCMatrix& m) {
    ResidualSet rs;
    const int n = m.rows(), cols = m.cols();
    for (int q = 0; q < cols; ++q)
        for (int p = 0; p < n; ++p)
            for (int k = p + 1; k < n; ++k)
                rs.add("col[" + ij(p + 1, q + 1) + "," + ij(k + 1, q + 1) + "]",
                       commutator(m.at(p, q), m.at(k, q)));
    for (int p = 0; p < n; ++p)
        for (int k = p + 1; k < n; ++k)
            for (int q = 0; q < cols; ++q)
                for (int l = q + 1; l < cols; ++l)
                    rs.add("cross[" + ij(p + 1, q + 1) + "," + ij(k + 1, l + 1) + "]",
                           commutator(m.at(p, q), m.at(k, l)) -
                               commutator(m.at(k, q), m.at(p, l)));
    return rs;
}

inline bool is_manin(const NCMatrix& m) { return manin_residuals(m).all_zero(); }

// Manin residuals for a matrix of truncated series, coefficientwise.
inline ResidualSet manin_residuals_series(const SeriesMat& s) {
    ResidualSet rs;
    MatSeries m = to_mat_of_series(s);
    const int n = m.rows(), cols = m.cols();
    auto push = [&](const std::string& label, const PolySeries& v) {
        for (int k = 0; k <= v.degree(); ++k)
            if (!v[k].is_zero()) rs.add(label + "@t^" + std::to_string(k), v[k]);
    };
    auto comm = [](const PolySeries& a, const PolySeries& b) { return a * b - b * a; };
    for (int q = 0; q < cols; ++q)
        for (int p = 0; p < n; ++p)
            for (int k = p + 1; k < n; ++k)
                push("col[" + ij(p + 1, q + 1) + "," + ij(k + 1, q + 1) + "]",
                     comm(m.at(p, q), m.at(k, q)));
    for (int p = 0; p < n; ++p)
        for (int k = p + 1; k < n; ++k)
            for (int q = 0; q < cols; ++q)
                for (int l = q + 1; l < cols; ++l)
                    push("cross[" + ij(p + 1, q + 1) + "," + ij(k + 1, l + 1) + "]",
                         comm(m.at(p, q), m.at(k, l)) - comm(m.at(k, q), m.at(p, l)));
    return rs;
}

// q-Manin residuals per column pair and 2x2 submatrix:
//   M_kj M_ij - q M_ij M_kj                    (i<k, every j)
//   M_ij M_kl - M_kl M_ij - q^{-1} M_kj M_il + q M_il M_kj   (i<k, j<l)
// With `formal` the ring must carry q; otherwise q is specialized to the
// given rational value (q = 1 recovers the plain Manin residuals).
inline ResidualSet q_manin_residuals(const NCMatrix& m, bool formal = true,
                                     const Rat& q_value = Rat(1)) {
    RingPtr r = ring_of(m);
    if (formal && !r->is_q_ring())
        throw precondition_error("q-Manin check needs a q-deformed ring (or a "
                                 "specialized q value)");
    auto qpow = [&](int e) {
        if (formal) return Poly::q_power(r, e);
        Rat v(1);
        for (int i = 0; i < (e >= 0 ? e : -e); ++i)
            v = e >= 0 ? Rat(v * q_value) : Rat(v / q_value);
        return Poly::constant(r, v);
    };
    ResidualSet rs;
    const int n = m.rows(), cols = m.cols();
    for (int i = 0; i < n; ++i)
        for (int k = i + 1; k < n; ++k) {
            for (int j = 0; j < cols; ++j)
                rs.add("qcol[" + ij(i + 1, j + 1) + "," + ij(k + 1, j + 1) + "]",
                       m.at(k, j) * m.at(i, j) - qpow(1) * m.at(i, j) * m.at(k, j));
            for (int j = 0; j < cols; ++j)
                for (int l = j + 1; l < cols; ++l)
                    rs.add("qcross[" + ij(i + 1, j + 1) + "," + ij(k + 1, l + 1) + "]",
                           m.at(i, j) * m.at(k, l) - m.at(k, l) * m.at(i, j) -
                               qpow(-1) * m.at(k, j) * m.at(i, l) +
                               qpow(1) * m.at(i, l) * m.at(k, j));
        }
    return rs;
}

// Fun_q(GL_n) residuals: column and row q-commutation, the cross relation,
// and commuting anti-diagonal pairs, for every 2x2 submatrix.
inline ResidualSet qg_matrix_residuals(const NCMatrix& m) {
    RingPtr r = ring_of(m);
    if (!r->is_q_ring()) throw precondition_error("quantum-group check needs q");
    Poly q = Poly::q_power(r, 1);
    Poly qi = Poly::q_power(r, -1);
    ResidualSet rs;
    const int n = m.rows(), cols = m.cols();
    for (int i = 0; i < n; ++i)
        for (int k = i + 1; k < n; ++k)
            for (int j = 0; j < cols; ++j)
                rs.add("col" + ij(i + 1, j + 1) + ij(k + 1, j + 1),
                       m.at(k, j) * m.at(i, j) - q * m.at(i, j) * m.at(k, j));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < cols; ++j)
            for (int l = j + 1; l < cols; ++l)
                rs.add("row" + ij(i + 1, j + 1) + ij(i + 1, l + 1),
                       m.at(i, l) * m.at(i, j) - q * m.at(i, j) * m.at(i, l));
    for (int i = 0; i < n; ++i)
        for (int k = i + 1; k < n; ++k)
            for (int j = 0; j < cols; ++j)
                for (int l = j + 1; l < cols; ++l) {
                    rs.add("cross1" + ij(i + 1, j + 1) + ij(k + 1, l + 1),
                           m.at(i, j) * m.at(k, l) - m.at(k, l) * m.at(i, j) -
                               qi * m.at(k, j) * m.at(i, l) +
                               q * m.at(i, l) * m.at(k, j));
                    rs.add("cross2" + ij(i + 1, l + 1) + ij(k + 1, j + 1),
                           commutator(m.at(i, l), m.at(k, j)));
                }
    return rs;
}

enum class CoactionKind { polynomial, grassmann, q_polynomial, q_grassmann };

// Adjoins fresh variables commuting with the entries, maps them through M,
// and returns the (anti)commutation residuals of the transformed variables.
// For x-type kinds the variables transform as a column (x~ = M x); for
// psi-type kinds as a row (psi~ = psi M).
inline ResidualSet coaction_residuals(const NCMatrix& m, CoactionKind kind) {
    RingPtr base = ring_of(m);
    const int rows = m.rows(), cols = m.cols();
    ResidualSet rs;
    auto lift = [&](const RingPtr& ext) {
        std::vector<Poly> out;
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) {
                TermMap t;
                for (auto& [w, c] : m.at(i, j).terms()) t.emplace(w, c);
                out.push_back(Poly::from_terms(ext, t));
            }
        return NCMatrix(rows, cols, std::move(out));
    };
    // Generator ids of the base ring keep their positions in the joined ring,
    // so entry terms lift verbatim.
    switch (kind) {
    case CoactionKind::polynomial:
    case CoactionKind::q_polynomial: {
        RingPtr ext = kind == CoactionKind::polynomial
                          ? extend_poly_vars(base, cols, "xv")
                          : extend_q_poly_vars(base, cols, "xv");
        NCMatrix M = lift(ext);
        std::vector<Poly> xt;
        for (int i = 0; i < rows; ++i) {
            Poly acc = Poly::zero(ext);
            for (int j = 0; j < cols; ++j)
                acc = acc + M.at(i, j) * Poly::gen(ext, "xv" + std::to_string(j + 1));
            xt.push_back(std::move(acc));
        }
        for (int i = 0; i < rows; ++i)
            for (int j = i + 1; j < rows; ++j) {
                if (kind == CoactionKind::polynomial)
                    rs.add("[x~" + std::to_string(i + 1) + ",x~" + std::to_string(j + 1) + "]",
                           commutator(xt[i], xt[j]));
                else
                    rs.add("qcomm(x~" + std::to_string(i + 1) + ",x~" +
                               std::to_string(j + 1) + ")",
                           xt[i] * xt[j] - Poly::q_power(ext, -1) * xt[j] * xt[i]);
            }
        break;
    }
    case CoactionKind::grassmann:
    case CoactionKind::q_grassmann: {
        RingPtr ext = kind == CoactionKind::grassmann
                          ? extend_grassmann_vars(base, rows, "psiv")
                          : extend_q_grassmann_vars(base, rows, "psiv");
        NCMatrix M = lift(ext);
        std::vector<Poly> pt;
        for (int j = 0; j < cols; ++j) {
            Poly acc = Poly::zero(ext);
            for (int i = 0; i < rows; ++i)
                acc = acc + Poly::gen(ext, "psiv" + std::to_string(i + 1)) * M.at(i, j);
            pt.push_back(std::move(acc));
        }
        for (int i = 0; i < cols; ++i)
            rs.add("psi~" + std::to_string(i + 1) + "^2", pt[i] * pt[i]);
        for (int i = 0; i < cols; ++i)
            for (int j = i + 1; j < cols; ++j) {
                if (kind == CoactionKind::grassmann)
                    rs.add("{psi~" + std::to_string(i + 1) + ",psi~" +
                               std::to_string(j + 1) + "}",
                           pt[i] * pt[j] + pt[j] * pt[i]);
                else
                    rs.add("qanti(psi~" + std::to_string(i + 1) + ",psi~" +
                               std::to_string(j + 1) + ")",
                           pt[i] * pt[j] + Poly::q_power(ext, 1) * pt[j] * pt[i]);
            }
        break;
    }
    }
    return rs;
}

} // namespace manin
