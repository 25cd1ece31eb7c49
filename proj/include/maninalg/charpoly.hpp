#pragma once

#include <vector>

#include "maninalg/minors.hpp"

namespace manin {

// Matrix of scalar series 1 - t*M (or any shift), degree D.
inline Mat<Series<Poly>> one_minus_t(const NCMatrix& m, const std::string& param,
                                     int degree) {
    RingPtr r = ring_of(m);
    std::vector<Series<Poly>> v;
    v.reserve(static_cast<std::size_t>(m.rows()) * m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) {
            Series<Poly> s =
                Series<Poly>::monomial(param, degree, -m.at(i, j), 1);
            if (i == j) s[0] = Poly::one(r);
            v.push_back(std::move(s));
        }
    return Mat<Series<Poly>>(m.rows(), m.cols(), std::move(v));
}

// Coefficients e_0..e_n of det^col(1 - tM) = sum_k (-t)^k e_k.
inline std::vector<Poly> char_coeffs(const NCMatrix& m) {
    if (!m.square()) throw shape_error("char_coeffs needs a square matrix");
    const int n = m.rows();
    Series<Poly> det = det_col(one_minus_t(m, "t", n));
    std::vector<Poly> e;
    e.reserve(n + 1);
    for (int k = 0; k <= n; ++k) e.push_back(det[k].scaled(Rat(k % 2 == 0 ? 1 : -1)));
    return e;
}

inline NCMatrix mat_power(const NCMatrix& m, int k) {
    if (!m.square()) throw shape_error("matrix power needs a square matrix");
    NCMatrix acc = identity_mat(m.rows(), Poly::one(ring_of(m)));
    for (int i = 0; i < k; ++i) acc = acc * m;
    return acc;
}

inline Poly trace_power(const NCMatrix& m, int k) { return trace(mat_power(m, k)); }

enum class SymPowerMode {
    // (1/k!) sum over all index tuples (repeats allowed) of row permanents
    repeated_tuples,
    // sum over weakly increasing tuples, each divided by its multiplicity
    // factorials (agrees with the tuple form exactly when M is Manin)
    sorted_tuples,
};

// Tr S^k M via row permanents over k-tuples of indices.
inline Poly trace_sym_power(const NCMatrix& m, int k,
                            SymPowerMode mode = SymPowerMode::repeated_tuples) {
    if (!m.square()) throw shape_error("trace_sym_power needs a square matrix");
    RingPtr r = ring_of(m);
    if (k == 0) return Poly::one(r);
    const int n = m.rows();
    Poly acc = Poly::zero(r);
    std::vector<int> tuple(k, 1);
    auto selection = [&]() {
        MultiIndex I(tuple.begin(), tuple.end());
        return select(m, I, I);
    };
    if (mode == SymPowerMode::repeated_tuples) {
        Rat kfact(1);
        for (int i = 2; i <= k; ++i) kfact *= i;
        // odometer over [1..n]^k
        while (true) {
            acc = acc + permanent_row(selection());
            int pos = k - 1;
            while (pos >= 0 && tuple[pos] == n) tuple[pos--] = 1;
            if (pos < 0) break;
            ++tuple[pos];
        }
        return acc.scaled(Rat(1) / kfact);
    }
    // weakly increasing tuples
    while (true) {
        MultiIndex I(tuple.begin(), tuple.end());
        acc = acc + permanent_row(select(m, I, I)).scaled(multiplicity_normalizer(I));
        int pos = k - 1;
        while (pos >= 0 && tuple[pos] == n) --pos;
        if (pos < 0) break;
        ++tuple[pos];
        for (int i = pos + 1; i < k; ++i) tuple[i] = tuple[pos];
    }
    return acc;
}

// det^col(1 - tM) as a truncated series (degree D).
inline Series<Poly> elementary_series(const NCMatrix& m, int degree,
                                      const std::string& param = "t") {
    return det_col(one_minus_t(m, param, degree));
}

// T(t) = sum_k t^k Tr(M^{k+1}).
inline Series<Poly> trace_power_series(const NCMatrix& m, int degree,
                                       const std::string& param = "t") {
    RingPtr r = ring_of(m);
    std::vector<Poly> c;
    c.reserve(degree + 1);
    NCMatrix pw = m;
    for (int k = 0; k <= degree; ++k) {
        c.push_back(trace(pw));
        if (k < degree) pw = pw * m;
    }
    return Series<Poly>(param, std::move(c));
}

// S(t) = sum_k t^k Tr(S^k M).
inline Series<Poly> sym_power_series(const NCMatrix& m, int degree,
                                     SymPowerMode mode = SymPowerMode::repeated_tuples,
                                     const std::string& param = "t") {
    std::vector<Poly> c;
    c.reserve(degree + 1);
    for (int k = 0; k <= degree; ++k) c.push_back(trace_sym_power(m, k, mode));
    return Series<Poly>(param, std::move(c));
}

// Right-substitution Cayley-Hamilton residual sum_i (-1)^i e_i M^{n-i}.
inline NCMatrix cayley_hamilton_residual(const NCMatrix& m) {
    const int n = m.rows();
    std::vector<Poly> e = char_coeffs(m);
    RingPtr r = ring_of(m);
    NCMatrix acc = NCMatrix::filled(n, n, Poly::zero(r));
    for (int i = 0; i <= n; ++i) {
        NCMatrix term = mat_power(m, n - i).scaled_elem(e[i], true);
        acc = acc + (i % 2 == 0 ? term : -term);
    }
    return acc;
}

struct FrobeniusPair {
    NCMatrix D;
    NCMatrix frobenius;
};

// D has rows v, vM, ..., vM^{n-1}; the companion matrix carries the
// characteristic coefficients in its last row. Contract: D*M = M_Frob*D when
// M is Manin and the v entries commute with the e_k.
inline FrobeniusPair frobenius_pair(const NCMatrix& m, const std::vector<Rat>& v) {
    if (!m.square()) throw shape_error("frobenius_pair needs a square matrix");
    const int n = m.rows();
    if (static_cast<int>(v.size()) != n)
        throw shape_error("frobenius_pair needs an n-vector");
    RingPtr r = ring_of(m);
    NCMatrix row = mat_of_rationals(r, 1, n, v);
    std::vector<Poly> dv;
    dv.reserve(static_cast<std::size_t>(n) * n);
    NCMatrix cur = row;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) dv.push_back(cur.at(0, j));
        if (i + 1 < n) cur = cur * m;
    }
    NCMatrix D(n, n, std::move(dv));
    std::vector<Poly> e = char_coeffs(m);
    NCMatrix frob = NCMatrix::filled(n, n, Poly::zero(r));
    for (int i = 0; i + 1 < n; ++i) frob.at(i, i + 1) = Poly::one(r);
    for (int j = 1; j <= n; ++j) {
        Poly val = e[n + 1 - j];
        frob.at(n - 1, j - 1) = ((n - j) % 2 == 0) ? val : -val;
    }
    return {std::move(D), std::move(frob)};
}

} // namespace manin
