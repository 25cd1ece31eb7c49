#pragma once

#include <map>
#include <vector>

#include "maninalg/matrix.hpp"

namespace manin {

// 1-based row/column index sequence. Indices need not be ordered or distinct;
// out-of-range positions select zero-padded rows/columns.
using MultiIndex = std::vector<int>;

inline bool strictly_increasing(const MultiIndex& I) {
    for (std::size_t k = 1; k < I.size(); ++k)
        if (I[k] <= I[k - 1]) return false;
    return true;
}

inline bool weakly_increasing(const MultiIndex& I) {
    for (std::size_t k = 1; k < I.size(); ++k)
        if (I[k] < I[k - 1]) return false;
    return true;
}

// A_IJ with zero padding: entry (a,b) is A[I_a, J_b] when both indices are in
// range and 0 otherwise.
template <class E>
Mat<E> select(const Mat<E>& m, const MultiIndex& I, const MultiIndex& J) {
    std::vector<E> v;
    v.reserve(I.size() * J.size());
    for (int i : I)
        for (int j : J) {
            if (i >= 1 && i <= m.rows() && j >= 1 && j <= m.cols())
                v.push_back(m.at(i - 1, j - 1));
            else
                v.push_back(zero_like(m.sample()));
        }
    return Mat<E>(static_cast<int>(I.size()), static_cast<int>(J.size()), std::move(v));
}

// 1/((2!)^{n_2} (3!)^{n_3} ...) where n_p counts the values occurring in I
// with multiplicity exactly p.
inline Rat multiplicity_normalizer(const MultiIndex& I) {
    std::map<int, int> mult;
    for (int i : I) ++mult[i];
    Rat denom(1);
    for (auto& [val, p] : mult) {
        Rat f(1);
        for (int k = 2; k <= p; ++k) f *= k;
        denom *= f;
    }
    return Rat(1) / denom;
}

// Normalized column permanent of the selection A_IJ; I must be weakly
// increasing, repeats allowed in both index sets.
template <class E>
E perm_norm(const Mat<E>& m, const MultiIndex& I, const MultiIndex& J) {
    if (I.size() != J.size()) throw precondition_error("|I| != |J| in perm_norm");
    if (!weakly_increasing(I))
        throw precondition_error("perm_norm needs weakly increasing row index");
    E p = permanent_col(select(m, I, J));
    return scale(p, multiplicity_normalizer(I));
}

enum class MinorFunctional { det_col, perm_norm };

template <class E>
E minor(const Mat<E>& m, const MultiIndex& I, const MultiIndex& J,
        MinorFunctional f = MinorFunctional::det_col) {
    if (I.size() != J.size()) throw precondition_error("|I| != |J| in minor");
    if (f == MinorFunctional::perm_norm) return perm_norm(m, I, J);
    return det_col(select(m, I, J));
}

// Classical adjugate built from column determinants:
//   adj(M)[k,l] = (-1)^{k+l} det^col(M with row l and column k removed).
template <class E>
Mat<E> adjugate(const Mat<E>& m) {
    if (!m.square()) throw shape_error("adjugate needs a square matrix");
    const int n = m.rows();
    std::vector<E> v;
    v.reserve(static_cast<std::size_t>(n) * n);
    for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
            if (n == 1) {
                v.push_back(one_like(m.sample()));
                continue;
            }
            E d = det_col(m.delete_row_col(l, k));
            v.push_back(((k + l) % 2 == 0) ? d : -d);
        }
    return Mat<E>(n, n, std::move(v));
}

// Row-determinant adjugate, for matrices whose transpose is Manin:
//   adj_row(M)[k,l] = (-1)^{k+l} det^row(M with row l and column k removed).
template <class E>
Mat<E> adjugate_row(const Mat<E>& m) {
    if (!m.square()) throw shape_error("adjugate needs a square matrix");
    const int n = m.rows();
    std::vector<E> v;
    v.reserve(static_cast<std::size_t>(n) * n);
    for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
            if (n == 1) {
                v.push_back(one_like(m.sample()));
                continue;
            }
            E d = det_row(m.delete_row_col(l, k));
            v.push_back(((k + l) % 2 == 0) ? d : -d);
        }
    return Mat<E>(n, n, std::move(v));
}

// complement of a strictly increasing 1-based index set inside 1..n
inline MultiIndex complement_index(const MultiIndex& I, int n) {
    MultiIndex out;
    std::size_t k = 0;
    for (int v = 1; v <= n; ++v) {
        if (k < I.size() && I[k] == v) {
            ++k;
            continue;
        }
        out.push_back(v);
    }
    return out;
}

} // namespace manin
