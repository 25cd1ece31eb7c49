#pragma once

#include <vector>

#include "maninalg/matrix.hpp"

namespace manin {

// Operators on (C^n)^{otimes m} written as n^m x n^m matrices over the ring.
// Basis vectors e_{i_1} x ... x e_{i_m} are ranked lexicographically, so for
// m = 2 the pair (i,j) sits at position (i-1)n + j as in the usual 2-fold
// ordering.

namespace detail {

inline int pow_int(int base, int exp) {
    int r = 1;
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}

inline std::vector<int> unrank(int idx, int n, int m) {
    std::vector<int> t(m);
    for (int k = m - 1; k >= 0; --k) {
        t[k] = idx % n;
        idx /= n;
    }
    return t;
}

inline int rank_of(const std::vector<int>& t, int n) {
    int idx = 0;
    for (int x : t) idx = idx * n + x;
    return idx;
}

} // namespace detail

// M acting on tensor factor `slot` (1-based) of an m-fold product.
inline NCMatrix tensor_slot(const NCMatrix& m, int mfold, int slot) {
    if (!m.square()) throw shape_error("tensor_slot needs a square matrix");
    if (mfold > 3) throw resource_limit_error("tensor operators capped at m = 3");
    if (slot < 1 || slot > mfold) throw shape_error("tensor slot out of range");
    const int n = m.rows();
    const int N = detail::pow_int(n, mfold);
    RingPtr r = ring_of(m);
    NCMatrix out = NCMatrix::filled(N, N, Poly::zero(r));
    for (int row = 0; row < N; ++row) {
        auto ti = detail::unrank(row, n, mfold);
        for (int col = 0; col < N; ++col) {
            auto tj = detail::unrank(col, n, mfold);
            bool diag = true;
            for (int k = 0; k < mfold; ++k)
                if (k != slot - 1 && ti[k] != tj[k]) diag = false;
            if (diag) out.at(row, col) = m.at(ti[slot - 1], tj[slot - 1]);
        }
    }
    return out;
}

inline NCMatrix tensor_first(const NCMatrix& m) { return tensor_slot(m, 2, 1); }
inline NCMatrix tensor_second(const NCMatrix& m) { return tensor_slot(m, 2, 2); }

// Permutation operator P(e_i x e_j) = e_j x e_i.
inline NCMatrix permutation_op(const RingPtr& r, int n) {
    const int N = n * n;
    NCMatrix out = NCMatrix::filled(N, N, Poly::zero(r));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out.at(j * n + i, i * n + j) = Poly::one(r);
    return out;
}

// Images of sum_sigma sgn(sigma) sigma and sum_sigma sigma on the m-fold
// tensor power; A_m^2 = m! A_m, S_m^2 = m! S_m, A_m S_m = 0 for m >= 2.
inline NCMatrix symmetrizer_op(const RingPtr& r, int n, int mfold, bool antisymmetric) {
    if (mfold > 3) throw resource_limit_error("tensor operators capped at m = 3");
    const int N = detail::pow_int(n, mfold);
    NCMatrix out = NCMatrix::filled(N, N, Poly::zero(r));
    std::vector<int> perm(mfold);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        int sgn = detail::permutation_sign(perm);
        Rat coeff = (!antisymmetric || sgn > 0) ? Rat(1) : Rat(-1);
        for (int col = 0; col < N; ++col) {
            auto tj = detail::unrank(col, n, mfold);
            // sigma sends e_{j_1} x ... -> factor k of the image is j_{sigma^{-1}(k)}
            std::vector<int> ti(mfold);
            for (int k = 0; k < mfold; ++k) ti[perm[k]] = tj[k];
            int row = detail::rank_of(ti, n);
            out.at(row, col) = out.at(row, col) + Poly::constant(r, coeff);
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

inline NCMatrix antisymmetrizer_op(const RingPtr& r, int n, int mfold) {
    return symmetrizer_op(r, n, mfold, true);
}

inline NCMatrix symmetrizer_plain_op(const RingPtr& r, int n, int mfold) {
    return symmetrizer_op(r, n, mfold, false);
}

} // namespace manin
