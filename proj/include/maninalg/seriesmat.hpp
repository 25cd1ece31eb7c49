#pragma once

#include <string>
#include <vector>

#include "maninalg/charpoly.hpp"

namespace manin {

using PolySeries = Series<Poly>;
using SeriesMat = Series<Mat<Poly>>; // series with matrix coefficients
using MatSeries = Mat<Series<Poly>>; // matrix with scalar-series entries

inline SeriesMat to_series_of_mat(const MatSeries& m) {
    const int D = m.sample().degree();
    std::vector<NCMatrix> coeffs;
    coeffs.reserve(D + 1);
    for (int k = 0; k <= D; ++k) {
        std::vector<Poly> v;
        v.reserve(static_cast<std::size_t>(m.rows()) * m.cols());
        for (int i = 0; i < m.rows(); ++i)
            for (int j = 0; j < m.cols(); ++j) {
                if (m.at(i, j).degree() != D)
                    throw shape_error("ragged series degrees in matrix");
                v.push_back(m.at(i, j)[k]);
            }
        coeffs.emplace_back(m.rows(), m.cols(), std::move(v));
    }
    return SeriesMat(m.sample().param(), std::move(coeffs));
}

inline MatSeries to_mat_of_series(const SeriesMat& s) {
    const int rows = s[0].rows(), cols = s[0].cols();
    std::vector<PolySeries> v;
    v.reserve(static_cast<std::size_t>(rows) * cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) {
            std::vector<Poly> c;
            c.reserve(s.degree() + 1);
            for (int k = 0; k <= s.degree(); ++k) c.push_back(s[k].at(i, j));
            v.emplace_back(s.param(), std::move(c));
        }
    return MatSeries(rows, cols, std::move(v));
}

// 1 - t*N, truncated at the given degree.
inline SeriesMat one_minus_t_series(const NCMatrix& n, int degree,
                                    const std::string& param = "t") {
    if (!n.square()) throw shape_error("1 - tN needs a square matrix");
    NCMatrix id = identity_mat(n.rows(), Poly::one(ring_of(n)));
    std::vector<NCMatrix> c;
    c.reserve(degree + 1);
    c.push_back(id);
    if (degree >= 1) c.push_back(-n);
    for (int k = 2; k <= degree; ++k) c.push_back(zero_like(n));
    return SeriesMat(param, std::move(c));
}

// (1 - tN)^{-1} = sum_k t^k N^k; a two-sided inverse modulo t^{D+1}.
inline SeriesMat series_inv_matrix(const NCMatrix& n, int degree,
                                   const std::string& param = "t") {
    if (!n.square()) throw shape_error("series inverse needs a square matrix");
    std::vector<NCMatrix> c;
    c.reserve(degree + 1);
    NCMatrix pw = identity_mat(n.rows(), Poly::one(ring_of(n)));
    for (int k = 0; k <= degree; ++k) {
        c.push_back(pw);
        if (k < degree) pw = pw * n;
    }
    return SeriesMat(param, std::move(c));
}

inline PolySeries det_col_series(const SeriesMat& m,
                                 DetStrategy strategy = DetStrategy::automatic) {
    return det_col(to_mat_of_series(m), strategy);
}

inline PolySeries det_col_reverse_series(const SeriesMat& m) {
    return det_col_reverse(to_mat_of_series(m));
}

inline SeriesMat block_series(const SeriesMat& s, int i0, int j0, int nrows, int ncols) {
    std::vector<NCMatrix> c;
    c.reserve(s.degree() + 1);
    for (int k = 0; k <= s.degree(); ++k) c.push_back(s[k].block(i0, j0, nrows, ncols));
    return SeriesMat(s.param(), std::move(c));
}

inline SeriesMat delete_row_col_series(const SeriesMat& s, int row, int col) {
    std::vector<NCMatrix> c;
    c.reserve(s.degree() + 1);
    for (int k = 0; k <= s.degree(); ++k) c.push_back(s[k].delete_row_col(row, col));
    return SeriesMat(s.param(), std::move(c));
}

enum class SchurCorner { lower, upper };

// Schur complement of the leading k x k block A in M = [[A,B],[C,D]]:
// lower = D - C A^{-1} B, upper = A - B D^{-1} C. The corner being inverted
// must have unit constant term.
inline SeriesMat schur_complement(const SeriesMat& m, int k, SchurCorner corner) {
    const int n = m[0].rows();
    if (!m[0].square() || k <= 0 || k >= n)
        throw shape_error("schur_complement needs a square matrix and 0 < k < n");
    SeriesMat A = block_series(m, 0, 0, k, k);
    SeriesMat B = block_series(m, 0, k, k, n - k);
    SeriesMat C = block_series(m, k, 0, n - k, k);
    SeriesMat D = block_series(m, k, k, n - k, n - k);
    if (corner == SchurCorner::lower) return D - C * series_inverse(A) * B;
    return A - B * series_inverse(D) * C;
}

// (p,q)-th quasideterminant (1-based): A_pq - A_{p*} (A^{pq})^{-1} A_{*q},
// where A^{pq} drops row p and column q.
inline PolySeries quasideterminant(const SeriesMat& m, int p, int q) {
    const int n = m[0].rows();
    if (!m[0].square() || p < 1 || p > n || q < 1 || q > n)
        throw shape_error("quasideterminant index out of range");
    if (n == 1) return to_mat_of_series(m).at(0, 0);
    SeriesMat hat = delete_row_col_series(m, p - 1, q - 1);
    std::vector<int> rows_wo_p, cols_wo_q;
    for (int i = 0; i < n; ++i)
        if (i != p - 1) rows_wo_p.push_back(i);
    for (int j = 0; j < n; ++j)
        if (j != q - 1) cols_wo_q.push_back(j);
    auto pick = [&](const std::vector<int>& rs, const std::vector<int>& cs) {
        std::vector<NCMatrix> c;
        c.reserve(m.degree() + 1);
        for (int k = 0; k <= m.degree(); ++k) c.push_back(m[k].submatrix(rs, cs));
        return SeriesMat(m.param(), std::move(c));
    };
    SeriesMat row = pick({p - 1}, cols_wo_q);        // 1 x (n-1)
    SeriesMat col = pick(rows_wo_p, {q - 1});        // (n-1) x 1
    SeriesMat corner = row * series_inverse(hat) * col;
    PolySeries a_pq = to_mat_of_series(m).at(p - 1, q - 1);
    return a_pq - to_mat_of_series(corner).at(0, 0);
}

enum class GaussForm { UDL, LDU };

// Determinant through the diagonal of the Gauss decomposition:
//   UDL: det = y_n ... y_1 with y_k the (k,k) quasideterminant of the
//        trailing submatrix on rows/columns k..n;
//   LDU: det = y_1 ... y_n with y_k the (k,k) quasideterminant of the
//        leading submatrix on rows/columns 1..k.
inline PolySeries gauss_det(const SeriesMat& m, GaussForm form) {
    const int n = m[0].rows();
    if (!m[0].square()) throw shape_error("gauss_det needs a square matrix");
    std::vector<PolySeries> ys;
    for (int k = 1; k <= n; ++k) {
        if (form == GaussForm::UDL) {
            SeriesMat sub = block_series(m, k - 1, k - 1, n - k + 1, n - k + 1);
            ys.push_back(quasideterminant(sub, 1, 1));
        } else {
            SeriesMat sub = block_series(m, 0, 0, k, k);
            ys.push_back(quasideterminant(sub, k, k));
        }
    }
    if (form == GaussForm::UDL) {
        PolySeries acc = ys[n - 1];
        for (int k = n - 2; k >= 0; --k) acc = acc * ys[k];
        return acc;
    }
    PolySeries acc = ys[0];
    for (int k = 1; k < n; ++k) acc = acc * ys[k];
    return acc;
}

} // namespace manin
