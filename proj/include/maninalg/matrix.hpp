#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <unordered_map>
#include <vector>

#include "maninalg/series.hpp"

namespace manin {

// Rectangular matrix over any exact carrier E (Poly, Series<Poly>, Rat, ...).
// Entries are stored row-major; shape is fixed at construction.
template <class E>
class Mat {
public:
    Mat(int rows, int cols, std::vector<E> entries)
        : rows_(rows), cols_(cols), a_(std::move(entries)) {
        if (rows_ < 0 || cols_ < 0 ||
            a_.size() != static_cast<std::size_t>(rows_) * cols_)
            throw shape_error("matrix shape/storage mismatch");
    }

    static Mat filled(int rows, int cols, const E& value) {
        return Mat(rows, cols, std::vector<E>(static_cast<std::size_t>(rows) * cols,
                                              value));
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    // 0-based access
    const E& at(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
    E& at(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

    const E& sample() const {
        if (a_.empty()) throw shape_error("empty matrix has no sample entry");
        return a_[0];
    }

    Mat operator+(const Mat& o) const {
        require_shape(o);
        std::vector<E> v;
        v.reserve(a_.size());
        for (std::size_t k = 0; k < a_.size(); ++k) v.push_back(a_[k] + o.a_[k]);
        return Mat(rows_, cols_, std::move(v));
    }

    Mat operator-() const {
        std::vector<E> v;
        v.reserve(a_.size());
        for (auto& x : a_) v.push_back(-x);
        return Mat(rows_, cols_, std::move(v));
    }

    Mat operator-(const Mat& o) const { return *this + (-o); }

    // Row-by-column with left-to-right entry order preserved.
    Mat operator*(const Mat& o) const {
        if (cols_ != o.rows_) throw shape_error("matrix product shape mismatch");
        std::vector<E> v;
        v.reserve(static_cast<std::size_t>(rows_) * o.cols_);
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < o.cols_; ++k) {
                E acc = zero_like(sample());
                for (int j = 0; j < cols_; ++j) acc = acc + at(i, j) * o.at(j, k);
                v.push_back(std::move(acc));
            }
        return Mat(rows_, o.cols_, std::move(v));
    }

    Mat scaled(const Rat& r) const {
        std::vector<E> v;
        v.reserve(a_.size());
        for (auto& x : a_) v.push_back(scale(x, r));
        return Mat(rows_, cols_, std::move(v));
    }

    Mat scaled_elem(const E& s, bool left = true) const {
        std::vector<E> v;
        v.reserve(a_.size());
        for (auto& x : a_) v.push_back(left ? s * x : x * s);
        return Mat(rows_, cols_, std::move(v));
    }

    Mat transpose() const {
        std::vector<E> v;
        v.reserve(a_.size());
        for (int j = 0; j < cols_; ++j)
            for (int i = 0; i < rows_; ++i) v.push_back(at(i, j));
        return Mat(cols_, rows_, std::move(v));
    }

    // 0-based index lists
    Mat submatrix(const std::vector<int>& rows, const std::vector<int>& cols) const {
        std::vector<E> v;
        v.reserve(rows.size() * cols.size());
        for (int i : rows)
            for (int j : cols) v.push_back(at(i, j));
        return Mat(static_cast<int>(rows.size()), static_cast<int>(cols.size()),
                   std::move(v));
    }

    Mat delete_row_col(int row, int col) const {
        std::vector<int> rs, cs;
        for (int i = 0; i < rows_; ++i)
            if (i != row) rs.push_back(i);
        for (int j = 0; j < cols_; ++j)
            if (j != col) cs.push_back(j);
        return submatrix(rs, cs);
    }

    Mat block(int i0, int j0, int nrows, int ncols) const {
        std::vector<int> rs(nrows), cs(ncols);
        std::iota(rs.begin(), rs.end(), i0);
        std::iota(cs.begin(), cs.end(), j0);
        return submatrix(rs, cs);
    }

    bool is_zero() const {
        for (auto& x : a_)
            if (!is_zero_elem(x)) return false;
        return true;
    }

    friend bool operator==(const Mat& a, const Mat& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && (a - b).is_zero();
    }

private:
    void require_shape(const Mat& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw shape_error("matrix shape mismatch");
    }

    int rows_, cols_;
    std::vector<E> a_;
};

template <class E>
Mat<E> zero_like(const Mat<E>& m) {
    return Mat<E>::filled(m.rows(), m.cols(), zero_like(m.sample()));
}

template <class E>
Mat<E> one_like(const Mat<E>& m) {
    if (!m.square()) throw shape_error("identity needs a square matrix");
    Mat<E> r = zero_like(m);
    for (int i = 0; i < m.rows(); ++i) r.at(i, i) = one_like(m.sample());
    return r;
}

template <class E>
Mat<E> scale(const Mat<E>& m, const Rat& r) {
    return m.scaled(r);
}

template <class E>
bool is_zero_elem(const Mat<E>& m) {
    return m.is_zero();
}

template <class E>
Mat<E> identity_mat(int n, const E& one_sample) {
    Mat<E> r = Mat<E>::filled(n, n, zero_like(one_sample));
    for (int i = 0; i < n; ++i) r.at(i, i) = one_sample;
    return r;
}

template <class E>
E trace(const Mat<E>& m) {
    if (!m.square()) throw shape_error("trace needs a square matrix");
    E acc = zero_like(m.sample());
    for (int i = 0; i < m.rows(); ++i) acc = acc + m.at(i, i);
    return acc;
}

using NCMatrix = Mat<Poly>;

inline RingPtr ring_of(const NCMatrix& m) {
    RingPtr r = m.sample().ring();
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) require_same_ring(r, m.at(i, j).ring());
    return r;
}

inline NCMatrix mat_of_gens(const RingPtr& r, int n, int m,
                            const std::string& prefix = "M") {
    std::vector<Poly> v;
    v.reserve(static_cast<std::size_t>(n) * m);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= m; ++j) v.push_back(Poly::gen(r, grid_name(prefix, i, j)));
    return NCMatrix(n, m, std::move(v));
}

inline NCMatrix mat_of_rationals(const RingPtr& r, int n, int m,
                                 const std::vector<Rat>& vals) {
    std::vector<Poly> v;
    v.reserve(vals.size());
    for (auto& x : vals) v.push_back(Poly::constant(r, x));
    return NCMatrix(n, m, std::move(v));
}

// ---------------------------------------------------------------------------
// Permutation helpers.
// ---------------------------------------------------------------------------

namespace detail {

inline int permutation_sign(std::vector<int> p) {
    int sign = 1;
    for (std::size_t i = 0; i < p.size(); ++i)
        while (p[i] != static_cast<int>(i)) {
            std::swap(p[i], p[p[i]]);
            sign = -sign;
        }
    return sign;
}

template <class F>
void for_each_permutation(int n, F&& body) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    do {
        body(const_cast<const std::vector<int>&>(p));
    } while (std::next_permutation(p.begin(), p.end()));
}

} // namespace detail

enum class DetStrategy { automatic, laplace, permutation };

// Column determinant: sum over permutations of signed products with the
// factors ordered column by column, first column leftmost.
//   det^col M = sum_sigma sgn(sigma) M[sigma(1),1] M[sigma(2),2] ...
// The Laplace route expands along the leftmost remaining column and memoizes
// on the surviving row set, which shares normal-form work between cofactors;
// the permutation sum is kept as the direct route (and is the default for
// small sizes).
template <class E>
E det_col(const Mat<E>& m, DetStrategy strategy = DetStrategy::automatic) {
    if (!m.square()) throw shape_error("determinant needs a square matrix");
    const int n = m.rows();
    if (n == 0) throw shape_error("0x0 determinant needs a ring context");
    if (strategy == DetStrategy::automatic)
        strategy = n <= 3 ? DetStrategy::permutation : DetStrategy::laplace;
    if (strategy == DetStrategy::permutation) {
        E acc = zero_like(m.sample());
        detail::for_each_permutation(n, [&](const std::vector<int>& p) {
            E term = m.at(p[0], 0);
            for (int j = 1; j < n; ++j) term = term * m.at(p[j], j);
            int s = detail::permutation_sign(p);
            acc = acc + (s > 0 ? term : -term);
        });
        return acc;
    }
    // memoized first-column Laplace; key = bitmask of surviving rows
    std::unordered_map<std::uint64_t, E> memo;
    std::vector<int> rows(n);
    std::iota(rows.begin(), rows.end(), 0);
    std::function<E(std::uint64_t, int)> go = [&](std::uint64_t mask, int col) -> E {
        auto it = memo.find(mask);
        if (it != memo.end()) return it->second;
        std::vector<int> live;
        for (int i = 0; i < n; ++i)
            if (mask & (1ull << i)) live.push_back(i);
        E acc = zero_like(m.sample());
        if (live.empty()) {
            acc = one_like(m.sample());
        } else {
            for (std::size_t pos = 0; pos < live.size(); ++pos) {
                E sub = go(mask & ~(1ull << live[pos]), col + 1);
                E term = m.at(live[pos], col) * sub;
                acc = acc + (pos % 2 == 0 ? term : -term);
            }
        }
        memo.emplace(mask, acc);
        return acc;
    };
    return go((n == 64 ? ~0ull : ((1ull << n) - 1)), 0);
}

// det^col with columns processed in the given order (0-based permutation):
//   sum_sigma sgn(sigma) prod_i M[sigma(order[i]), order[i]].
template <class E>
E det_col_ordered(const Mat<E>& m, const std::vector<int>& order,
                  DetStrategy strategy = DetStrategy::automatic) {
    if (!m.square()) throw shape_error("determinant needs a square matrix");
    const int n = m.rows();
    if (static_cast<int>(order.size()) != n)
        throw shape_error("column order has wrong length");
    std::vector<int> all(n);
    std::iota(all.begin(), all.end(), 0);
    Mat<E> permuted = m.submatrix(all, order);
    int s = detail::permutation_sign(order);
    E d = det_col(permuted, strategy);
    return s > 0 ? d : -d;
}

template <class E>
E det_col_reverse(const Mat<E>& m, DetStrategy strategy = DetStrategy::automatic) {
    std::vector<int> order(m.rows());
    for (int i = 0; i < m.rows(); ++i) order[i] = m.rows() - 1 - i;
    return det_col_ordered(m, order, strategy);
}

// Row determinant: factors ordered row by row, first row leftmost.
template <class E>
E det_row(const Mat<E>& m, DetStrategy strategy = DetStrategy::automatic) {
    return det_col(m.transpose(), strategy);
}

// Row permanent: unsigned permutation sum, factors row by row (optionally in
// a caller-chosen row order).
template <class E>
E permanent_row(const Mat<E>& m) {
    if (!m.square()) throw shape_error("permanent needs a square matrix");
    const int n = m.rows();
    E acc = zero_like(m.sample());
    detail::for_each_permutation(n, [&](const std::vector<int>& p) {
        E term = m.at(0, p[0]);
        for (int i = 1; i < n; ++i) term = term * m.at(i, p[i]);
        acc = acc + term;
    });
    return acc;
}

template <class E>
E permanent_row_ordered(const Mat<E>& m, const std::vector<int>& row_order) {
    if (!m.square()) throw shape_error("permanent needs a square matrix");
    const int n = m.rows();
    E acc = zero_like(m.sample());
    detail::for_each_permutation(n, [&](const std::vector<int>& p) {
        E term = m.at(row_order[0], p[row_order[0]]);
        for (int i = 1; i < n; ++i) term = term * m.at(row_order[i], p[row_order[i]]);
        acc = acc + term;
    });
    return acc;
}

// Column permanent: unsigned, factors column by column.
template <class E>
E permanent_col(const Mat<E>& m) {
    return permanent_row(m.transpose());
}

} // namespace manin
