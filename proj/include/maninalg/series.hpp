#pragma once

#include <string>
#include <vector>

#include "maninalg/poly.hpp"

namespace manin {

// Ring-element helpers shared by the generic algorithms. Each algebraic
// carrier (Poly, Series, Mat, plain rationals) supplies zero_like/one_like
// pattern values and scaling by an exact rational.
inline Poly zero_like(const Poly& p) { return Poly::zero(p.ring()); }
inline Poly one_like(const Poly& p) { return Poly::one(p.ring()); }
inline Poly scale(const Poly& p, const Rat& r) { return p.scaled(r); }
inline bool is_zero_elem(const Poly& p) { return p.is_zero(); }

inline Rat zero_like(const Rat&) { return Rat(0); }
inline Rat one_like(const Rat&) { return Rat(1); }
inline Rat scale(const Rat& v, const Rat& r) { return Rat(v * r); }
inline bool is_zero_elem(const Rat& v) { return v == 0; }

// Truncated power series in one central formal parameter ("t" or "eps").
// Exact modulo degree D+1: the degree-k coefficient of any product depends
// only on coefficients <= k of the factors. Coefficients may themselves be
// polynomials or whole matrices.
template <class T>
class Series {
public:
    Series(std::string param, std::vector<T> coeffs)
        : param_(std::move(param)), c_(std::move(coeffs)) {
        if (c_.empty()) throw precondition_error("series needs degree >= 0");
    }

    static Series constant(std::string param, int degree, const T& value) {
        std::vector<T> c;
        c.reserve(degree + 1);
        c.push_back(value);
        for (int k = 1; k <= degree; ++k) c.push_back(zero_like(value));
        return Series(std::move(param), std::move(c));
    }

    // value * param^shift
    static Series monomial(std::string param, int degree, const T& value, int shift) {
        Series s = constant(param, degree, zero_like(value));
        if (shift <= degree) s.c_[shift] = value;
        s.param_ = std::move(param);
        return s;
    }

    const std::string& param() const { return param_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const T& operator[](int k) const { return c_[k]; }
    T& operator[](int k) { return c_[k]; }
    const std::vector<T>& coeffs() const { return c_; }

    bool is_zero() const {
        for (auto& x : c_)
            if (!is_zero_elem(x)) return false;
        return true;
    }

    Series truncated(int new_degree) const {
        if (new_degree > degree())
            throw precondition_error("cannot extend a truncated series");
        return Series(param_, std::vector<T>(c_.begin(), c_.begin() + new_degree + 1));
    }

    Series operator+(const Series& o) const {
        check_compatible(o);
        std::vector<T> c;
        c.reserve(c_.size());
        for (std::size_t k = 0; k < c_.size(); ++k) c.push_back(c_[k] + o.c_[k]);
        return Series(param_, std::move(c));
    }

    Series operator-() const {
        std::vector<T> c;
        c.reserve(c_.size());
        for (auto& x : c_) c.push_back(-x);
        return Series(param_, std::move(c));
    }

    Series operator-(const Series& o) const { return *this + (-o); }

    // Cauchy product; the order of the factors is preserved coefficientwise.
    Series operator*(const Series& o) const {
        check_compatible(o);
        std::vector<T> c;
        c.reserve(c_.size());
        for (int k = 0; k <= degree(); ++k) {
            T acc = zero_like(c_[0]);
            for (int j = 0; j <= k; ++j) acc = acc + c_[j] * o.c_[k - j];
            c.push_back(std::move(acc));
        }
        return Series(param_, std::move(c));
    }

    Series scaled(const Rat& r) const {
        std::vector<T> c;
        c.reserve(c_.size());
        for (auto& x : c_) c.push_back(scale(x, r));
        return Series(param_, std::move(c));
    }

private:
    void check_compatible(const Series& o) const {
        if (param_ != o.param_)
            throw shape_error("series parameter mismatch: " + param_ + " vs " + o.param_);
        if (c_.size() != o.c_.size())
            throw shape_error("series truncation degree mismatch");
    }

    std::string param_;
    std::vector<T> c_;
};

template <class T>
Series<T> zero_like(const Series<T>& s) {
    return Series<T>::constant(s.param(), s.degree(), zero_like(s[0]));
}

template <class T>
Series<T> one_like(const Series<T>& s) {
    return Series<T>::constant(s.param(), s.degree(), one_like(s[0]));
}

template <class T>
Series<T> scale(const Series<T>& s, const Rat& r) {
    return s.scaled(r);
}

template <class T>
bool is_zero_elem(const Series<T>& s) {
    return s.is_zero();
}

template <class T>
bool is_one_elem(const T& x) {
    return is_zero_elem(x - one_like(x));
}

// Two-sided inverse of a series with unit constant term, by the recursion
// g_k = -sum_{j>=1} f_j g_{k-j}.
template <class T>
Series<T> series_inverse(const Series<T>& f) {
    if (!is_one_elem(f[0]))
        throw precondition_error("series inverse needs constant term 1");
    std::vector<T> g;
    g.reserve(f.degree() + 1);
    g.push_back(one_like(f[0]));
    for (int k = 1; k <= f.degree(); ++k) {
        T acc = zero_like(f[0]);
        for (int j = 1; j <= k; ++j) acc = acc + f[j] * g[k - j];
        g.push_back(-acc);
    }
    return Series<T>(f.param(), std::move(g));
}

// Termwise d/dparam; output truncation drops by one.
template <class T>
Series<T> series_derivative(const Series<T>& f) {
    if (f.degree() == 0)
        return Series<T>::constant(f.param(), 0, zero_like(f[0]));
    std::vector<T> c;
    c.reserve(f.degree());
    for (int k = 1; k <= f.degree(); ++k) c.push_back(scale(f[k], Rat(k)));
    return Series<T>(f.param(), std::move(c));
}

// exp(f) = sum f^k / k!, requires zero constant term.
template <class T>
Series<T> exp_series(const Series<T>& f) {
    if (!is_zero_elem(f[0]))
        throw precondition_error("exp needs zero constant term");
    Series<T> acc = one_like(f);
    Series<T> pw = one_like(f);
    Rat fact(1);
    for (int k = 1; k <= f.degree(); ++k) {
        pw = pw * f;
        fact *= k;
        acc = acc + pw.scaled(Rat(1) / fact);
    }
    return acc;
}

// log(f) = sum (-1)^{k+1} (f-1)^k / k, requires constant term 1.
template <class T>
Series<T> log_series(const Series<T>& f) {
    if (!is_one_elem(f[0]))
        throw precondition_error("log needs constant term 1");
    Series<T> u = f - one_like(f);
    Series<T> acc = zero_like(f);
    Series<T> pw = one_like(f);
    for (int k = 1; k <= f.degree(); ++k) {
        pw = pw * u;
        acc = acc + pw.scaled(Rat(k % 2 == 1 ? 1 : -1) / Rat(k));
    }
    return acc;
}

} // namespace manin
