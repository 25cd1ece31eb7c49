#pragma once

#include <map>
#include <string>

#include "maninalg/rational.hpp"

namespace manin {

// Scalar coefficient: an exact rational Laurent polynomial in the central
// deformation parameter q. For plain (non-q) rings every value is a single
// rational sitting at q-exponent 0. q is central by construction: it never
// enters Words, only coefficients.
struct Coeff {
    // q-exponent -> rational, no zero entries.
    std::map<int, Rat> t;

    Coeff() = default;

    static Coeff zero() { return Coeff(); }

    static Coeff of(const Rat& r) {
        Coeff c;
        if (r != 0) c.t.emplace(0, r);
        return c;
    }

    static Coeff q_mono(const Rat& r, int qexp) {
        Coeff c;
        if (r != 0) c.t.emplace(qexp, r);
        return c;
    }

    bool is_zero() const { return t.empty(); }

    bool is_rational() const {
        return t.empty() || (t.size() == 1 && t.begin()->first == 0);
    }

    Rat rational_part() const {
        auto it = t.find(0);
        return it == t.end() ? Rat(0) : it->second;
    }

    bool uses_q() const {
        for (auto& [e, r] : t)
            if (e != 0) return true;
        return false;
    }

    void add_inplace(const Coeff& other) {
        for (auto& [e, r] : other.t) {
            auto it = t.find(e);
            if (it == t.end()) {
                t.emplace(e, r);
            } else {
                it->second += r;
                if (it->second == 0) t.erase(it);
            }
        }
    }

    Coeff operator+(const Coeff& o) const {
        Coeff c = *this;
        c.add_inplace(o);
        return c;
    }

    Coeff operator-() const {
        Coeff c;
        for (auto& [e, r] : t) c.t.emplace(e, -r);
        return c;
    }

    Coeff operator-(const Coeff& o) const { return *this + (-o); }

    Coeff operator*(const Coeff& o) const {
        Coeff c;
        for (auto& [e1, r1] : t)
            for (auto& [e2, r2] : o.t) {
                Rat p = r1 * r2;
                if (p == 0) continue;
                auto it = c.t.find(e1 + e2);
                if (it == c.t.end()) {
                    c.t.emplace(e1 + e2, p);
                } else {
                    it->second += p;
                    if (it->second == 0) c.t.erase(it);
                }
            }
        return c;
    }

    Coeff operator*(const Rat& r) const { return *this * Coeff::of(r); }

    // Substitute a rational value for q.
    Coeff eval_q(const Rat& qv) const {
        Rat acc(0);
        for (auto& [e, r] : t) {
            Rat p = r;
            int n = e >= 0 ? e : -e;
            for (int i = 0; i < n; ++i) p = (e >= 0) ? Rat(p * qv) : Rat(p / qv);
            acc += p;
        }
        return Coeff::of(acc);
    }

    friend bool operator==(const Coeff& a, const Coeff& b) { return a.t == b.t; }
};

} // namespace manin
