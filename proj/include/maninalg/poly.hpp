#pragma once

#include <sstream>
#include <string>
#include <utility>

#include "maninalg/ring.hpp"

namespace manin {

// Element of a quotient algebra, kept in normal form at all times, so
// equality is table equality.
class Poly {
public:
    Poly() = default; // invalid until assigned; every factory takes a ring

    static Poly zero(RingPtr r) { return Poly(std::move(r), TermMap{}); }

    static Poly constant(RingPtr r, const Rat& v) {
        TermMap t;
        add_term(t, Word{}, Coeff::of(v));
        return Poly(std::move(r), std::move(t));
    }

    static Poly one(RingPtr r) { return constant(std::move(r), Rat(1)); }

    static Poly q_power(RingPtr r, int e, const Rat& scale = Rat(1)) {
        if (!r->is_q_ring() && e != 0)
            throw precondition_error("q power in non-q ring " + r->descriptor());
        TermMap t;
        add_term(t, Word{}, Coeff::q_mono(scale, e));
        return Poly(std::move(r), std::move(t));
    }

    static Poly gen(RingPtr r, GenId g) {
        TermMap t;
        add_term(t, Word::single(g), Coeff::of(Rat(1)));
        return Poly(std::move(r), std::move(t));
    }

    static Poly gen(const RingPtr& r, const std::string& name) {
        return gen(r, r->gen(name));
    }

    // Terms are normalized against the ring's rewrite system.
    static Poly from_terms(RingPtr r, const TermMap& raw) {
        TermMap nf = r->rewriter().normal_form(raw);
        return Poly(std::move(r), std::move(nf));
    }

    const RingPtr& ring() const { return ring_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    bool is_one() const {
        return terms_.size() == 1 && terms_.begin()->first.empty() &&
               terms_.begin()->second == Coeff::of(Rat(1));
    }

    std::size_t term_count() const { return terms_.size(); }

    std::size_t degree() const {
        // words iterate shortest first
        return terms_.empty() ? 0 : terms_.rbegin()->first.size();
    }

    Poly operator+(const Poly& o) const {
        require_same_ring(ring_, o.ring_);
        TermMap t = terms_;
        for (auto& [w, c] : o.terms_) add_term(t, w, c);
        return Poly(ring_, std::move(t));
    }

    Poly operator-() const {
        TermMap t;
        for (auto& [w, c] : terms_) t.emplace(w, -c);
        return Poly(ring_, std::move(t));
    }

    Poly operator-(const Poly& o) const { return *this + (-o); }

    Poly operator*(const Poly& o) const {
        require_same_ring(ring_, o.ring_);
        const auto& rw = ring_->rewriter();
        TermMap out;
        for (auto& [w1, c1] : terms_)
            for (auto& [w2, c2] : o.terms_) {
                Word w = w1.concat(w2);
                if (w.size() > rw.word_cap())
                    throw resource_limit_error(
                        "product word length " + std::to_string(w.size()) +
                        " exceeds cap " + std::to_string(rw.word_cap()));
                Coeff c = c1 * c2;
                auto nf = rw.normal_form_word(w);
                for (auto& [w3, c3] : *nf) add_term(out, w3, c3 * c);
            }
        return Poly(ring_, std::move(out));
    }

    Poly scaled(const Rat& r) const {
        if (r == 0) return zero(ring_);
        TermMap t;
        for (auto& [w, c] : terms_) t.emplace(w, c * r);
        return Poly(ring_, std::move(t));
    }

    Poly scaled_coeff(const Coeff& k) const {
        TermMap t;
        for (auto& [w, c] : terms_) add_term(t, w, c * k);
        return Poly(ring_, std::move(t));
    }

    // Substitute a rational value for the central parameter q.
    Poly eval_q(const Rat& qv) const {
        TermMap t;
        for (auto& [w, c] : terms_) add_term(t, w, c.eval_q(qv));
        return Poly(ring_, std::move(t));
    }

    friend bool operator==(const Poly& a, const Poly& b) {
        require_same_ring(a.ring_, b.ring_);
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    // Canonical rendering: terms in word order (length, then lex), rationals
    // as p/q, generator names joined by middle dots. This is the golden-file
    // format, so it must stay stable.
    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto& [w, c] : terms_) {
            for (auto& [qe, r] : c.t) {
                bool neg = r < 0;
                Rat mag = neg ? Rat(-r) : r;
                if (first) {
                    if (neg) os << "-";
                    first = false;
                } else {
                    os << (neg ? " - " : " + ");
                }
                os << rat_str(mag);
                if (qe != 0) {
                    os << "·q";
                    if (qe != 1) os << "^" << qe;
                }
                for (GenId g : w.g) os << "·" << ring_->gen_name(g);
            }
        }
        return os.str();
    }

private:
    Poly(RingPtr r, TermMap t) : ring_(std::move(r)), terms_(std::move(t)) {}

    RingPtr ring_;
    TermMap terms_;
};

inline Poly operator*(const Rat& r, const Poly& p) { return p.scaled(r); }

inline Poly commutator(const Poly& p, const Poly& q) { return p * q - q * p; }

inline Poly gen_poly(const RingPtr& r, const std::string& name) {
    return Poly::gen(r, name);
}

} // namespace manin
