#pragma once

#include <cstdlib>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "maninalg/coeff.hpp"
#include "maninalg/errors.hpp"
#include "maninalg/word.hpp"

namespace manin {

// Normalized term table: canonical word order, no zero coefficients.
using TermMap = std::map<Word, Coeff, WordLess>;

inline void add_term(TermMap& m, const Word& w, const Coeff& c) {
    if (c.is_zero()) return;
    auto it = m.find(w);
    if (it == m.end()) {
        m.emplace(w, c);
    } else {
        it->second.add_inplace(c);
        if (it->second.is_zero()) m.erase(it);
    }
}

struct GenInfo {
    std::string name;
};

// One straightening rule: a length-2 left-hand side rewritten to a smaller
// polynomial. All shipped presets use length-2 sides; the invariant enforced
// at insertion is that every rhs word is strictly below the lhs in the
// length-lex term order, which makes rewriting terminate outright.
struct RewriteRule {
    GenId a{}, b{};
    std::vector<std::pair<Word, Coeff>> rhs;
};

inline std::size_t default_word_cap() {
    if (const char* env = std::getenv("MANIN_WORD_CAP")) {
        long v = std::strtol(env, nullptr, 10);
        if (v >= 2) return static_cast<std::size_t>(v);
    }
    return 24;
}

struct DivergentPair {
    Word overlap;
    TermMap left_normal_form;
    TermMap right_normal_form;
};

struct ConfluenceReport {
    std::size_t overlaps_checked = 0;
    std::vector<DivergentPair> divergent;
    bool confluent() const { return divergent.empty(); }
};

class RewriteSystem {
public:
    RewriteSystem(std::vector<GenInfo> alphabet, std::vector<RewriteRule> rules,
                  bool allow_q = false)
        : alphabet_(std::move(alphabet)),
          rules_(std::move(rules)),
          allow_q_(allow_q),
          word_cap_(default_word_cap()) {
        std::set<std::string> names;
        for (auto& g : alphabet_)
            if (!names.insert(g.name).second)
                throw construction_error("duplicate generator name '" + g.name + "'");
        const std::size_t G = alphabet_.size();
        pair_rule_.assign(G * G, -1);
        for (std::size_t i = 0; i < rules_.size(); ++i) {
            validate_rule(rules_[i]);
            int& slot = pair_rule_[rules_[i].a * G + rules_[i].b];
            if (slot < 0) slot = static_cast<int>(i);
            // a duplicate lhs stays in rules_ so the confluence check sees it
        }
    }

    RewriteSystem(const RewriteSystem&) = delete;
    RewriteSystem& operator=(const RewriteSystem&) = delete;

    std::size_t generator_count() const { return alphabet_.size(); }
    const std::string& gen_name(GenId g) const { return alphabet_[g].name; }
    const std::vector<RewriteRule>& rules() const { return rules_; }
    bool allows_q() const { return allow_q_; }
    std::size_t word_cap() const { return word_cap_; }

    int gen_index(const std::string& name) const {
        for (std::size_t i = 0; i < alphabet_.size(); ++i)
            if (alphabet_[i].name == name) return static_cast<int>(i);
        return -1;
    }

    // Leftmost redex position in w, or -1 if w is in normal form.
    int first_redex(const Word& w) const {
        const std::size_t G = alphabet_.size();
        for (std::size_t i = 0; i + 1 < w.g.size(); ++i)
            if (pair_rule_[w.g[i] * G + w.g[i + 1]] >= 0) return static_cast<int>(i);
        return -1;
    }

    bool is_normal(const Word& w) const { return first_redex(w) < 0; }

    // Exhaustive leftmost-innermost reduction of a single word, memoized.
    std::shared_ptr<const TermMap> normal_form_word(const Word& w) const {
        if (w.size() > word_cap_)
            throw resource_limit_error("word length " + std::to_string(w.size()) +
                                       " exceeds cap " + std::to_string(word_cap_));
        {
            std::lock_guard<std::mutex> lk(memo_mx_);
            auto it = memo_.find(w);
            if (it != memo_.end()) return it->second;
        }
        auto result = std::make_shared<TermMap>(reduce(w));
        std::lock_guard<std::mutex> lk(memo_mx_);
        auto [it, inserted] = memo_.emplace(w, result);
        return it->second;
    }

    TermMap normal_form(const TermMap& in) const {
        TermMap out;
        for (auto& [w, c] : in) {
            auto nf = normal_form_word(w);
            for (auto& [w2, c2] : *nf) add_term(out, w2, c2 * c);
        }
        return out;
    }

    // Bounded diamond self-test. Every way two rule instances can share a
    // letter is completed to normal form along both reduction orders; a
    // disagreement is reported, never "fixed".
    ConfluenceReport check_local_confluence(int max_overlap_len) const {
        if (max_overlap_len < 3)
            throw precondition_error("confluence check needs overlap bound >= 3");
        ConfluenceReport rep;
        // duplicate left-hand sides (overlap of length 2)
        for (std::size_t i = 0; i < rules_.size(); ++i)
            for (std::size_t j = i + 1; j < rules_.size(); ++j) {
                if (rules_[i].a != rules_[j].a || rules_[i].b != rules_[j].b) continue;
                ++rep.overlaps_checked;
                Word w(std::vector<GenId>{rules_[i].a, rules_[i].b});
                TermMap l = normal_form(apply_rule(w, 0, rules_[i]));
                TermMap r = normal_form(apply_rule(w, 0, rules_[j]));
                if (l != r) rep.divergent.push_back({w, std::move(l), std::move(r)});
            }
        // one-letter overlaps x y z with rules on (x,y) and (y,z)
        for (const auto& r1 : rules_)
            for (const auto& r2 : rules_) {
                if (r1.b != r2.a) continue;
                ++rep.overlaps_checked;
                Word w(std::vector<GenId>{r1.a, r1.b, r2.b});
                TermMap l = normal_form(apply_rule(w, 0, r1));
                TermMap r = normal_form(apply_rule(w, 1, r2));
                if (l != r) rep.divergent.push_back({w, std::move(l), std::move(r)});
            }
        return rep;
    }

    // Number of normal words of the given length (graded-component dimension
    // of the quotient algebra when the system is confluent).
    unsigned long count_irreducible_words(int length) const {
        if (length == 0) return 1;
        const std::size_t G = alphabet_.size();
        // DP over the last letter.
        std::vector<unsigned long> cur(G, 1);
        for (int step = 1; step < length; ++step) {
            std::vector<unsigned long> next(G, 0);
            for (std::size_t b = 0; b < G; ++b)
                for (std::size_t a = 0; a < G; ++a)
                    if (pair_rule_[a * G + b] < 0) next[b] += cur[a];
            cur.swap(next);
        }
        unsigned long total = 0;
        for (std::size_t a = 0; a < G; ++a) total += cur[a];
        return total;
    }

private:
    void validate_rule(const RewriteRule& r) const {
        if (r.a >= alphabet_.size() || r.b >= alphabet_.size())
            throw construction_error("rule references unknown generator");
        Word lhs(std::vector<GenId>{r.a, r.b});
        WordLess less;
        for (auto& [w, c] : r.rhs) {
            if (!less(w, lhs))
                throw construction_error("rule rhs word not below lhs in term order");
            if (c.uses_q() && !allow_q_)
                throw construction_error("q coefficient in a non-q system");
        }
    }

    static TermMap apply_rule(const Word& w, std::size_t pos, const RewriteRule& r) {
        TermMap out;
        Word prefix = w.slice(0, pos);
        Word suffix = w.slice(pos + 2, w.size());
        for (auto& [rw, rc] : r.rhs)
            add_term(out, prefix.concat(rw).concat(suffix), rc);
        return out;
    }

    TermMap reduce(const Word& w) const {
        int pos = first_redex(w);
        if (pos < 0) {
            TermMap t;
            t.emplace(w, Coeff::of(Rat(1)));
            return t;
        }
        const std::size_t G = alphabet_.size();
        const RewriteRule& rule =
            rules_[pair_rule_[w.g[pos] * G + w.g[pos + 1]]];
        TermMap out;
        for (auto& [w2, c2] : apply_rule(w, pos, rule)) {
            auto nf = normal_form_word(w2); // strictly smaller in term order
            for (auto& [w3, c3] : *nf) add_term(out, w3, c3 * c2);
        }
        return out;
    }

    std::vector<GenInfo> alphabet_;
    std::vector<RewriteRule> rules_;
    std::vector<int> pair_rule_;
    bool allow_q_;
    std::size_t word_cap_;

    mutable std::mutex memo_mx_;
    mutable std::unordered_map<Word, std::shared_ptr<const TermMap>, WordHash> memo_;
};

} // namespace manin
