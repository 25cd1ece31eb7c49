#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace manin {

using GenId = std::uint16_t;

// A noncommutative monomial: a finite sequence of generators. The empty word
// is the multiplicative identity.
struct Word {
    std::vector<GenId> g;

    Word() = default;
    explicit Word(std::vector<GenId> v) : g(std::move(v)) {}
    static Word single(GenId a) { return Word(std::vector<GenId>{a}); }

    std::size_t size() const { return g.size(); }
    bool empty() const { return g.empty(); }

    Word concat(const Word& other) const {
        Word w;
        w.g.reserve(g.size() + other.g.size());
        w.g.insert(w.g.end(), g.begin(), g.end());
        w.g.insert(w.g.end(), other.g.begin(), other.g.end());
        return w;
    }

    // Factor [from, to).
    Word slice(std::size_t from, std::size_t to) const {
        return Word(std::vector<GenId>(g.begin() + from, g.begin() + to));
    }

    friend bool operator==(const Word& a, const Word& b) { return a.g == b.g; }
    friend bool operator!=(const Word& a, const Word& b) { return a.g != b.g; }
};

// Canonical term order: length first, then lexicographic by generator index.
// Every polynomial table iterates in this order, which is also the rewrite
// termination order.
struct WordLess {
    bool operator()(const Word& a, const Word& b) const {
        if (a.g.size() != b.g.size()) return a.g.size() < b.g.size();
        return a.g < b.g;
    }
};

struct WordHash {
    std::size_t operator()(const Word& w) const {
        std::size_t h = 1469598103934665603ull;
        for (GenId x : w.g) {
            h ^= static_cast<std::size_t>(x) + 1;
            h *= 1099511628211ull;
        }
        return h;
    }
};

} // namespace manin
