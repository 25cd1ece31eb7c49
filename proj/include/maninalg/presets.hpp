#pragma once

#include <functional>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "maninalg/poly.hpp"
#include "maninalg/ring.hpp"

namespace manin {

namespace detail {

struct RuleSpec {
    std::vector<std::string> lhs; // two generator names
    std::vector<std::pair<std::vector<std::string>, Coeff>> rhs;
};

inline RingPtr make_ring(std::string desc, std::vector<GenInfo> alphabet,
                         const std::vector<RuleSpec>& specs, bool q_ring = false,
                         bool commutative = false, bool self_test = true) {
    auto index = [&](const std::string& n) -> GenId {
        for (std::size_t i = 0; i < alphabet.size(); ++i)
            if (alphabet[i].name == n) return static_cast<GenId>(i);
        throw construction_error("rule references unknown generator '" + n + "'");
    };
    std::vector<RewriteRule> rules;
    rules.reserve(specs.size());
    for (auto& s : specs) {
        RewriteRule r;
        r.a = index(s.lhs.at(0));
        r.b = index(s.lhs.at(1));
        for (auto& [ws, c] : s.rhs) {
            Word w;
            for (auto& n : ws) w.g.push_back(index(n));
            r.rhs.emplace_back(std::move(w), c);
        }
        rules.push_back(std::move(r));
    }
    auto ring = std::make_shared<Ring>(std::move(desc), std::move(alphabet),
                                       std::move(rules), q_ring, commutative);
    if (self_test) {
        auto rep = ring->rewriter().check_local_confluence(3);
        if (!rep.confluent())
            throw construction_error("preset " + ring->descriptor() +
                                     " failed the confluence self-test (" +
                                     std::to_string(rep.divergent.size()) +
                                     " divergent critical pairs)");
    }
    return ring;
}

inline Coeff c1() { return Coeff::of(Rat(1)); }
inline Coeff cm1() { return Coeff::of(Rat(-1)); }

} // namespace detail

// ---------------------------------------------------------------------------
// Matrix-generator presets. Generators are named prefix[i,j], 1-based.
// ---------------------------------------------------------------------------

inline RingPtr make_free_matrix_ring(int n, int m, const std::string& prefix = "M") {
    std::vector<GenInfo> al;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= m; ++j) al.push_back({grid_name(prefix, i, j)});
    return detail::make_ring("free(" + std::to_string(n) + "," + std::to_string(m) + ")",
                             std::move(al), {});
}

inline RingPtr make_commutative_matrix_ring(int n, int m,
                                            const std::string& prefix = "M") {
    std::vector<GenInfo> al;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= m; ++j) al.push_back({grid_name(prefix, i, j)});
    std::vector<detail::RuleSpec> rules;
    for (std::size_t a = 0; a < al.size(); ++a)
        for (std::size_t b = 0; b < a; ++b)
            rules.push_back({{al[a].name, al[b].name},
                             {{{al[b].name, al[a].name}, detail::c1()}}});
    return detail::make_ring(
        "commutative(" + std::to_string(n) + "," + std::to_string(m) + ")",
        std::move(al), rules, false, true);
}

// Entries from different rows commute; no relation inside a row.
inline RingPtr make_cartier_foata(int n, int m, const std::string& prefix = "M") {
    std::vector<GenInfo> al;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= m; ++j) al.push_back({grid_name(prefix, i, j)});
    std::vector<detail::RuleSpec> rules;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= m; ++j)
            for (int k = 1; k < i; ++k)
                for (int l = 1; l <= m; ++l)
                    rules.push_back({{grid_name(prefix, i, j), grid_name(prefix, k, l)},
                                     {{{grid_name(prefix, k, l), grid_name(prefix, i, j)},
                                       detail::c1()}}});
    return detail::make_ring(
        "cartier_foata(" + std::to_string(n) + "," + std::to_string(m) + ")",
        std::move(al), rules);
}

// Generic Manin straightening. Generators ordered by (row, column); same-column
// pairs sort plainly, descending cross pairs with both indices descending
// straighten through the cross-commutator relation; descending-row pairs with
// ascending columns are irreducible basis words.
//   M_kj·M_ij -> M_ij·M_kj                                (k>i)
//   M_kl·M_ij -> M_ij·M_kl - M_kj·M_il + M_il·M_kj        (k>i, l>j)
// The optional q deformation straightens the same basis:
//   M_kj·M_ij -> q·M_ij·M_kj
//   M_kl·M_ij -> M_ij·M_kl - q^{-1}·M_kj·M_il + q·M_il·M_kj
inline RingPtr make_manin_generic(int n, int m, const std::string& prefix = "M",
                                  bool q_deformed = false) {
    std::vector<GenInfo> al;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= m; ++j) al.push_back({grid_name(prefix, i, j)});
    std::vector<detail::RuleSpec> rules;
    auto N = [&](int i, int j) { return grid_name(prefix, i, j); };
    for (int i = 1; i <= n; ++i)
        for (int k = i + 1; k <= n; ++k) {
            for (int j = 1; j <= m; ++j)
                rules.push_back({{N(k, j), N(i, j)},
                                 {{{N(i, j), N(k, j)},
                                   q_deformed ? Coeff::q_mono(Rat(1), 1) : detail::c1()}}});
            for (int j = 1; j <= m; ++j)
                for (int l = j + 1; l <= m; ++l)
                    rules.push_back(
                        {{N(k, l), N(i, j)},
                         {{{N(i, j), N(k, l)}, detail::c1()},
                          {{N(k, j), N(i, l)},
                           q_deformed ? Coeff::q_mono(Rat(-1), -1) : detail::cm1()},
                          {{N(i, l), N(k, j)},
                           q_deformed ? Coeff::q_mono(Rat(1), 1) : detail::c1()}}});
        }
    std::string base = q_deformed ? "q_manin_generic" : "manin_generic";
    return detail::make_ring(
        base + "(" + std::to_string(n) + "," + std::to_string(m) + ")", std::move(al),
        rules, q_deformed);
}

// Ring in which the *transpose* of the generic matrix is a Manin matrix:
// same-row entries commute and the cross relation pairs columns.
//   M_ps·M_pq -> M_pq·M_ps                                (s>q)
//   M_rs·M_pq -> M_pq·M_rs - M_ps·M_rq + M_rq·M_ps        (r>p, s>q)
inline RingPtr make_manin_generic_transpose(int n, int m,
                                            const std::string& prefix = "M") {
    std::vector<GenInfo> al;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= m; ++j) al.push_back({grid_name(prefix, i, j)});
    std::vector<detail::RuleSpec> rules;
    auto N = [&](int i, int j) { return grid_name(prefix, i, j); };
    for (int p = 1; p <= n; ++p)
        for (int q = 1; q <= m; ++q)
            for (int s = q + 1; s <= m; ++s)
                rules.push_back({{N(p, s), N(p, q)},
                                 {{{N(p, q), N(p, s)}, detail::c1()}}});
    for (int p = 1; p <= n; ++p)
        for (int r = p + 1; r <= n; ++r)
            for (int q = 1; q <= m; ++q)
                for (int s = q + 1; s <= m; ++s)
                    rules.push_back({{N(r, s), N(p, q)},
                                     {{{N(p, q), N(r, s)}, detail::c1()},
                                      {{N(p, s), N(r, q)}, detail::cm1()},
                                      {{N(r, q), N(p, s)}, detail::c1()}}});
    return detail::make_ring("manin_generic_transpose(" + std::to_string(n) + "," +
                                 std::to_string(m) + ")",
                             std::move(al), rules);
}

// ---------------------------------------------------------------------------
// Weyl-type presets.
// ---------------------------------------------------------------------------

// Weyl algebra on named coordinate/derivative pairs: coordinates commute,
// derivatives commute, d_a x_b = x_b d_a + delta_ab. Coordinates sort before
// derivatives.
inline RingPtr make_weyl_pairs(
    const std::vector<std::pair<std::string, std::string>>& pairs, std::string desc) {
    std::vector<GenInfo> al;
    const int N = static_cast<int>(pairs.size());
    for (auto& [x, d] : pairs) al.push_back({x});
    for (auto& [x, d] : pairs) al.push_back({d});
    std::vector<detail::RuleSpec> rules;
    for (int a = 0; a < N; ++a)
        for (int b = 0; b < a; ++b) {
            rules.push_back({{pairs[a].first, pairs[b].first},
                             {{{pairs[b].first, pairs[a].first}, detail::c1()}}});
            rules.push_back({{pairs[a].second, pairs[b].second},
                             {{{pairs[b].second, pairs[a].second}, detail::c1()}}});
        }
    for (int a = 0; a < N; ++a)
        for (int b = 0; b < N; ++b) {
            detail::RuleSpec s{{pairs[a].second, pairs[b].first},
                               {{{pairs[b].first, pairs[a].second}, detail::c1()}}};
            if (a == b) s.rhs.push_back({{}, detail::c1()});
            rules.push_back(std::move(s));
        }
    return detail::make_ring(std::move(desc), std::move(al), rules);
}

inline RingPtr make_weyl(int N) {
    std::vector<std::pair<std::string, std::string>> pairs;
    for (int i = 1; i <= N; ++i)
        pairs.emplace_back("x" + std::to_string(i), "d" + std::to_string(i));
    return make_weyl_pairs(pairs, "weyl(" + std::to_string(N) + ")");
}

// z, its inverse, and d/dz.
inline RingPtr make_laurent_weyl() {
    std::vector<GenInfo> al{{"z"}, {"zinv"}, {"dz"}};
    std::vector<detail::RuleSpec> rules{
        {{"z", "zinv"}, {{{}, detail::c1()}}},
        {{"zinv", "z"}, {{{}, detail::c1()}}},
        {{"dz", "z"}, {{{"z", "dz"}, detail::c1()}, {{}, detail::c1()}}},
        {{"dz", "zinv"},
         {{{"zinv", "dz"}, detail::c1()}, {{"zinv", "zinv"}, detail::cm1()}}},
    };
    return detail::make_ring("laurent_weyl", std::move(al), rules);
}

inline RingPtr make_grassmann(int N, const std::string& prefix = "psi") {
    std::vector<GenInfo> al;
    for (int i = 1; i <= N; ++i) al.push_back({prefix + std::to_string(i)});
    std::vector<detail::RuleSpec> rules;
    for (int i = 0; i < N; ++i) {
        rules.push_back({{al[i].name, al[i].name}, {}});
        for (int j = 0; j < i; ++j)
            rules.push_back({{al[i].name, al[j].name},
                             {{{al[j].name, al[i].name}, detail::cm1()}}});
    }
    return detail::make_ring("grassmann(" + std::to_string(N) + ")", std::move(al),
                             rules);
}

// PBW straightening of U(gl_n) on matrix units e[i,j].
inline RingPtr make_gl_pbw(int n) {
    std::vector<GenInfo> al;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) al.push_back({grid_name("e", i, j)});
    auto E = [&](int i, int j) { return grid_name("e", i, j); };
    std::vector<detail::RuleSpec> rules;
    for (int k = 1; k <= n; ++k)
        for (int l = 1; l <= n; ++l)
            for (int i = 1; i <= n; ++i)
                for (int j = 1; j <= n; ++j) {
                    if (std::make_pair(k, l) <= std::make_pair(i, j)) continue;
                    detail::RuleSpec s{{E(k, l), E(i, j)},
                                       {{{E(i, j), E(k, l)}, detail::c1()}}};
                    if (l == i) s.rhs.push_back({{E(k, j)}, detail::c1()});
                    if (j == k) s.rhs.push_back({{E(i, l)}, detail::cm1()});
                    rules.push_back(std::move(s));
                }
    return detail::make_ring("gl_pbw(" + std::to_string(n) + ")", std::move(al), rules);
}

// q-commuting coordinates: x_j x_i -> q x_i x_j for j > i.
inline RingPtr make_q_poly(int n, const std::string& prefix = "x") {
    std::vector<GenInfo> al;
    for (int i = 1; i <= n; ++i) al.push_back({prefix + std::to_string(i)});
    std::vector<detail::RuleSpec> rules;
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < j; ++i)
            rules.push_back({{al[j].name, al[i].name},
                             {{{al[i].name, al[j].name}, Coeff::q_mono(Rat(1), 1)}}});
    return detail::make_ring("q_poly(" + std::to_string(n) + ")", std::move(al), rules,
                             true);
}

// q-Grassmann variables: psi_i^2 = 0, psi_j psi_i = -q^{-1} psi_i psi_j (j>i).
inline RingPtr make_q_grassmann(int n, const std::string& prefix = "psi") {
    std::vector<GenInfo> al;
    for (int i = 1; i <= n; ++i) al.push_back({prefix + std::to_string(i)});
    std::vector<detail::RuleSpec> rules;
    for (int i = 0; i < n; ++i) {
        rules.push_back({{al[i].name, al[i].name}, {}});
        for (int j = 0; j < i; ++j)
            rules.push_back({{al[i].name, al[j].name},
                             {{{al[j].name, al[i].name}, Coeff::q_mono(Rat(-1), -1)}}});
    }
    return detail::make_ring("q_grassmann(" + std::to_string(n) + ")", std::move(al),
                             rules, true);
}

// Commutative polynomial ring C[x_i, p_i] with the symplectic bracket
// {p_i, x_j} = delta_ij attached.
inline RingPtr make_poisson_symplectic(int N) {
    std::vector<GenInfo> al;
    for (int i = 1; i <= N; ++i) al.push_back({"x" + std::to_string(i)});
    for (int i = 1; i <= N; ++i) al.push_back({"p" + std::to_string(i)});
    std::vector<detail::RuleSpec> rules;
    for (std::size_t a = 0; a < al.size(); ++a)
        for (std::size_t b = 0; b < a; ++b)
            rules.push_back({{al[a].name, al[b].name},
                             {{{al[b].name, al[a].name}, detail::c1()}}});
    auto ring = detail::make_ring("poisson_symplectic(" + std::to_string(N) + ")",
                                  std::move(al), rules, false, true);
    PoissonStructure ps;
    for (int i = 0; i < N; ++i) ps.xs.push_back(static_cast<GenId>(i));
    for (int i = 0; i < N; ++i) ps.ps.push_back(static_cast<GenId>(N + i));
    const_cast<Ring*>(ring.get())->set_poisson(std::move(ps));
    return ring;
}

// U(Heisenberg): w = [u, v] is central. Backs the toy product identity.
inline RingPtr make_heisenberg(const std::string& u = "u", const std::string& v = "v",
                               const std::string& w = "w") {
    std::vector<GenInfo> al{{u}, {v}, {w}};
    std::vector<detail::RuleSpec> rules{
        {{v, u}, {{{u, v}, detail::c1()}, {{w}, detail::cm1()}}},
        {{w, u}, {{{u, w}, detail::c1()}}},
        {{w, v}, {{{v, w}, detail::c1()}}},
    };
    return detail::make_ring("heisenberg", std::move(al), rules);
}

// ---------------------------------------------------------------------------
// Combinators.
// ---------------------------------------------------------------------------

enum class JoinKind { commuting, free_product };

// Disjoint union of two alphabets. Cross rules g2·g1 -> g1·g2 when commuting;
// none for a free product. Generator names must not clash.
inline RingPtr join_rings(const RingPtr& r1, const RingPtr& r2, JoinKind kind,
                          const std::string& desc) {
    std::vector<GenInfo> al;
    const std::size_t G1 = r1->generator_count();
    const std::size_t G2 = r2->generator_count();
    for (std::size_t i = 0; i < G1; ++i) al.push_back({r1->gen_name(static_cast<GenId>(i))});
    for (std::size_t i = 0; i < G2; ++i) al.push_back({r2->gen_name(static_cast<GenId>(i))});
    std::vector<RewriteRule> rules;
    for (auto r : r1->rewriter().rules()) rules.push_back(r);
    for (auto r : r2->rewriter().rules()) {
        r.a = static_cast<GenId>(r.a + G1);
        r.b = static_cast<GenId>(r.b + G1);
        for (auto& [w, c] : r.rhs)
            for (auto& g : w.g) g = static_cast<GenId>(g + G1);
        rules.push_back(std::move(r));
    }
    if (kind == JoinKind::commuting) {
        for (std::size_t b = 0; b < G2; ++b)
            for (std::size_t a = 0; a < G1; ++a) {
                RewriteRule r;
                r.a = static_cast<GenId>(G1 + b);
                r.b = static_cast<GenId>(a);
                r.rhs.push_back({Word(std::vector<GenId>{static_cast<GenId>(a),
                                                         static_cast<GenId>(G1 + b)}),
                                 Coeff::of(Rat(1))});
                rules.push_back(std::move(r));
            }
    }
    bool q = r1->is_q_ring() || r2->is_q_ring();
    bool comm = kind == JoinKind::commuting && r1->is_commutative() && r2->is_commutative();
    auto ring = std::make_shared<Ring>(desc, std::move(al), std::move(rules), q, comm);
    auto rep = ring->rewriter().check_local_confluence(3);
    if (!rep.confluent())
        throw construction_error("joined ring " + desc + " failed the confluence self-test");
    return ring;
}

inline RingPtr extend_poly_vars(const RingPtr& r, int k, const std::string& prefix) {
    std::vector<GenInfo> al;
    for (int i = 1; i <= k; ++i) al.push_back({prefix + std::to_string(i)});
    std::vector<detail::RuleSpec> rules;
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < a; ++b)
            rules.push_back({{al[a].name, al[b].name},
                             {{{al[b].name, al[a].name}, detail::c1()}}});
    auto vr = detail::make_ring("vars", std::move(al), rules, false, true);
    return join_rings(r, vr, JoinKind::commuting,
                      r->descriptor() + "⊗C[" + prefix + "1.." + prefix +
                          std::to_string(k) + "]");
}

inline RingPtr extend_grassmann_vars(const RingPtr& r, int k, const std::string& prefix) {
    return join_rings(r, make_grassmann(k, prefix), JoinKind::commuting,
                      r->descriptor() + "⊗Λ[" + prefix + "1.." + prefix +
                          std::to_string(k) + "]");
}

inline RingPtr extend_q_poly_vars(const RingPtr& r, int k, const std::string& prefix) {
    return join_rings(r, make_q_poly(k, prefix), JoinKind::commuting,
                      r->descriptor() + "⊗Cq[" + prefix + "]");
}

inline RingPtr extend_q_grassmann_vars(const RingPtr& r, int k,
                                       const std::string& prefix) {
    return join_rings(r, make_q_grassmann(k, prefix), JoinKind::commuting,
                      r->descriptor() + "⊗Λq[" + prefix + "]");
}

// ---------------------------------------------------------------------------
// Name-based registry (CLI ring selectors, config files).
// ---------------------------------------------------------------------------

inline RingPtr build_preset(const std::string& name, const std::vector<long>& params) {
    auto p = [&](std::size_t i, long dflt = -1) -> long {
        if (i < params.size()) return params[i];
        if (dflt >= 0) return dflt;
        throw precondition_error("preset " + name + " is missing parameter #" +
                                 std::to_string(i + 1));
    };
    if (name == "free") return make_free_matrix_ring(static_cast<int>(p(0)),
                                                     static_cast<int>(p(1, p(0))));
    if (name == "commutative")
        return make_commutative_matrix_ring(static_cast<int>(p(0)),
                                            static_cast<int>(p(1, p(0))));
    if (name == "cartier_foata")
        return make_cartier_foata(static_cast<int>(p(0)), static_cast<int>(p(1, p(0))));
    if (name == "manin_generic")
        return make_manin_generic(static_cast<int>(p(0)), static_cast<int>(p(1, p(0))));
    if (name == "manin_generic_transpose")
        return make_manin_generic_transpose(static_cast<int>(p(0)),
                                            static_cast<int>(p(1, p(0))));
    if (name == "q_manin_generic")
        return make_manin_generic(static_cast<int>(p(0)), static_cast<int>(p(1, p(0))),
                                  "M", true);
    if (name == "weyl") return make_weyl(static_cast<int>(p(0)));
    if (name == "laurent_weyl") return make_laurent_weyl();
    if (name == "grassmann") return make_grassmann(static_cast<int>(p(0)));
    if (name == "gl_pbw") return make_gl_pbw(static_cast<int>(p(0)));
    if (name == "q_poly") return make_q_poly(static_cast<int>(p(0)));
    if (name == "q_grassmann") return make_q_grassmann(static_cast<int>(p(0)));
    if (name == "poisson_symplectic") return make_poisson_symplectic(static_cast<int>(p(0)));
    if (name == "heisenberg") return make_heisenberg();
    throw precondition_error("unknown ring preset '" + name + "'");
}

// Accepts "manin_generic(2,2)", "weyl(4)", "laurent_weyl", ...
inline RingPtr parse_preset_spec(const std::string& spec) {
    auto open = spec.find('(');
    if (open == std::string::npos) return build_preset(spec, {});
    if (spec.back() != ')') throw parse_error("bad ring spec '" + spec + "'");
    std::string name = spec.substr(0, open);
    std::vector<long> params;
    std::string inner = spec.substr(open + 1, spec.size() - open - 2);
    std::size_t pos = 0;
    while (pos < inner.size()) {
        auto comma = inner.find(',', pos);
        std::string tok = inner.substr(pos, comma == std::string::npos ? std::string::npos
                                                                       : comma - pos);
        try {
            params.push_back(std::stol(tok));
        } catch (const std::exception&) {
            throw parse_error("bad ring parameter '" + tok + "' in '" + spec + "'");
        }
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return build_preset(name, params);
}

} // namespace manin
