#pragma once

#include <string>
#include <vector>

#include "maninalg/matrix.hpp"
#include "maninalg/presets.hpp"

namespace manin {

// Concrete matrices from the standard catalog: Capelli-type variable and
// derivative blocks, Gaudin-type rational Lax matrices, U(gl_n) Lax, rank-one
// and Cartier-Foata patterns. Each constructor returns the matrix together
// with the ring it lives in; every output is a Manin matrix (or has a Manin
// transpose where stated).
struct ModelMatrix {
    std::string kind;
    RingPtr ring;
    NCMatrix M;
};

inline ModelMatrix model_rank_one(int n) {
    std::vector<GenInfo> al;
    for (int i = 1; i <= n; ++i) al.push_back({"r" + std::to_string(i)});
    auto ring = std::make_shared<Ring>("free(r1..r" + std::to_string(n) + ")",
                                       std::move(al), std::vector<RewriteRule>{});
    std::vector<Poly> v;
    for (int i = 0; i < n; ++i)
        for (int j = 1; j <= n; ++j) v.push_back(Poly::gen(ring, "r" + std::to_string(j)));
    return {"rank_one", ring, NCMatrix(n, n, std::move(v))};
}

inline ModelMatrix model_cartier_foata_generic(int n) {
    auto ring = make_cartier_foata(n, n);
    return {"cartier_foata_generic", ring, mat_of_gens(ring, n, n)};
}

inline ModelMatrix model_manin_generic(int n) {
    auto ring = make_manin_generic(n, n);
    return {"manin_generic", ring, mat_of_gens(ring, n, n)};
}

inline ModelMatrix model_manin_generic_transpose(int n) {
    auto ring = make_manin_generic_transpose(n, n);
    return {"manin_generic_transpose", ring, mat_of_gens(ring, n, n)};
}

// Variables x[i,j] over a Weyl algebra with derivatives d[i,j]. The matrix of
// variables is n x m; the companion derivative matrix B is m x s with
// B[l,j] = d[j,l] so that [M_ij, B_kl] = -delta_jk delta_il.
struct CapelliPair {
    RingPtr ring;
    NCMatrix M; // n x m of x[i,j]
    NCMatrix B; // m x s of d[j,l]
};

inline RingPtr make_weyl_grid(int rows, int cols, const std::string& xprefix = "x",
                              const std::string& dprefix = "d") {
    std::vector<std::pair<std::string, std::string>> pairs;
    for (int i = 1; i <= rows; ++i)
        for (int j = 1; j <= cols; ++j)
            pairs.emplace_back(grid_name(xprefix, i, j), grid_name(dprefix, i, j));
    return make_weyl_pairs(pairs, "weyl(" + std::to_string(rows * cols) + ")");
}

inline CapelliPair model_capelli_xd(int n, int m, int s) {
    const int rows = std::max(n, s);
    RingPtr ring = make_weyl_grid(rows, m);
    std::vector<Poly> xv;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= m; ++j) xv.push_back(Poly::gen(ring, grid_name("x", i, j)));
    std::vector<Poly> dv;
    for (int l = 1; l <= m; ++l)
        for (int j = 1; j <= s; ++j) dv.push_back(Poly::gen(ring, grid_name("d", j, l)));
    return {ring, NCMatrix(n, m, std::move(xv)), NCMatrix(m, s, std::move(dv))};
}

// [[X, dY], [Y, dX]] over variables x[i,j], y[i,j]: a 2n x 2k Manin matrix.
inline ModelMatrix model_capelli_xy_block(int n, int k) {
    std::vector<std::pair<std::string, std::string>> pairs;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= k; ++j) pairs.emplace_back(grid_name("x", i, j), grid_name("dx", i, j));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= k; ++j) pairs.emplace_back(grid_name("y", i, j), grid_name("dy", i, j));
    RingPtr ring = make_weyl_pairs(pairs, "weyl(" + std::to_string(2 * n * k) + ")");
    std::vector<Poly> v;
    for (int i = 1; i <= 2 * n; ++i)
        for (int j = 1; j <= 2 * k; ++j) {
            std::string name;
            if (i <= n && j <= k) name = grid_name("x", i, j);
            else if (i <= n) name = grid_name("dy", i, j - k);
            else if (j <= k) name = grid_name("y", i - n, j);
            else name = grid_name("dx", i - n, j - k);
            v.push_back(Poly::gen(ring, name));
        }
    return {"capelli_xy_block", ring, NCMatrix(2 * n, 2 * k, std::move(v))};
}

// delta_ij dz + K1_ij - zinv * y_i * dy_j  (the k = 1, K2 = 0 instance).
inline ModelMatrix model_gaudin_simple(int n, const std::vector<Rat>& K1) {
    if (static_cast<int>(K1.size()) != n * n)
        throw shape_error("gaudin_simple needs an n*n constant block");
    std::vector<std::pair<std::string, std::string>> pairs;
    for (int i = 1; i <= n; ++i)
        pairs.emplace_back("y" + std::to_string(i), "dy" + std::to_string(i));
    RingPtr yring = make_weyl_pairs(pairs, "weyl(" + std::to_string(n) + ")");
    RingPtr ring = join_rings(make_laurent_weyl(), yring, JoinKind::commuting,
                              "laurent_weyl⊗weyl(" + std::to_string(n) + ")");
    Poly dz = Poly::gen(ring, "dz");
    Poly zinv = Poly::gen(ring, "zinv");
    std::vector<Poly> v;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            Poly e = Poly::constant(ring, K1[(i - 1) * n + (j - 1)]);
            if (i == j) e = e + dz;
            e = e - zinv * Poly::gen(ring, "y" + std::to_string(i)) *
                        Poly::gen(ring, "dy" + std::to_string(j));
            v.push_back(std::move(e));
        }
    return {"gaudin_simple", ring, NCMatrix(n, n, std::move(v))};
}

// delta_ij dz - zinv e[i,j] over Diff(z) tensor U(gl_n).
inline ModelMatrix model_gl_lax(int n) {
    RingPtr ring = join_rings(make_laurent_weyl(), make_gl_pbw(n), JoinKind::commuting,
                              "laurent_weyl⊗gl_pbw(" + std::to_string(n) + ")");
    Poly dz = Poly::gen(ring, "dz");
    Poly zinv = Poly::gen(ring, "zinv");
    std::vector<Poly> v;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            Poly e = -(zinv * Poly::gen(ring, grid_name("e", i, j)));
            if (i == j) e = e + dz;
            v.push_back(std::move(e));
        }
    return {"glN_lax", ring, NCMatrix(n, n, std::move(v))};
}

} // namespace manin
