#pragma once

#include <levelone/classdata.hpp>

#include <array>
#include <set>
#include <string>
#include <vector>

namespace levelone {

// Simple-root reflection matrices of a simply-laced Cartan matrix, acting on
// root coordinates: s_i(alpha_j) = alpha_j - C[i][j] alpha_i.
inline std::vector<DyadicMatrix> simple_reflections(const std::vector<std::vector<int>>& C) {
    int n = int(C.size());
    std::vector<DyadicMatrix> refl;
    for (int i = 0; i < n; ++i) {
        DyadicMatrix m = DyadicMatrix::identity(n);
        for (int j = 0; j < n; ++j) m.a[std::size_t(i) * n + j] -= C[i][j];
        refl.push_back(std::move(m));
    }
    return refl;
}

inline std::vector<std::vector<int>> cartan_matrix_e(int n) {
    // Bourbaki numbering: chain 1-3-4-5-...-n with node 2 attached to 4
    std::vector<std::vector<int>> C(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i) C[i][i] = 2;
    auto link = [&](int a, int b) { C[a - 1][b - 1] = C[b - 1][a - 1] = -1; };
    link(1, 3);
    link(2, 4);
    for (int k = 3; k < n; ++k) link(k, k + 1);
    return C;
}

// rotation generators s_1 s_i of the even subgroup of a Weyl group
inline std::vector<DyadicMatrix> even_subgroup_generators(
    const std::vector<DyadicMatrix>& refl) {
    std::vector<DyadicMatrix> gens;
    for (std::size_t i = 1; i < refl.size(); ++i) gens.push_back(refl[0] * refl[i]);
    return gens;
}

// G2(Z) inside GL_7(Z[1/2]) acting on the lattice of pure Coxeter octonions
inline std::vector<DyadicMatrix> g2z_generators() {
    static const std::array<std::array<int, 49>, 2> raw = {{
        {0, 1,  -1, 0, 0,  1, -1,
         0, -1, 0, -1, -1, 1, 0,
         0, -1, 0, 1,  1,  1, 0,
         0, 1,  1, 0,  0,  1, 1,
         -2, 0, 0, 0,  0,  0, 0,
         0, 0,  1, 1, -1,  0, -1,
         0, 0, -1, 1, -1,  0, 1},
        {0, 0, 0, 0,  0, -2, 0,
         0, 2, 0, 0,  0, 0,  0,
         0, 0, 2, 0,  0, 0,  0,
         0, 0, 0, 0,  0, 0,  2,
         0, 0, 0, 0,  2, 0,  0,
         2, 0, 0, 0,  0, 0,  0,
         0, 0, 0, -2, 0, 0,  0},
    }};
    std::vector<DyadicMatrix> gens;
    for (auto& r : raw) {
        DyadicMatrix m;
        m.n = 7;
        m.shift = 1;
        m.a.assign(r.begin(), r.end());
        m.normalize();
        gens.push_back(std::move(m));
    }
    return gens;
}

inline ClassDataset enumerate_g2z() {
    return enumerate_group("G2Z", Family::G2, 2, g2z_generators(), 20000);
}

// all roots of a simply-laced system, in root coordinates
inline std::vector<std::vector<std::int64_t>> root_closure(
    const std::vector<DyadicMatrix>& refl) {
    int n = refl[0].n;
    std::vector<std::vector<std::int64_t>> roots;
    std::set<std::vector<std::int64_t>> seen;
    for (int i = 0; i < n; ++i) {
        std::vector<std::int64_t> e(n, 0);
        e[i] = 1;
        if (seen.insert(e).second) roots.push_back(e);
    }
    for (std::size_t i = 0; i < roots.size(); ++i)
        for (auto& s : refl) {
            std::vector<std::int64_t> im(n, 0);
            for (int r = 0; r < n; ++r)
                for (int c = 0; c < n; ++c) im[r] += s.a[std::size_t(r) * n + c] * roots[i][c];
            if (seen.insert(im).second) roots.push_back(im);
        }
    return roots;
}

// integer vector off every reflection hyperplane, so its orbit is free
inline std::vector<std::int64_t> regular_seed(const std::vector<std::vector<int>>& C,
                                              const std::vector<DyadicMatrix>& refl) {
    int n = int(C.size());
    auto roots = root_closure(refl);
    for (std::int64_t spread = 1;; ++spread) {
        std::vector<std::int64_t> v(n);
        for (int i = 0; i < n; ++i) v[i] = 1 + i * i * spread;
        bool ok = true;
        for (auto& beta : roots) {
            std::int64_t p = 0;
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) p += beta[i] * C[i][j] * v[j];
            if (p == 0) {
                ok = false;
                break;
            }
        }
        if (ok) return v;
    }
}

inline ClassDataset enumerate_we7_plus() {
    auto C = cartan_matrix_e(7);
    auto refl = simple_reflections(C);
    auto seed = regular_seed(C, refl);
    return enumerate_group("WE7plus", Family::B, 3, even_subgroup_generators(refl),
                           2000000, &seed);
}

}  // namespace levelone
