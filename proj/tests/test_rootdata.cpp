#include <catch2/catch_amalgamated.hpp>
#include <levelone/rootdata.hpp>

#include <random>
#include <set>

using namespace levelone;

TEST_CASE("root counts and Weyl orders") {
    auto b3 = build_root_datum(Family::B, 3);
    CHECK(b3.positive_roots.size() == 9);
    CHECK(b3.weyl_order() == 48);

    auto d4 = build_root_datum(Family::D, 4);
    CHECK(d4.positive_roots.size() == 12);
    CHECK(d4.weyl_order() == 192);

    auto b4 = build_root_datum(Family::B, 4);
    CHECK(b4.positive_roots.size() == 16);
    CHECK(b4.weyl_order() == 384);

    auto g2 = build_root_datum(Family::G2, 2);
    CHECK(g2.positive_roots.size() == 6);
    CHECK(g2.weyl_order() == 12);
    // rho = 5 alpha + 3 beta
    CHECK(g2.two_rho == ivec{10, 6});
}

TEST_CASE("rho matches the standard coordinates") {
    auto b3 = build_root_datum(Family::B, 3);
    CHECK(b3.two_rho == ivec{5, 3, 1});
    auto d4 = build_root_datum(Family::D, 4);
    CHECK(d4.two_rho == ivec{6, 4, 2, 0});
}

TEST_CASE("hodge conversions") {
    auto b3 = build_root_datum(Family::B, 3);
    auto lam = weight_from_hodge(b3, HodgeWeights{{5, 3, 1}});
    CHECK(lam.coords == ivec{0, 0, 0});
    CHECK(hodge_from_weight(b3, lam).entries == std::vector<int>{5, 3, 1});

    auto g2 = build_root_datum(Family::G2, 2);
    auto triv = weight_from_hodge(g2, HodgeWeights{{4, 2}});
    CHECK(triv.coords == ivec{0, 0});
    auto big = weight_from_hodge(g2, HodgeWeights{{28, 2}});
    CHECK(hodge_from_weight(g2, big).entries == std::vector<int>{28, 2});

    auto d4 = build_root_datum(Family::D, 4);
    CHECK_THROWS(weight_from_hodge(d4, HodgeWeights{{7, 5, 3, 1}}));
    // non-dominant: entries must decrease strictly
    CHECK_THROWS(weight_from_hodge(b3, HodgeWeights{{3, 3, 1}}));
}

TEST_CASE("round trip on random dominant weights") {
    std::mt19937 rng(7);
    for (Family f : {Family::B, Family::D}) {
        int rank = f == Family::B ? 3 : 4;
        auto d = build_root_datum(f, rank);
        for (int it = 0; it < 50; ++it) {
            ivec lam(rank);
            std::int64_t prev = 20;
            for (int i = 0; i < rank; ++i) {
                lam[i] = std::uniform_int_distribution<std::int64_t>(0, prev)(rng);
                prev = lam[i];
            }
            Weight w{lam};
            if (!d.dominant(w)) continue;
            auto h = hodge_from_weight(d, w);
            if (!h.valid()) continue;  // repeated entries (non-regular) are skipped
            auto back = weight_from_hodge(d, h);
            CHECK(back.coords == lam);
        }
    }
}

TEST_CASE("levi data") {
    auto b3 = build_root_datum(Family::B, 3);

    SECTION("mu = 0 gives M = G") {
        RatCochar mu{{0, 0, 0}, 1};
        auto L = levi_data(b3, mu);
        CHECK(L.levi_roots.size() == 9);
        CHECK(L.coset_reps.size() == 1);
        CHECK(L.levi_weyl_order == 48);
    }
    SECTION("generic mu gives M = T") {
        RatCochar mu{{1, 5, 25}, 210};
        auto L = levi_data(b3, mu);
        CHECK(L.levi_roots.empty());
        CHECK(L.coset_reps.size() == 48);
    }
    SECTION("|W^M| * |W_M| = |W|") {
        RatCochar mu{{1, 1, 0}, 2};
        auto L = levi_data(b3, mu);
        CHECK(L.coset_reps.size() * L.levi_weyl_order == b3.weyl_order());
    }
}

TEST_CASE("w(lambda+rho)-rho stays in the weight lattice") {
    auto b3 = build_root_datum(Family::B, 3);
    ivec lam{4, 2, 1};
    ivec two_lam_rho(3);
    for (int i = 0; i < 3; ++i) two_lam_rho[i] = 2 * lam[i] + b3.two_rho[i];
    for (auto& w : b3.weyl) {
        ivec im = w.apply(two_lam_rho, 3);
        for (int i = 0; i < 3; ++i) {
            std::int64_t c = im[i] - b3.two_rho[i];
            CHECK(c % 2 == 0);
        }
    }
}

TEST_CASE("pairing vs invariant form: <v, a^> = 2 (v,a)/(a,a)") {
    for (auto [f, r] : std::vector<std::pair<Family, int>>{
             {Family::B, 3}, {Family::D, 4}, {Family::G2, 2}}) {
        auto d = build_root_datum(f, r);
        std::mt19937 rng(11);
        for (int it = 0; it < 20; ++it) {
            ivec v(r);
            for (auto& x : v) x = std::uniform_int_distribution<int>(-5, 5)(rng);
            for (std::size_t k = 0; k < d.positive_roots.size(); ++k) {
                auto& a = d.positive_roots[k];
                CHECK(d.pair(v, d.positive_coroots[k]) * d.dot(a, a) ==
                      2 * d.dot(v, a));
            }
        }
    }
}
