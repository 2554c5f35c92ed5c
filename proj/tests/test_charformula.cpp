#include <catch2/catch_amalgamated.hpp>
#include <levelone/charformula.hpp>
#include <levelone/groups.hpp>

#include <fstream>
#include <map>
#include <sstream>

using namespace levelone;

static std::map<std::vector<int>, long long> load_expected(const std::string& name,
                                                           std::size_t arity) {
    std::map<std::vector<int>, long long> out;
    std::ifstream in(std::string(LEVELONE_SOURCE_DIR) + "/tests/data/" + name);
    REQUIRE(in.good());
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ss(line);
        std::vector<int> key;
        std::string tok;
        while (std::getline(ss, tok, ',')) key.push_back(std::stoi(tok));
        REQUIRE(key.size() == arity + 1);
        long long val = key.back();
        key.pop_back();
        out[key] = val;
    }
    return out;
}

TEST_CASE("Weyl dimension formula") {
    auto g2 = build_root_datum(Family::G2, 2);
    CHECK(weyl_dim(g2, Weight{{2, 1}}) == 7);   // omega_1
    CHECK(weyl_dim(g2, Weight{{3, 2}}) == 14);  // omega_2
    auto b3 = build_root_datum(Family::B, 3);
    CHECK(weyl_dim(b3, Weight{{0, 0, 0}}) == 1);
    CHECK(weyl_dim(b3, Weight{{1, 0, 0}}) == 7);
}

TEST_CASE("character values at special elements") {
    auto b3 = build_root_datum(Family::B, 3);
    RatCochar id{{0, 0, 0}, 1};

    SECTION("identity gives the Weyl dimension") {
        for (ivec lam : {ivec{0, 0, 0}, ivec{3, 1, 0}, ivec{5, 5, 2}}) {
            auto chi = char_value(b3, Weight{lam}, id);
            CHECK(chi.rational_value() == weyl_dim(b3, Weight{lam}));
        }
    }
    SECTION("trivial representation has constant character") {
        for (auto mu : {RatCochar{{1, 2, 3}, 7}, RatCochar{{1, 1, 0}, 2}}) {
            auto chi = char_value(b3, Weight{{0, 0, 0}}, mu);
            CHECK(chi.rational_value() == 1);
        }
    }
    SECTION("G2 seven-dimensional representation on the order-7 class") {
        auto g2 = build_root_datum(Family::G2, 2);
        zpoly p = {1};  // Phi_1 * Phi_7
        for (long d : {1L, 7L}) {
            const zpoly& phi = cyclotomic_polynomial(d);
            zpoly q(p.size() + phi.size() - 1, 0);
            for (std::size_t a = 0; a < p.size(); ++a)
                for (std::size_t b = 0; b < phi.size(); ++b) q[a + b] += p[a] * phi[b];
            p = std::move(q);
        }
        auto mu = g2_torus_rep(p);
        auto chi = char_value(g2, Weight{{2, 1}}, mu);
        CHECK(chi.is_zero());
    }
}

TEST_CASE("characters on B and G2 classes are real") {
    auto g2ds = enumerate_g2z();
    auto g2 = build_root_datum(Family::G2, 2);
    for (auto& c : g2ds.classes)
        for (auto& mu : c.reps)
            for (ivec lam : {ivec{2, 1}, ivec{3, 2}, ivec{5, 3}}) {
                auto chi = char_value(g2, Weight{lam}, mu);
                CHECK(chi.conjugate() == chi);
            }
}

TEST_CASE("harmonic generating series") {
    auto e7 = harmonic_invariant_series(HarmonicCase::E7, 28);
    std::vector<long long> head(e7.begin(), e7.begin() + 13);
    CHECK(head == std::vector<long long>{1, 0, 0, 0, 0, 0, 1, 0, 1, 0, 1, 0, 2});
    CHECK(e7[14] == 2);
    CHECK(e7[18] == 4);
    CHECK(e7[24] == 7);
    CHECK(e7[28] == 8);

    auto e8 = harmonic_invariant_series(HarmonicCase::E8, 36);
    CHECK(e8[8] == 1);
    CHECK(e8[20] == 2);
    CHECK(e8[24] == 3);
    CHECK(e8[32] == 5);
    CHECK(e8[36] == 6);

    auto e8a1 = harmonic_invariant_series(HarmonicCase::E8A1, 28);
    CHECK(e8a1[2] == 1);
    CHECK(e8a1[8] == 2);
    CHECK(e8a1[20] == 8);
    CHECK(e8a1[28] == 17);
}

TEST_CASE("G2 invariant dimensions reproduce the table") {
    auto datum = build_root_datum(Family::G2, 2);
    auto ds = enumerate_g2z();
    InvariantDimEngine engine(datum, ds);
    auto expected = load_expected("g2_invdim_expected.csv", 2);

    long long checked = 0;
    for (int w = 4; w + 2 <= 58; w += 2)
        for (int v = 2; v < w && w + v <= 58; v += 2) {
            auto lam = weight_from_hodge(datum, HodgeWeights{{w, v}});
            long long dim = engine.dimension(lam);
            auto it = expected.find({w, v});
            long long want = it == expected.end() ? 0 : it->second;
            if (w + v > 56 && it == expected.end()) continue;  // beyond table range
            INFO("(w,v) = (" << w << "," << v << ")");
            CHECK(dim == want);
            ++checked;
        }
    CHECK(checked >= 150);

    SECTION("spot values from the table") {
        CHECK(engine.dimension(weight_from_hodge(datum, HodgeWeights{{4, 2}})) == 1);
        CHECK(engine.dimension(weight_from_hodge(datum, HodgeWeights{{28, 2}})) == 3);
        CHECK(engine.dimension(weight_from_hodge(datum, HodgeWeights{{24, 10}})) == 5);
    }
}

TEST_CASE("E7 invariant dimensions reproduce the table") {
    auto datum = build_root_datum(Family::B, 3);
    auto ds = enumerate_we7_plus();
    InvariantDimEngine engine(datum, ds);
    auto expected = load_expected("so7_invdim_expected.csv", 3);

    for (int a = 0; a <= 11; ++a)
        for (int b = 0; b <= a; ++b)
            for (int c = 0; c <= b; ++c) {
                Weight lam{{a, b, c}};
                long long dim = engine.dimension(lam);
                auto it = expected.find({a, b, c});
                long long want = it == expected.end() ? 0 : it->second;
                INFO("lambda = (" << a << "," << b << "," << c << ")");
                CHECK(dim == want);
            }
}

TEST_CASE("E7 harmonic cross-check against the generating series") {
    auto datum = build_root_datum(Family::B, 3);
    auto ds = enumerate_we7_plus();
    InvariantDimEngine engine(datum, ds);
    auto series = harmonic_invariant_series(HarmonicCase::E7, 28);
    for (int m = 0; m <= 28; ++m) {
        long long dim = engine.dimension(Weight{{m, 0, 0}});
        INFO("degree " << m);
        CHECK(dim == series[m]);
    }
}

TEST_CASE("exact and certified paths agree") {
    auto datum = build_root_datum(Family::B, 3);
    auto ds = enumerate_we7_plus();
    InvariantDimEngine engine(datum, ds);
    for (ivec lam : {ivec{0, 0, 0}, ivec{4, 2, 1}, ivec{9, 6, 3}, ivec{11, 9, 2},
                     ivec{12, 7, 5}, ivec{14, 3, 1}}) {
        CHECK(engine.dimension(Weight{lam}, EvalMode::Certified) ==
              engine.exact_dimension(Weight{lam}));
    }
}
