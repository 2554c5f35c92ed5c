#include <catch2/catch_amalgamated.hpp>
#include <levelone/cyclotomic.hpp>

#include <random>

using namespace levelone;

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic_polynomial(1) == zpoly{-1, 1});
    CHECK(cyclotomic_polynomial(2) == zpoly{1, 1});
    CHECK(cyclotomic_polynomial(4) == zpoly{1, 0, 1});
    CHECK(cyclotomic_polynomial(12) == zpoly{1, 0, -1, 0, 1});
    CHECK(euler_phi(2520) == 576);
    CHECK(cyclotomic_polynomial(2520).size() == 577);
}

TEST_CASE("roots of unity") {
    auto one = CyclotomicNumber::root_of_unity(0, 12);
    CHECK(one.rational_value() == 1);
    auto minus1 = CyclotomicNumber::root_of_unity(6, 12);
    CHECK(minus1.rational_value() == -1);
    auto i4 = CyclotomicNumber::root_of_unity(1, 4);
    CHECK((i4 * i4).rational_value() == -1);
    CHECK(CyclotomicNumber::root_of_unity(1, 2).to_integer() == -1);
}

TEST_CASE("vanishing sums and embeddings") {
    auto z3 = CyclotomicNumber::root_of_unity(1, 3);
    auto sum = CyclotomicNumber::from_rational(1) + z3 + z3 * z3;
    CHECK(sum.is_zero());

    auto z8 = CyclotomicNumber::root_of_unity(1, 8);
    CHECK(z8 * z8 == CyclotomicNumber::root_of_unity(1, 4));

    // 1 + z3 + z3^2 + 5 = 5
    CHECK((sum + CyclotomicNumber::from_rational(5)).to_integer() == 5);
    CHECK_THROWS(CyclotomicNumber::root_of_unity(1, 4).to_integer());
}

TEST_CASE("field axioms on random elements") {
    std::mt19937 rng(23);
    for (long n : {12L, 40L, 2520L}) {
        long deg = euler_phi(n);
        auto rand_elt = [&](int sparsity) {
            CyclotomicNumber z(n);
            std::vector<mpq_class> c(deg, 0);
            for (int k = 0; k < sparsity; ++k)
                c[std::uniform_int_distribution<long>(0, deg - 1)(rng)] =
                    std::uniform_int_distribution<int>(-9, 9)(rng);
            return CyclotomicNumber(n, std::move(c));
        };
        for (int it = 0; it < (n > 100 ? 2 : 8); ++it) {
            auto a = rand_elt(4), b = rand_elt(4);
            if (b.is_zero()) continue;
            CHECK((a * b) * b.invert() == a);
            CHECK(b.invert() * b == CyclotomicNumber::from_rational(1, n));
            auto c = rand_elt(3);
            CHECK(a * (b + c) == a * b + a * c);
        }
    }
}

TEST_CASE("numeric cross-check of exact products") {
    std::mt19937 rng(5);
    long n = 840;
    long deg = euler_phi(n);
    for (int it = 0; it < 5; ++it) {
        std::vector<mpq_class> ca(deg, 0), cb(deg, 0);
        for (int k = 0; k < 5; ++k) {
            ca[std::uniform_int_distribution<long>(0, deg - 1)(rng)] =
                std::uniform_int_distribution<int>(-4, 4)(rng);
            cb[std::uniform_int_distribution<long>(0, deg - 1)(rng)] =
                std::uniform_int_distribution<int>(-4, 4)(rng);
        }
        CyclotomicNumber a(n, ca), b(n, cb);
        auto prod = a * b;
        auto approx = a.complex_value() * b.complex_value();
        CHECK(std::abs(prod.complex_value() - approx) < 1e-9);
    }
}

TEST_CASE("galois twists and conjugation") {
    auto z = CyclotomicNumber::root_of_unity(1, 7);
    CHECK(z.galois(2) == CyclotomicNumber::root_of_unity(2, 7));
    CHECK(z.conjugate() == CyclotomicNumber::root_of_unity(6, 7));
    auto a = z + z.conjugate();  // 2 cos(2 pi / 7), fixed by conjugation
    CHECK(a.conjugate() == a);
}
