#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "srrkit/codes.hpp"
#include "srrkit/errors.hpp"
#include "srrkit/prime_field.hpp"
#include "srrkit/rational.hpp"

using namespace srrkit;

TEST_CASE("prime field arithmetic") {
    gf::PrimeField f7(7);
    CHECK(f7.inv(3) == 5); // 3*5 = 15 = 1 mod 7
    CHECK(f7.pow(3, 6) == 1);
    CHECK(f7.add(5, 4) == 2);
    CHECK(f7.sub(2, 5) == 4);
    CHECK(f7.mul(4, 5) == 6);

    gf::PrimeField f11(11);
    CHECK_THROWS_AS(f11.inv(0), DivisionByZero);

    CHECK_THROWS_AS(gf::PrimeField(6), std::invalid_argument);
    CHECK(gf::smallest_prime_at_least(7) == 7);
    CHECK(gf::smallest_prime_at_least(8) == 11);
}

TEST_CASE("inverse involution and unit product over GF(13)") {
    gf::PrimeField f(13);
    for (gf::Elem a = 1; a < 13; ++a) {
        CHECK(f.inv(f.inv(a)) == a);
        CHECK(f.mul(a, f.inv(a)) == 1);
    }
}

TEST_CASE("rank basics") {
    gf::PrimeField f5(5);
    CHECK(gf::rank(gf::FieldMatrix::identity(f5, 3)) == 3);
    CHECK(gf::rank(gf::FieldMatrix(f5, 2, 4)) == 0);

    // A 2x4 generator with Vandermonde-style parity over GF(7):
    // parity columns [1;1],[1;a],[1;a^2],[1;a^3] with a = 3.
    gf::PrimeField f7(7);
    gf::FieldMatrix fig(f7, 2, 4);
    gf::Elem alpha = 3, p = 1;
    for (int c = 0; c < 4; ++c) {
        fig.at(0, c) = 1;
        fig.at(1, c) = p;
        p = f7.mul(p, alpha);
    }
    CHECK(gf::rank(fig) == 2);
    CHECK(gf::all_k_minors_nonsingular(fig, 2));
}

TEST_CASE("rank is invariant under row swaps") {
    std::mt19937_64 eng(7);
    gf::PrimeField f(11);
    for (int trial = 0; trial < 30; ++trial) {
        int rows = 2 + static_cast<int>(eng() % 4);
        int cols = 2 + static_cast<int>(eng() % 5);
        gf::FieldMatrix m(f, rows, cols);
        for (auto& e : m.entries) e = static_cast<gf::Elem>(eng() % 11);
        int base = gf::rank(m);
        CHECK(base <= std::min(rows, cols));
        int r1 = static_cast<int>(eng() % rows), r2 = static_cast<int>(eng() % rows);
        for (int c = 0; c < cols; ++c) std::swap(m.at(r1, c), m.at(r2, c));
        CHECK(gf::rank(m) == base);
    }
}

TEST_CASE("k-minor checks") {
    gf::PrimeField f3(3);
    gf::FieldMatrix good(f3, 2, 3);
    good.at(0, 0) = 1;
    good.at(1, 1) = 1;
    good.at(0, 2) = 1;
    good.at(1, 2) = 1;
    CHECK(gf::all_k_minors_nonsingular(good, 2));

    gf::FieldMatrix bad = good;
    bad.at(1, 2) = 0; // columns 1 and 3 now coincide
    CHECK_FALSE(gf::all_k_minors_nonsingular(bad, 2));

    CHECK_THROWS_AS(gf::all_k_minors_nonsingular(good, 4), std::invalid_argument);

    auto g22 = codes::build_generator(codes::GeneratorSpec(4, 2, 2));
    CHECK(g22.spec.q == 7);
    CHECK(gf::all_k_minors_nonsingular(g22.matrix, 2));
}

TEST_CASE("rational arithmetic is exact") {
    CHECK(rat_str(parse_rational("3/2")) == "3/2");
    CHECK(rat_str(parse_rational("4")) == "4/1");
    CHECK(rat_pretty(parse_rational("4/2")) == "2");
    CHECK_THROWS_AS(parse_rational("0.75"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);

    std::mt19937_64 eng(11);
    for (int trial = 0; trial < 200; ++trial) {
        Rational ab(static_cast<long>(eng() % 2000) - 1000, 1 + static_cast<long>(eng() % 50));
        Rational cd(static_cast<long>(eng() % 2000) - 1000, 1 + static_cast<long>(eng() % 50));
        CHECK((ab + cd) - cd == ab);
    }
}
