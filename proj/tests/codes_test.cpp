#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "srrkit/codes.hpp"
#include "srrkit/combinatorics.hpp"
#include "srrkit/prime_field.hpp"

using namespace srrkit;
using codes::GeneratorSpec;

TEST_CASE("mother matrix is systematic MDS") {
    auto m = codes::build_mother_matrix(4, 2, 7);
    CHECK(m.rows == 2);
    CHECK(m.cols == 6);
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) CHECK(m.at(r, c) == (r == c ? 1 : 0));
    CHECK(gf::all_k_minors_nonsingular(m, 2));

    // [I_2 | p_1] over GF(5): MDS forces both entries of p_1 nonzero.
    auto tiny = codes::build_mother_matrix(1, 2, 5);
    CHECK(tiny.at(0, 2) != 0);
    CHECK(tiny.at(1, 2) != 0);

    CHECK_THROWS_AS(codes::build_mother_matrix(4, 2, 5), std::invalid_argument);
}

TEST_CASE("generator selection") {
    auto g0 = codes::build_generator(GeneratorSpec(4, 2, 0));
    for (const auto& kind : g0.column_kinds) CHECK(kind.tag == codes::ColumnKind::Parity);

    auto g2 = codes::build_generator(GeneratorSpec(4, 2, 2));
    CHECK(g2.column_kinds[0].tag == codes::ColumnKind::Systematic);
    CHECK(g2.column_kinds[1].tag == codes::ColumnKind::Systematic);
    CHECK(g2.column_kinds[2].tag == codes::ColumnKind::Parity);
    CHECK(g2.column_kinds[2].index == 3);
    CHECK(g2.column_kinds[3].index == 4);
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) CHECK(g2.matrix.at(r, c) == (r == c ? 1 : 0));

    auto gkk = codes::build_generator(GeneratorSpec(5, 5, 5));
    for (int r = 0; r < 5; ++r)
        for (int c = 0; c < 5; ++c) CHECK(gkk.matrix.at(r, c) == (r == c ? 1 : 0));

    CHECK_THROWS_AS(GeneratorSpec(2, 3, 0), std::invalid_argument);
    CHECK_THROWS_AS(GeneratorSpec(4, 2, 3), std::invalid_argument);
}

TEST_CASE("adjacent generators differ in exactly one column") {
    for (auto [n, k] : {std::pair{4, 2}, {6, 3}, {5, 4}}) {
        for (int i = 0; i < k; ++i) {
            auto a = codes::build_generator(GeneratorSpec(n, k, i));
            auto b = codes::build_generator(GeneratorSpec(n, k, i + 1));
            int diff = 0;
            for (int c = 0; c < n; ++c) {
                bool same = true;
                for (int r = 0; r < k; ++r)
                    if (a.matrix.at(r, c) != b.matrix.at(r, c)) same = false;
                if (!same) {
                    ++diff;
                    CHECK(c == i); // the (i+1)-th column, 0-based c == i
                }
            }
            CHECK(diff == 1);
        }
    }
}

TEST_CASE("MDS invariant across the desk-scale family") {
    for (int k = 2; k <= 4; ++k)
        for (int n = k; n <= 8; ++n)
            for (int i = 0; i <= k; ++i) {
                auto g = codes::build_generator(GeneratorSpec(n, k, i));
                CHECK(gf::all_k_minors_nonsingular(g.matrix, k));
            }
}

TEST_CASE("recovery set counts match the closed forms") {
    auto g22 = codes::build_generator(GeneratorSpec(4, 2, 2));
    CHECK(codes::enumerate_recovery_sets(g22, 1).size() == 4); // 1 + C(3,2)
    auto g02 = codes::build_generator(GeneratorSpec(4, 2, 0));
    CHECK(codes::enumerate_recovery_sets(g02, 1).size() == 6); // C(4,2)
    auto g33 = codes::build_generator(GeneratorSpec(3, 3, 3));
    CHECK(codes::enumerate_recovery_sets(g33, 1).size() == 1); // C(2,3) = 0

    for (int k = 2; k <= 4; ++k)
        for (int n = k; n <= 10; ++n)
            for (int i = 0; i <= k; ++i) {
                auto g = codes::build_generator(GeneratorSpec(n, k, i));
                for (int j = 1; j <= k; ++j) {
                    std::uint64_t expected = j <= i ? 1 + binomial(n - 1, k) : binomial(n, k);
                    CHECK(codes::enumerate_recovery_sets(g, j).size() == expected);
                }
            }
}

TEST_CASE("enumerated sets pass the span oracle") {
    for (auto [n, k] : {std::pair{4, 2}, {5, 3}, {6, 3}}) {
        for (int i = 0; i <= k; ++i) {
            auto g = codes::build_generator(GeneratorSpec(n, k, i));
            for (int j = 1; j <= k; ++j)
                for (const auto& r : codes::enumerate_recovery_sets(g, j))
                    CHECK(codes::verify_recovery_set(g, r));
        }
    }
}

TEST_CASE("span oracle rejects non-minimal sets") {
    auto g = codes::build_generator(GeneratorSpec(4, 2, 2));
    // {1} is the systematic recovery set for object 1.
    CHECK(codes::verify_recovery_set(g, {codes::RecoverySet::Systematic, 1, {1}}));
    // A k-subset containing the systematic column of its own object is not
    // minimal: the singleton already spans e_j.
    CHECK_FALSE(codes::verify_recovery_set(g, {codes::RecoverySet::NonSystematic, 1, {1, 3}}));
    // A k-subset avoiding the systematic column works.
    CHECK(codes::verify_recovery_set(g, {codes::RecoverySet::NonSystematic, 1, {2, 3}}));
}
