#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "srrkit/errors.hpp"
#include "srrkit/region.hpp"

using namespace srrkit;
using codes::GeneratorSpec;
using region::DemandVector;

namespace {

Rational rat(long n, long d = 1) { return Rational(n, d); }

bool has_constraint(const region::HPolytope& p, const std::vector<Rational>& coeffs,
                    const Rational& bound) {
    for (const auto& c : p.constraints)
        if (c.coeffs == coeffs && c.bound == bound) return true;
    return false;
}

} // namespace

TEST_CASE("membership on the running example") {
    GeneratorSpec spec(4, 2, 2);
    CHECK(region::membership(spec, {rat(3, 2), rat(3, 4)}).member);
    CHECK(region::membership(spec, {rat(5, 2), rat(0)}).member);
    CHECK_FALSE(region::membership(spec, {rat(5, 2), rat(1, 100)}).member);
}

TEST_CASE("intercepts follow the piecewise formula") {
    CHECK(region::max_demand(GeneratorSpec(4, 2, 2), 1) == rat(5, 2));
    CHECK(region::max_demand(GeneratorSpec(4, 2, 2), 2) == rat(5, 2));
    CHECK(region::max_demand(GeneratorSpec(2, 2, 2), 1) == 1);
    CHECK(region::max_demand(GeneratorSpec(4, 2, 0), 1) == 2);
    CHECK_THROWS_AS(region::max_demand(GeneratorSpec(4, 2, 0), 3), std::invalid_argument);
}

TEST_CASE("bounding simplices") {
    auto outer = region::matching_simplex(GeneratorSpec(4, 2, 2));
    CHECK(outer.constraints.size() == 1);
    CHECK(outer.constraints[0].bound == 3);

    CHECK(region::matching_simplex(GeneratorSpec(2, 2, 2)).constraints[0].bound == 2);
    CHECK(region::matching_simplex(GeneratorSpec(6, 3, 0)).constraints[0].bound == 2);

    auto inner = region::achievable_simplex(GeneratorSpec(4, 2, 2));
    CHECK(inner.constraints[0].coeffs == std::vector<Rational>{rat(2, 5), rat(2, 5)});
    CHECK(inner.constraints[0].bound == 1);
    auto inner_kk = region::achievable_simplex(GeneratorSpec(2, 2, 2));
    CHECK(inner_kk.constraints[0].coeffs == std::vector<Rational>{1, 1});

    // Every intercept vertex of the inner simplex is servable.
    GeneratorSpec spec(5, 3, 2);
    for (int j = 1; j <= 3; ++j) {
        DemandVector v(3, rat(0));
        v[j - 1] = region::max_demand(spec, j);
        CHECK(region::membership(spec, v).member);
    }
}

TEST_CASE("closed forms per regime") {
    // S_0 box.
    auto s0 = region::closed_form_polytope(GeneratorSpec(6, 3, 0));
    REQUIRE(s0.has_value());
    CHECK(s0->provenance == region::Provenance::S0);
    CHECK(s0->constraints.size() == 1);
    CHECK(s0->constraints[0].bound == 2);

    // Theorem-5 polytope for (4,2,2): sum <= 3, 2a+b <= 5, a+2b <= 5.
    auto t5 = region::closed_form_polytope(GeneratorSpec(4, 2, 2));
    REQUIRE(t5.has_value());
    CHECK(t5->provenance == region::Provenance::Theorem5);
    CHECK(t5->constraints.size() == 3); // A = {} dropped for i == k
    CHECK(has_constraint(*t5, {rat(2), rat(2)}, rat(10, 2) + 1)); // 2(a+b) <= 6
    CHECK(has_constraint(*t5, {rat(2), rat(1)}, rat(5)));
    CHECK(has_constraint(*t5, {rat(1), rat(2)}, rat(5)));

    // Corner polytope for (5,3,3): the published seven-constraint list.
    auto corner = region::closed_form_polytope(GeneratorSpec(5, 3, 3));
    REQUIRE(corner.has_value());
    CHECK(corner->provenance == region::Provenance::CornerNMinus1);
    CHECK(corner->constraints.size() == 7);
    CHECK(has_constraint(*corner, {rat(1), rat(1), rat(1)}, rat(3)));
    CHECK(has_constraint(*corner, {rat(3), rat(1), rat(1)}, rat(7)));
    CHECK(has_constraint(*corner, {rat(1), rat(3), rat(1)}, rat(7)));
    CHECK(has_constraint(*corner, {rat(1), rat(1), rat(3)}, rat(7)));
    CHECK(has_constraint(*corner, {rat(3), rat(3), rat(1)}, rat(9)));
    CHECK(has_constraint(*corner, {rat(3), rat(1), rat(3)}, rat(9)));
    CHECK(has_constraint(*corner, {rat(1), rat(3), rat(3)}, rat(9)));

    // SPC polytope for (4,3,3) carries the pairwise caps.
    auto spc = region::closed_form_polytope(GeneratorSpec(4, 3, 3));
    REQUIRE(spc.has_value());
    CHECK(spc->provenance == region::Provenance::SPC);
    CHECK(has_constraint(*spc, {rat(1), rat(1), rat(0)}, rat(2)));

    // Open regime.
    CHECK_FALSE(region::closed_form_polytope(GeneratorSpec(3, 3, 3)).has_value());
    CHECK_FALSE(region::closed_form_polytope(GeneratorSpec(4, 4, 3)).has_value());
}

TEST_CASE("polytope queries") {
    auto p = *region::closed_form_polytope(GeneratorSpec(4, 2, 2));
    CHECK(p.contains({rat(3, 2), rat(3, 4)}));
    CHECK_FALSE(p.contains({rat(5, 2), rat(1, 100)}));
    CHECK_FALSE(p.contains({rat(-1), rat(0)}));

    auto gamma = p.max_axis({rat(0), rat(3, 4)}, 1);
    REQUIRE(gamma.has_value());
    CHECK(*gamma == rat(17, 8));
}

TEST_CASE("vertex enumeration matches the drawn regions") {
    auto p22 = *region::closed_form_polytope(GeneratorSpec(4, 2, 2));
    auto v22 = region::enumerate_vertices(p22);
    std::vector<DemandVector> expected{{rat(0), rat(0)},
                                       {rat(0), rat(5, 2)},
                                       {rat(1), rat(2)},
                                       {rat(2), rat(1)},
                                       {rat(5, 2), rat(0)}};
    CHECK(v22 == expected);

    auto p433 = *region::closed_form_polytope(GeneratorSpec(4, 3, 3));
    auto v433 = region::enumerate_vertices(p433);
    std::vector<DemandVector> expected433{{rat(0), rat(0), rat(0)},
                                          {rat(0), rat(0), rat(2)},
                                          {rat(0), rat(2), rat(0)},
                                          {rat(1), rat(1), rat(1)},
                                          {rat(2), rat(0), rat(0)}};
    CHECK(v433 == expected433);

    // Unit box from two explicit constraints.
    region::HPolytope box;
    box.k = 2;
    box.constraints.push_back({{rat(1), rat(0)}, rat(1)});
    box.constraints.push_back({{rat(0), rat(1)}, rat(1)});
    CHECK(region::enumerate_vertices(box).size() == 4);

    region::HPolytope high;
    high.k = 4;
    CHECK_THROWS_AS(region::enumerate_vertices(high), UnsupportedQuery);
}

TEST_CASE("inclusion witnesses") {
    auto w = region::inclusion_witness(4, 2, 0);
    REQUIRE(w.point.has_value());
    CHECK_FALSE(w.degenerate);
    CHECK(*w.point == DemandVector{rat(5, 2), rat(0)});

    auto w1 = region::inclusion_witness(4, 2, 1);
    REQUIRE(w1.point.has_value());
    CHECK(*w1.point == DemandVector{rat(0), rat(5, 2)});

    // n == k: S_0(2,2) equals S_1(2,2); the grid search reports none.
    auto none = region::inclusion_witness(2, 2, 0);
    CHECK(none.degenerate);
    CHECK_FALSE(none.point.has_value());

    // ... but S_1(2,2) is strictly inside S_2(2,2).
    auto sep = region::inclusion_witness(2, 2, 1);
    CHECK(sep.degenerate);
    REQUIRE(sep.point.has_value());
}

TEST_CASE("sum rate bounds") {
    CHECK(region::sum_rate_bound(GeneratorSpec(4, 2, 2), {1, 2}) == 3);
    CHECK(region::sum_rate_bound(GeneratorSpec(5, 3, 3), {1, 2, 3}) == 3); // n = k+i-1
    CHECK(region::sum_rate_bound(GeneratorSpec(4, 3, 3), {1, 2}) == 2);    // SPC pair
    CHECK(region::sum_rate_bound(GeneratorSpec(4, 2, 2), {}) == 0);
}

TEST_CASE("emitted polytopes never repeat a constraint") {
    for (int k = 2; k <= 4; ++k)
        for (int n = k; n <= 8; ++n)
            for (int i = 0; i <= k; ++i) {
                auto p = region::closed_form_polytope(GeneratorSpec(n, k, i));
                if (!p) continue;
                for (std::size_t a = 0; a < p->constraints.size(); ++a)
                    for (std::size_t b = a + 1; b < p->constraints.size(); ++b) {
                        bool same = p->constraints[a].coeffs == p->constraints[b].coeffs &&
                                    p->constraints[a].bound == p->constraints[b].bound;
                        CHECK_FALSE(same);
                    }
            }
}

TEST_CASE("matching simplex stays within factor k of the achievable one") {
    for (int k = 2; k <= 4; ++k)
        for (int n = k; n <= 8; ++n)
            for (int i = 0; i <= k; ++i) {
                GeneratorSpec spec(n, k, i);
                Rational nu = region::matching_number_closed_form(spec);
                Rational min_intercept = region::max_demand(spec, 1);
                for (int j = 2; j <= k; ++j)
                    min_intercept = std::min(min_intercept, region::max_demand(spec, j));
                CHECK(nu <= Rational(k) * min_intercept);
                if (n == k && i == k) CHECK(nu == Rational(k) * min_intercept);
            }
}

TEST_CASE("demand partition") {
    auto part = region::partition_demands(GeneratorSpec(6, 3, 3), {rat(19, 10), rat(4, 5), rat(3, 10)});
    CHECK(part.a == std::vector<int>{1});
    CHECK(part.b == std::vector<int>{2, 3});
    CHECK(part.c.empty());
    CHECK(part.i_a() == 1);

    // Boundary lambda_j = 1 lands in A.
    auto edge = region::partition_demands(GeneratorSpec(6, 3, 2), {rat(1), rat(1, 2), rat(2)});
    CHECK(edge.a == std::vector<int>{1});
    CHECK(edge.b == std::vector<int>{2});
    CHECK(edge.c == std::vector<int>{3});
}
