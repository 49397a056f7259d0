#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "srrkit/json_io.hpp"
#include "srrkit/orbit_lp.hpp"
#include "srrkit/region.hpp"
#include "srrkit/verify.hpp"

using namespace srrkit;
using codes::GeneratorSpec;

TEST_CASE("orbit reduction agrees with the full LP") {
    // Exhaustive half-step grid on two shapes with and without closed forms.
    for (auto [n, k, i] : {std::tuple{5, 3, 2}, {4, 3, 3}, {3, 3, 3}}) {
        GeneratorSpec spec(n, k, i);
        auto h = hg::build_hypergraph(spec);
        for (int a = 0; a <= 5; ++a)
            for (int b = 0; b <= 5; ++b)
                for (int c = 0; c <= 5; ++c) {
                    std::vector<Rational> lambda{Rational(a, 2), Rational(b, 2), Rational(c, 2)};
                    CHECK(orbitlp::member(spec, lambda) == region::membership(h, lambda).member);
                }
    }
}

TEST_CASE("orbit axis maxima match closed forms") {
    GeneratorSpec spec(6, 3, 2);
    auto closed = region::closed_form_polytope(spec);
    REQUIRE(closed.has_value());
    for (int a = 0; a <= 6; ++a)
        for (int b = 0; b <= 6; ++b) {
            std::vector<Rational> base{Rational(a, 2), Rational(b, 2), Rational(0)};
            CHECK(orbitlp::max_axis(spec, base, 3) == closed->max_axis(base, 3));
        }
}

TEST_CASE("small sweep is clean and its report is stable") {
    verify::SweepConfig cfg;
    cfg.k_max = 2;
    cfg.n_max = 5;
    cfg.random_points = 15;
    cfg.spot_stride = 53;
    auto first = verify::run_sweep(cfg);
    CHECK(first.ok());
    CHECK(first.duality_instances == 12); // n in 2..5, i in 0..2
    CHECK(first.oracle_grid_points > 0);
    CHECK(first.greedy_accepted_points > 0);

    auto second = verify::run_sweep(cfg);
    CHECK(io::dump(verify::report_json(first)) == io::dump(verify::report_json(second)));
}

TEST_CASE("inclusion grid flags nothing on a known chain") {
    auto check = verify::inclusion_grid(5, 2, Rational(1, 2));
    CHECK(check.columns > 0);
    CHECK(check.violations.empty());
}

TEST_CASE("uniqueness probes") {
    long points = 0;
    CHECK(verify::uniqueness_probe(GeneratorSpec(3, 3, 3), Rational(1, 4), &points).empty());
    CHECK(points > 0);
    CHECK(verify::uniqueness_probe(GeneratorSpec(2, 2, 2), Rational(1, 4), nullptr).empty());
}
