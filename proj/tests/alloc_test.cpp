#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "srrkit/alloc.hpp"
#include "srrkit/errors.hpp"
#include "srrkit/orbit_lp.hpp"
#include "srrkit/region.hpp"

using namespace srrkit;
using codes::GeneratorSpec;
using region::DemandVector;

namespace {
Rational rat(long n, long d = 1) { return Rational(n, d); }
}

TEST_CASE("greedy prefix bookkeeping") {
    auto h = hg::build_hypergraph(GeneratorSpec(6, 3, 3));
    DemandVector lambda{rat(19, 10), rat(4, 5), rat(3, 10)};
    auto state = alloc::greedy_prefix(h, lambda);
    CHECK(state.partition.i_a() == 1);
    CHECK(state.residual == DemandVector{rat(9, 10), rat(0), rat(0)});
    CHECK(state.column_capacity ==
          std::vector<Rational>{rat(0), rat(1, 5), rat(7, 10), rat(1), rat(1), rat(1)});
    CHECK(state.systematic_weights.size() == 3);

    auto zero = alloc::greedy_prefix(h, {rat(0), rat(0), rat(0)});
    CHECK(zero.systematic_weights.empty());
    auto res = alloc::allocate(h, {rat(0), rat(0), rat(0)});
    CHECK(res.feasible);
    CHECK(res.certificate->edge_weights.empty());
}

TEST_CASE("slicing reproduces the (6,3,3) budget") {
    auto h = hg::build_hypergraph(GeneratorSpec(6, 3, 3));
    DemandVector lambda{rat(23, 10), rat(4, 5), rat(3, 10)};
    auto state = alloc::greedy_prefix(h, lambda);
    alloc::SliceLedger ledger;
    auto cert = alloc::slice_allocate(h, state, lambda, &ledger);
    CHECK(alloc::verify_certificate(h, cert));
    REQUIRE(ledger.slices.size() == 3);
    CHECK(ledger.slices[0].columns.size() == 5);
    CHECK(ledger.slices[0].alpha == rat(1, 5));
    CHECK(ledger.slices[1].columns.size() == 4);
    CHECK(ledger.slices[1].alpha == rat(1, 2));
    CHECK(ledger.slices[2].columns.size() == 3);
    CHECK(ledger.slices[2].alpha == rat(3, 10));
    CHECK(ledger.leftover_demand == rat(13, 10));

    // Total slice capacity telescopes to (n - i_A)/k - sum_B(lambda)/k.
    Rational total_budget(0);
    for (const auto& s : ledger.slices)
        total_budget += s.alpha * Rational(static_cast<long>(s.columns.size()), 3);
    CHECK(total_budget == Rational(6 - 1, 3) - (rat(4, 5) + rat(3, 10)) / 3);
    CHECK(total_budget == ledger.leftover_demand); // frontier point saturates it

    // 23/10 is the feasibility frontier for lambda_1 here.
    DemandVector beyond{rat(23, 10) + rat(1, 100), rat(4, 5), rat(3, 10)};
    auto state2 = alloc::greedy_prefix(h, beyond);
    CHECK_THROWS_AS(alloc::slice_allocate(h, state2, beyond), InfeasibleDemand);
    CHECK_FALSE(region::membership(h, beyond).member);
    CHECK(region::membership(h, lambda).member);
}

TEST_CASE("boundary certificates saturate every sliced column") {
    auto h = hg::build_hypergraph(GeneratorSpec(6, 3, 3));
    DemandVector lambda{rat(23, 10), rat(4, 5), rat(3, 10)};
    auto state = alloc::greedy_prefix(h, lambda);
    auto cert = alloc::slice_allocate(h, state, lambda);
    for (int c = 0; c < 6; ++c) CHECK(cert.per_vertex_load[c] == 1);
    // The partition form k*sum_A + sum_B + k*sum_C = n + |A|(k-1) holds with
    // equality on the frontier.
    CHECK(rat(3) * lambda[0] + lambda[1] + lambda[2] == rat(6) + rat(1) * 2);
}

TEST_CASE("sampled greedy completeness at (12,3)") {
    using srrkit::orbitlp::max_axis;
    for (int i = 0; i <= 3; ++i) {
        GeneratorSpec spec(12, 3, i);
        auto h = hg::build_hypergraph(spec);
        for (auto base2 : {std::pair{rat(0), rat(0)}, {rat(1), rat(1, 2)},
                           {rat(3, 2), rat(2)}, {rat(2), rat(1)}}) {
            DemandVector base{base2.first, base2.second, rat(0)};
            auto gamma = max_axis(spec, base, 3);
            REQUIRE(gamma.has_value());
            // snap down to the grid, then allocate at the frontier and inside
            Rational scaled = *gamma * 4;
            Rational snapped(numerator(scaled) / denominator(scaled), 4);
            Rational half = snapped / 2;
            for (const Rational& t : {snapped, half}) {
                DemandVector lambda = base;
                lambda[2] = t;
                auto res = alloc::allocate(h, lambda);
                CHECK(res.feasible);
            }
        }
    }
}

TEST_CASE("single uniform slice when i = 0") {
    auto h = hg::build_hypergraph(GeneratorSpec(6, 3, 0));
    DemandVector lambda{rat(1), rat(1, 2), rat(1, 2)}; // sum = n/k
    auto state = alloc::greedy_prefix(h, lambda);
    alloc::SliceLedger ledger;
    auto cert = alloc::slice_allocate(h, state, lambda, &ledger);
    CHECK(alloc::verify_certificate(h, cert));
    REQUIRE(ledger.slices.size() == 1);
    CHECK(ledger.slices[0].alpha == 1);
    CHECK(ledger.slices[0].columns.size() == 6);
}

TEST_CASE("tiling reproduces the (5,3,3) ledger") {
    auto h = hg::build_hypergraph(GeneratorSpec(5, 3, 3));
    DemandVector lambda{rat(19, 10), rat(3, 5), rat(1, 2)};
    auto state = alloc::greedy_prefix(h, lambda);
    auto cert = alloc::tile_allocate(h, state, lambda);
    CHECK(alloc::verify_certificate(h, cert));
    // Column loads: systematic full, both parity columns at 9/10.
    CHECK(cert.per_vertex_load[0] == 1);
    CHECK(cert.per_vertex_load[1] == 1);
    CHECK(cert.per_vertex_load[2] == 1);
    CHECK(cert.per_vertex_load[3] == rat(9, 10));
    CHECK(cert.per_vertex_load[4] == rat(9, 10));

    DemandVector too_much{rat(2), rat(3, 5), rat(1, 2)};
    auto s2 = alloc::greedy_prefix(h, too_much);
    CHECK_THROWS_AS(alloc::tile_allocate(h, s2, too_much), PreconditionFailed);
}

TEST_CASE("allocate dispatcher") {
    // Slicing path.
    auto h22 = hg::build_hypergraph(GeneratorSpec(4, 2, 2));
    auto res = alloc::allocate(h22, {rat(3, 2), rat(3, 4)});
    REQUIRE(res.feasible);
    CHECK(res.certificate->method == alloc::AllocationCertificate::GreedyPlusSlicing);
    CHECK(alloc::verify_certificate(h22, *res.certificate));

    // Greedy alone when everything fits systematically.
    auto res_greedy = alloc::allocate(h22, {rat(1), rat(1, 2)});
    REQUIRE(res_greedy.feasible);
    CHECK(res_greedy.certificate->method == alloc::AllocationCertificate::Greedy);

    // Unique-vector corner: only the systematic edges carry weight.
    auto h33 = hg::build_hypergraph(GeneratorSpec(3, 3, 3));
    auto res_ones = alloc::allocate(h33, {rat(1), rat(1), rat(1)});
    REQUIRE(res_ones.feasible);
    CHECK(res_ones.certificate->edge_weights.size() == 3);
    for (const auto& [id, w] : res_ones.certificate->edge_weights) {
        CHECK(h33.edges[id - 1].kind == hg::Hyperedge::Systematic);
        CHECK(w == 1);
    }

    // Out of region.
    auto res_out = alloc::allocate(h22, {rat(3), rat(0)});
    CHECK_FALSE(res_out.feasible);
    CHECK_FALSE(res_out.infeasibility.empty());

    // Tiling path via the dispatcher.
    auto h533 = hg::build_hypergraph(GeneratorSpec(5, 3, 3));
    auto res_tile = alloc::allocate(h533, {rat(19, 10), rat(3, 5), rat(1, 2)});
    REQUIRE(res_tile.feasible);
    CHECK(res_tile.certificate->method == alloc::AllocationCertificate::GreedyPlusTiling);

    // Pinned-LP fallback in the corner interior.
    auto res_lp = alloc::allocate(h533, {rat(3, 2), rat(3, 5), rat(1, 2)});
    REQUIRE(res_lp.feasible);
    CHECK(res_lp.certificate->method == alloc::AllocationCertificate::LpWitness);
    CHECK(alloc::verify_certificate(h533, *res_lp.certificate));
}

TEST_CASE("verify_certificate rejects tampered weights") {
    auto h = hg::build_hypergraph(GeneratorSpec(4, 2, 2));
    auto res = alloc::allocate(h, {rat(3, 2), rat(3, 4)});
    auto cert = *res.certificate;
    CHECK(alloc::verify_certificate(h, cert));

    auto overload = cert;
    overload.edge_weights.begin()->second += rat(11, 10);
    overload.per_vertex_load = std::vector<Rational>(h.vertex_count(), rat(0));
    CHECK_FALSE(alloc::verify_certificate(h, overload));

    auto wrong_ledger = cert;
    wrong_ledger.per_vertex_load[0] += rat(1, 7);
    CHECK_FALSE(alloc::verify_certificate(h, wrong_ledger));
}
