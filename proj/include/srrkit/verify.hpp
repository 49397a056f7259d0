#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "srrkit/codes.hpp"
#include "srrkit/rational.hpp"

namespace srrkit::verify {

struct SweepConfig {
    int k_min = 2;
    int k_max = 4;
    int n_max = 8;
    Rational grid_step{1, 4};
    int random_points = 200;
    std::uint64_t seed = 0x5EED;
    long spot_stride = 509; // every Nth grid point re-checked on the full edge LP
    bool duality = true;
    bool oracle = true;
    bool inclusion = true;
    bool greedy = true;
    bool uniqueness = true;
};

struct Violation {
    std::string check;
    std::string detail;
};

struct Report {
    SweepConfig config;
    long duality_instances = 0;
    long oracle_specs = 0;
    long oracle_columns = 0;      // grid columns settled by one axis-max LP
    long oracle_grid_points = 0;  // grid points those columns decide
    long oracle_random_points = 0;
    long oracle_spot_checks = 0;  // full edge-LP cross-checks of grid points
    long inclusion_columns = 0;
    long inclusion_witnesses = 0;
    long inclusion_degenerate_empty = 0;
    long greedy_accepted_points = 0;
    long uniqueness_probes = 0;
    long uniqueness_points = 0;
    std::vector<Violation> violations;

    bool ok() const { return violations.empty(); }
};

// The full property sweep: duality, closed-form vs LP oracle equivalence,
// bounding-simplex sandwich, inclusion chain, greedy completeness on every
// LP-accepted grid point, and the unique-vector probes.
Report run_sweep(const SweepConfig& cfg);

nlohmann::ordered_json report_json(const Report& r);

// Inclusion grid for one (n, k): per grid column the axis maxima of
// S_0..S_k must be nondecreasing in i. Used standalone for (12, 3).
struct InclusionCheck {
    long columns = 0;
    std::vector<Violation> violations;
};
InclusionCheck inclusion_grid(int n, int k, const Rational& step);

// Unique-vector probe for one spec with k <= n <= k+i-2.
std::vector<Violation> uniqueness_probe(const codes::GeneratorSpec& spec, const Rational& step,
                                        long* points_checked);

} // namespace srrkit::verify
