#pragma once

#include <map>
#include <optional>
#include <vector>

#include "srrkit/hypergraph.hpp"
#include "srrkit/region.hpp"

namespace srrkit::alloc {

using region::DemandVector;

// Sparse edge weighting proving a demand vector servable, together with the
// per-vertex load ledger it induces.
struct AllocationCertificate {
    enum Method { Greedy, GreedyPlusSlicing, GreedyPlusTiling, LpWitness } method = Greedy;
    codes::GeneratorSpec spec;
    DemandVector lambda;
    std::map<int, Rational> edge_weights;  // edge id -> weight, nonzero entries only
    std::vector<Rational> per_vertex_load; // indexed by vertex id - 1
};

// Everything the greedy prefix pins down: the demand partition, the demand
// still to serve per object, and the capacity each column retains.
struct GreedyState {
    region::GreedyPartition partition;
    DemandVector residual;                      // per object, systematic part removed
    std::vector<Rational> column_capacity;      // per column 1..n
    std::map<int, Rational> systematic_weights; // systematic edge id -> weight
};

GreedyState greedy_prefix(const hg::RecoveryHypergraph& h, const DemandVector& lambda);

struct SliceLedger {
    struct Slice {
        std::vector<int> columns; // 1-based column indices
        Rational alpha;           // uniform per-column capacity
        Rational served;
    };
    std::vector<Slice> slices;
    Rational leftover_demand;
};

// Uniform-capacity slicing over shrinking column suffixes; requires
// n - i >= k and demands inside the region (throws InfeasibleDemand
// otherwise). Fills `ledger` when given.
AllocationCertificate slice_allocate(const hg::RecoveryHypergraph& h, const GreedyState& state,
                                     const DemandVector& lambda, SliceLedger* ledger = nullptr);

// Corner construction for n = k+i-1: one size-k tile per partially loaded
// systematic column, paired with the unused columns. Hypotheses
// (sum lambda = i, residual fits) are checked; PreconditionFailed otherwise.
AllocationCertificate tile_allocate(const hg::RecoveryHypergraph& h, const GreedyState& state,
                                    const DemandVector& lambda);

struct AllocateResult {
    bool feasible = false;
    std::optional<AllocationCertificate> certificate;
    // Farkas multipliers of the pinned residual LP when infeasible.
    std::vector<Rational> infeasibility;
};

// Greedy prefix, then the constructive path the parameters admit, then a
// residual LP with the greedy weights pinned. Infeasibility is a result,
// not an error.
AllocateResult allocate(const hg::RecoveryHypergraph& h, const DemandVector& lambda);
AllocateResult allocate(const codes::GeneratorSpec& spec, const DemandVector& lambda);

// Independent re-check of demand satisfaction, vertex capacities, weight
// signs and the stored load ledger by direct summation.
bool verify_certificate(const hg::RecoveryHypergraph& h, const AllocationCertificate& c);

} // namespace srrkit::alloc
