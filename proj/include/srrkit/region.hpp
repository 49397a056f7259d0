#pragma once

#include <optional>
#include <vector>

#include "srrkit/codes.hpp"
#include "srrkit/hypergraph.hpp"
#include "srrkit/lp.hpp"
#include "srrkit/rational.hpp"

namespace srrkit::region {

using DemandVector = std::vector<Rational>;

enum class Provenance { Theorem5, SPC, CornerNMinus1, MatchingSimplex, AchievableSimplex, S0 };

const char* provenance_name(Provenance p);

struct HConstraint {
    std::vector<Rational> coeffs;
    Rational bound; // coeffs . lambda <= bound
};

// H-representation over the nonnegative orthant: every polytope here
// implicitly includes lambda >= 0.
struct HPolytope {
    int k = 0;
    Provenance provenance = Provenance::S0;
    std::vector<HConstraint> constraints;

    bool contains(const DemandVector& lambda) const;

    // Largest gamma with base + gamma * e_axis (1-based) inside, the other
    // coordinates pinned; nullopt when even gamma = 0 is outside.
    std::optional<Rational> max_axis(const DemandVector& base, int axis) const;
};

// Index partition driven by the demands: A = {j <= i : lambda_j >= 1},
// B = [i] \ A, C = {i+1..k}.
struct GreedyPartition {
    std::vector<int> a;
    std::vector<int> b;
    std::vector<int> c;
    int i_a() const { return static_cast<int>(a.size()); }
};

GreedyPartition partition_demands(const codes::GeneratorSpec& spec, const DemandVector& lambda);

struct MembershipResult {
    bool member;
    lp::LpOutcome outcome; // Feasible witness or Farkas certificate
};

MembershipResult membership(const hg::RecoveryHypergraph& h, const DemandVector& lambda);
MembershipResult membership(const codes::GeneratorSpec& spec, const DemandVector& lambda);

// Axis intercept lambda_j^max in closed form: 1 + (n-1)/k for systematic
// objects when n > k, 1 when n == k, and n/k for coded objects.
Rational max_demand(const codes::GeneratorSpec& spec, int j);

// nu* in closed form: i + (n-i)/k when n - i >= k, else i.
Rational matching_number_closed_form(const codes::GeneratorSpec& spec);

HPolytope matching_simplex(const codes::GeneratorSpec& spec);
HPolytope achievable_simplex(const codes::GeneratorSpec& spec);

// The exact service region where the theory characterizes it, nullopt in
// the open regime k <= n < k+i-1 (membership stays available via the LP).
std::optional<HPolytope> closed_form_polytope(const codes::GeneratorSpec& spec);

// Exact vertex enumeration for k in {2, 3}; throws UnsupportedQuery above.
std::vector<DemandVector> enumerate_vertices(const HPolytope& p);

struct InclusionWitness {
    std::optional<DemandVector> point; // in S_{i+1} \ S_i, LP-verified
    bool degenerate = false;           // n == k: the intercept argument collapses
};

// Separating demand for S_i vs S_{i+1}. For n > k this is the axis
// intercept (1 + (n-1)/k) e_{i+1}; for n == k a grid search stands in and
// may legitimately come back empty.
InclusionWitness inclusion_witness(int n, int k, int i);

// tau* of the I-induced subgraph; bounds sum_{j in I} lambda_j over the
// region.
Rational sum_rate_bound(const codes::GeneratorSpec& spec, const std::vector<int>& objects);
Rational sum_rate_bound(const hg::RecoveryHypergraph& h, const std::vector<int>& objects);

} // namespace srrkit::region
