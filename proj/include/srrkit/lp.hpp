#pragma once

#include <utility>
#include <vector>

#include "srrkit/hypergraph.hpp"
#include "srrkit/rational.hpp"
#include "srrkit/simplex.hpp"

namespace srrkit::lp {

// Edge weights w indexed like the hypergraph edge list; feasible iff
// A w <= 1 componentwise with w >= 0.
using MatchingVector = std::vector<Rational>;
// Vertex weights d; feasible iff A^T d >= 1 componentwise with d >= 0.
using CoverVector = std::vector<Rational>;

struct LpOutcome {
    enum Status { Feasible, Infeasible, Optimal } status;
    Rational value;                    // set for Optimal
    std::vector<Rational> witness;     // w or d, re-verified exactly
    std::vector<Rational> certificate; // Farkas multipliers when Infeasible
    long pivot_count = 0;
};

// Feasibility of lambda = w S, A w <= 1, w >= 0. The equality is encoded
// as a <=/>= pair so one solver core handles everything.
LpOutcome feasibility(const hg::BinMatrix& A, const hg::BinMatrix& S,
                      const std::vector<Rational>& lambda);

// nu*: maximize the matching size sum(w) over A w <= 1, w >= 0.
LpOutcome matching_number(const hg::BinMatrix& A);

// tau*: minimize the cover size sum(d) over A^T d >= 1, d >= 0. Parallel
// edges produce identical cover rows and are collapsed before the solve;
// the witness is re-checked against the full edge set.
LpOutcome vertex_cover_number(const hg::BinMatrix& A);

// nu* - tau*; exactly zero by strong duality.
Rational duality_gap(const hg::BinMatrix& A);

// Largest gamma such that base + gamma * e_axis (1-based axis) is servable,
// with the other coordinates pinned at base. Infeasible when base itself is
// not servable at gamma = 0.
LpOutcome max_axis_rate(const hg::BinMatrix& A, const hg::BinMatrix& S,
                        const std::vector<Rational>& base, int axis);

// Exact range of one edge weight over all matchings serving lambda.
// Preconditions: lambda servable.
std::pair<Rational, Rational> edge_weight_range(const hg::BinMatrix& A, const hg::BinMatrix& S,
                                                const std::vector<Rational>& lambda, int edge);

// The constraint system of feasibility() in exact text form (--dump-lp).
std::string dump_feasibility_lp(const hg::BinMatrix& A, const hg::BinMatrix& S,
                                const std::vector<Rational>& lambda);

} // namespace srrkit::lp
