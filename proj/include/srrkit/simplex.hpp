#pragma once

#include <string>
#include <vector>

#include "srrkit/rational.hpp"

namespace srrkit::lp {

enum class Rel { LE, GE, EQ };

struct Constraint {
    std::vector<Rational> coeffs;
    Rel rel;
    Rational rhs;
};

// maximize objective . x  subject to rows, x >= 0.
struct Problem {
    int num_vars = 0;
    std::vector<Rational> objective;
    std::vector<Constraint> rows;
};

enum class SolveStatus { Optimal, Infeasible, Unbounded };

struct Solution {
    SolveStatus status = SolveStatus::Infeasible;
    Rational objective;
    std::vector<Rational> x; // primal witness, set when Optimal
    // Infeasibility certificate: one multiplier per original row with
    // y >= 0 on LE rows, y <= 0 on GE rows, free on EQ rows, such that
    // sum_r y_r a_r >= 0 componentwise while sum_r y_r b_r < 0.
    std::vector<Rational> farkas;
    long pivots = 0;
};

// Two-phase primal simplex on an integer tableau (fraction-free pivoting).
// Entering rule: most negative reduced cost with lowest-index ties,
// switching permanently to Bland's rule after a run of degenerate pivots so
// cycling is impossible. Runs on 64-bit words and retries in
// arbitrary-precision integers if a tableau entry overflows. Feasible
// witnesses and Farkas certificates are re-verified against the input rows
// in exact rational arithmetic before returning.
Solution solve(const Problem& p);

// Human-readable exact dump (used by --dump-lp).
std::string dump_problem(const Problem& p);

} // namespace srrkit::lp
