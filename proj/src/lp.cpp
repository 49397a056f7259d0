#include "srrkit/lp.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace srrkit::lp {

namespace {

void check_dims(const hg::BinMatrix& A, const hg::BinMatrix& S,
                const std::vector<Rational>& lambda) {
    if (S.rows != A.cols) throw std::invalid_argument("S row count must equal edge count");
    if (static_cast<int>(lambda.size()) != S.cols)
        throw std::invalid_argument("demand length must equal object count");
    for (const auto& v : lambda)
        if (v < 0) throw std::invalid_argument("demands must be nonnegative");
}

// Demand-satisfaction rows (lambda = w S as a <=/>= pair) followed by the
// vertex capacity rows. `extra` appends one trailing variable column.
Problem feasibility_problem(const hg::BinMatrix& A, const hg::BinMatrix& S,
                            const std::vector<Rational>& lambda, int axis = 0) {
    const int edges = A.cols;
    const int k = S.cols;
    const bool with_gamma = axis > 0;
    Problem p;
    p.num_vars = edges + (with_gamma ? 1 : 0);
    p.objective.assign(p.num_vars, Rational(0));
    for (int j = 0; j < k; ++j) {
        Constraint row;
        row.coeffs.assign(p.num_vars, Rational(0));
        for (int e = 0; e < edges; ++e)
            if (S.at(e, j)) row.coeffs[e] = 1;
        if (with_gamma && j == axis - 1) row.coeffs[edges] = -1;
        row.rhs = lambda[j];
        row.rel = Rel::LE;
        p.rows.push_back(row);
        row.rel = Rel::GE;
        p.rows.push_back(std::move(row));
    }
    for (int v = 0; v < A.rows; ++v) {
        Constraint row;
        row.coeffs.assign(p.num_vars, Rational(0));
        for (int e = 0; e < edges; ++e)
            if (A.at(v, e)) row.coeffs[e] = 1;
        row.rel = Rel::LE;
        row.rhs = 1;
        p.rows.push_back(std::move(row));
    }
    return p;
}

// Lemma-2 capacity bound |V| >= sum w_eps * |eps|, asserted on every
// feasible matching the solver hands back.
void assert_capacity_bound(const hg::BinMatrix& A, const std::vector<Rational>& w) {
    Rational used(0);
    for (int e = 0; e < A.cols; ++e) {
        if (w[e] == 0) continue;
        int size = 0;
        for (int v = 0; v < A.rows; ++v) size += A.at(v, e);
        used += w[e] * size;
    }
    if (used > A.rows) throw std::logic_error("capacity bound violated by solver output");
}

} // namespace

LpOutcome feasibility(const hg::BinMatrix& A, const hg::BinMatrix& S,
                      const std::vector<Rational>& lambda) {
    check_dims(A, S, lambda);
    Solution sol = solve(feasibility_problem(A, S, lambda));
    LpOutcome out;
    out.pivot_count = sol.pivots;
    if (sol.status == SolveStatus::Infeasible) {
        out.status = LpOutcome::Infeasible;
        out.certificate = std::move(sol.farkas);
        return out;
    }
    out.status = LpOutcome::Feasible;
    out.witness = std::move(sol.x);
    assert_capacity_bound(A, out.witness);
    return out;
}

LpOutcome matching_number(const hg::BinMatrix& A) {
    Problem p;
    p.num_vars = A.cols;
    p.objective.assign(p.num_vars, Rational(1));
    for (int v = 0; v < A.rows; ++v) {
        Constraint row;
        row.coeffs.assign(p.num_vars, Rational(0));
        for (int e = 0; e < A.cols; ++e)
            if (A.at(v, e)) row.coeffs[e] = 1;
        row.rel = Rel::LE;
        row.rhs = 1;
        p.rows.push_back(std::move(row));
    }
    Solution sol = solve(p);
    if (sol.status != SolveStatus::Optimal) throw std::logic_error("matching LP must be bounded");
    LpOutcome out;
    out.status = LpOutcome::Optimal;
    out.value = sol.objective;
    out.witness = std::move(sol.x);
    out.pivot_count = sol.pivots;
    assert_capacity_bound(A, out.witness);
    return out;
}

LpOutcome vertex_cover_number(const hg::BinMatrix& A) {
    // Collapse duplicate edge columns (parallel edges cover identically).
    std::map<std::vector<std::uint8_t>, int> unique_edges;
    for (int e = 0; e < A.cols; ++e) {
        std::vector<std::uint8_t> col(A.rows);
        for (int v = 0; v < A.rows; ++v) col[v] = A.at(v, e);
        unique_edges.emplace(std::move(col), e);
    }

    Problem p;
    p.num_vars = A.rows;
    p.objective.assign(p.num_vars, Rational(-1)); // minimize sum(d)
    for (const auto& [col, _] : unique_edges) {
        Constraint row;
        row.coeffs.assign(p.num_vars, Rational(0));
        for (int v = 0; v < A.rows; ++v)
            if (col[v]) row.coeffs[v] = 1;
        row.rel = Rel::GE;
        row.rhs = 1;
        p.rows.push_back(std::move(row));
    }
    Solution sol = solve(p);
    if (sol.status != SolveStatus::Optimal) throw std::logic_error("cover LP must be bounded");

    // Re-check against the full, uncollapsed edge set.
    for (int e = 0; e < A.cols; ++e) {
        Rational covered(0);
        for (int v = 0; v < A.rows; ++v)
            if (A.at(v, e)) covered += sol.x[v];
        if (covered < 1) throw std::logic_error("cover witness misses an edge");
    }

    LpOutcome out;
    out.status = LpOutcome::Optimal;
    out.value = -sol.objective;
    out.witness = std::move(sol.x);
    out.pivot_count = sol.pivots;
    return out;
}

Rational duality_gap(const hg::BinMatrix& A) {
    if (A.cols == 0) return Rational(0); // edgeless: nu* = tau* = 0
    return matching_number(A).value - vertex_cover_number(A).value;
}

LpOutcome max_axis_rate(const hg::BinMatrix& A, const hg::BinMatrix& S,
                        const std::vector<Rational>& base, int axis) {
    check_dims(A, S, base);
    if (axis < 1 || axis > S.cols) throw std::invalid_argument("axis out of range");
    Problem p = feasibility_problem(A, S, base, axis);
    p.objective[p.num_vars - 1] = 1;
    Solution sol = solve(p);
    LpOutcome out;
    out.pivot_count = sol.pivots;
    if (sol.status == SolveStatus::Infeasible) {
        out.status = LpOutcome::Infeasible;
        out.certificate = std::move(sol.farkas);
        return out;
    }
    if (sol.status == SolveStatus::Unbounded)
        throw std::logic_error("axis rate is bounded by the vertex capacities");
    out.status = LpOutcome::Optimal;
    out.value = sol.x.back();
    sol.x.pop_back();
    out.witness = std::move(sol.x);
    return out;
}

std::pair<Rational, Rational> edge_weight_range(const hg::BinMatrix& A, const hg::BinMatrix& S,
                                                const std::vector<Rational>& lambda, int edge) {
    check_dims(A, S, lambda);
    if (edge < 0 || edge >= A.cols) throw std::invalid_argument("edge index out of range");
    Problem p = feasibility_problem(A, S, lambda);
    p.objective[edge] = -1;
    Solution lo = solve(p);
    p.objective[edge] = 1;
    Solution hi = solve(p);
    if (lo.status != SolveStatus::Optimal || hi.status != SolveStatus::Optimal)
        throw std::invalid_argument("lambda must be servable");
    return {-lo.objective, hi.objective};
}

std::string dump_feasibility_lp(const hg::BinMatrix& A, const hg::BinMatrix& S,
                                const std::vector<Rational>& lambda) {
    check_dims(A, S, lambda);
    return dump_problem(feasibility_problem(A, S, lambda));
}

} // namespace srrkit::lp
