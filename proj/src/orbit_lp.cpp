#include "srrkit/orbit_lp.hpp"

#include <stdexcept>

#include "srrkit/combinatorics.hpp"
#include "srrkit/simplex.hpp"

namespace srrkit::orbitlp {

namespace {

struct Orbit {
    int label;                   // object the orbit serves
    std::vector<int> sys_cols;   // systematic columns every edge contains
    int parity_count;            // parity columns per edge (k - |sys_cols|)
};

struct ReducedProblem {
    lp::Problem problem;
    int gamma_var = -1;
};

// Variables: s_1..s_i (systematic edge weights), then one total weight per
// orbit, then gamma when an axis is requested. Rows: demand equalities per
// object, one capacity row per systematic column, one aggregated parity
// row.
ReducedProblem build(const codes::GeneratorSpec& spec, const std::vector<Rational>& lambda,
                     int axis) {
    if (static_cast<int>(lambda.size()) != spec.k)
        throw std::invalid_argument("demand length does not match k");
    const int n = spec.n, k = spec.k, i = spec.i;
    const int parity_total = n - i;

    std::vector<Orbit> orbits;
    for (int m = 1; m <= k; ++m) {
        int sys_max = m <= i ? i - 1 : i;
        for (int size = 0; size <= std::min(sys_max, k); ++size) {
            int parity = k - size;
            if (parity < 1 || parity > parity_total) continue;
            // Systematic supports: size-subsets of [i] minus the label.
            std::vector<int> pool;
            for (int c = 1; c <= i; ++c)
                if (c != m) pool.push_back(c);
            for (const auto& subset : k_subsets(static_cast<int>(pool.size()), size)) {
                Orbit o;
                o.label = m;
                for (int idx : subset) o.sys_cols.push_back(pool[idx]);
                o.parity_count = parity;
                orbits.push_back(std::move(o));
            }
        }
    }

    ReducedProblem rp;
    lp::Problem& p = rp.problem;
    const int orbit_base = i;
    p.num_vars = i + static_cast<int>(orbits.size()) + (axis > 0 ? 1 : 0);
    if (axis > 0) rp.gamma_var = p.num_vars - 1;
    p.objective.assign(p.num_vars, Rational(0));
    if (axis > 0) p.objective[rp.gamma_var] = 1;

    for (int m = 1; m <= k; ++m) {
        lp::Constraint row;
        row.coeffs.assign(p.num_vars, Rational(0));
        if (m <= i) row.coeffs[m - 1] = 1;
        for (std::size_t o = 0; o < orbits.size(); ++o)
            if (orbits[o].label == m) row.coeffs[orbit_base + o] = 1;
        if (axis == m) row.coeffs[rp.gamma_var] = -1;
        row.rel = lp::Rel::EQ;
        row.rhs = axis == m ? Rational(0) : lambda[m - 1];
        p.rows.push_back(std::move(row));
    }
    for (int c = 1; c <= i; ++c) {
        lp::Constraint row;
        row.coeffs.assign(p.num_vars, Rational(0));
        row.coeffs[c - 1] = 1;
        for (std::size_t o = 0; o < orbits.size(); ++o)
            for (int sc : orbits[o].sys_cols)
                if (sc == c) row.coeffs[orbit_base + o] = 1;
        row.rel = lp::Rel::LE;
        row.rhs = 1;
        p.rows.push_back(std::move(row));
    }
    if (parity_total > 0) {
        lp::Constraint row;
        row.coeffs.assign(p.num_vars, Rational(0));
        for (std::size_t o = 0; o < orbits.size(); ++o)
            row.coeffs[orbit_base + o] = Rational(orbits[o].parity_count, parity_total);
        row.rel = lp::Rel::LE;
        row.rhs = 1;
        p.rows.push_back(std::move(row));
    }
    return rp;
}

} // namespace

bool member(const codes::GeneratorSpec& spec, const std::vector<Rational>& lambda) {
    auto rp = build(spec, lambda, 0);
    return lp::solve(rp.problem).status == lp::SolveStatus::Optimal;
}

std::optional<Rational> max_axis(const codes::GeneratorSpec& spec,
                                 const std::vector<Rational>& base, int axis) {
    if (axis < 1 || axis > spec.k) throw std::invalid_argument("axis out of range");
    auto rp = build(spec, base, axis);
    auto sol = lp::solve(rp.problem);
    if (sol.status == lp::SolveStatus::Infeasible) return std::nullopt;
    if (sol.status != lp::SolveStatus::Optimal)
        throw std::logic_error("axis rate must be bounded");
    return sol.objective;
}

} // namespace srrkit::orbitlp
