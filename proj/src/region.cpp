#include "srrkit/region.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "srrkit/combinatorics.hpp"
#include "srrkit/errors.hpp"

namespace srrkit::region {

const char* provenance_name(Provenance p) {
    switch (p) {
        case Provenance::Theorem5: return "Theorem5";
        case Provenance::SPC: return "SPC";
        case Provenance::CornerNMinus1: return "CornerNMinus1";
        case Provenance::MatchingSimplex: return "MatchingSimplex";
        case Provenance::AchievableSimplex: return "AchievableSimplex";
        case Provenance::S0: return "S0";
    }
    return "?";
}

bool HPolytope::contains(const DemandVector& lambda) const {
    if (static_cast<int>(lambda.size()) != k)
        throw std::invalid_argument("demand length does not match polytope dimension");
    for (const auto& v : lambda)
        if (v < 0) return false;
    for (const auto& c : constraints) {
        Rational lhs(0);
        for (int j = 0; j < k; ++j)
            if (c.coeffs[j] != 0 && lambda[j] != 0) lhs += c.coeffs[j] * lambda[j];
        if (lhs > c.bound) return false;
    }
    return true;
}

std::optional<Rational> HPolytope::max_axis(const DemandVector& base, int axis) const {
    if (axis < 1 || axis > k) throw std::invalid_argument("axis out of range");
    std::optional<Rational> best;
    for (const auto& c : constraints) {
        Rational rest(0);
        for (int j = 0; j < k; ++j)
            if (j != axis - 1) rest += c.coeffs[j] * base[j];
        Rational room = c.bound - rest;
        const Rational& coef = c.coeffs[axis - 1];
        if (coef == 0) {
            if (room < 0) return std::nullopt;
            continue;
        }
        Rational gamma = room / coef;
        if (gamma < 0) return std::nullopt;
        if (!best || gamma < *best) best = gamma;
    }
    return best;
}

GreedyPartition partition_demands(const codes::GeneratorSpec& spec, const DemandVector& lambda) {
    if (static_cast<int>(lambda.size()) != spec.k)
        throw std::invalid_argument("demand length does not match k");
    GreedyPartition part;
    for (int j = 1; j <= spec.i; ++j)
        (lambda[j - 1] >= 1 ? part.a : part.b).push_back(j);
    for (int j = spec.i + 1; j <= spec.k; ++j) part.c.push_back(j);
    return part;
}

MembershipResult membership(const hg::RecoveryHypergraph& h, const DemandVector& lambda) {
    auto outcome = lp::feasibility(h.incidence, h.label_matrix, lambda);
    return {outcome.status == lp::LpOutcome::Feasible, std::move(outcome)};
}

MembershipResult membership(const codes::GeneratorSpec& spec, const DemandVector& lambda) {
    return membership(hg::build_hypergraph(spec), lambda);
}

Rational max_demand(const codes::GeneratorSpec& spec, int j) {
    if (j < 1 || j > spec.k) throw std::invalid_argument("object index out of range");
    if (j <= spec.i) {
        if (spec.n == spec.k) return 1;
        return 1 + Rational(spec.n - 1, spec.k);
    }
    return Rational(spec.n, spec.k);
}

Rational matching_number_closed_form(const codes::GeneratorSpec& spec) {
    if (spec.n - spec.i >= spec.k) return spec.i + Rational(spec.n - spec.i, spec.k);
    return spec.i;
}

HPolytope matching_simplex(const codes::GeneratorSpec& spec) {
    HPolytope p;
    p.k = spec.k;
    p.provenance = Provenance::MatchingSimplex;
    p.constraints.push_back(
        {std::vector<Rational>(spec.k, Rational(1)), matching_number_closed_form(spec)});
    return p;
}

HPolytope achievable_simplex(const codes::GeneratorSpec& spec) {
    HPolytope p;
    p.k = spec.k;
    p.provenance = Provenance::AchievableSimplex;
    HConstraint c;
    c.bound = 1;
    for (int j = 1; j <= spec.k; ++j) c.coeffs.push_back(Rational(1) / max_demand(spec, j));
    p.constraints.push_back(std::move(c));
    return p;
}

namespace {

// k * (sum over A and C) + (sum over B) <= n + |A|(k-1), with B = [i] \ A
// and C = {i+1..k}.
HConstraint node_capacity_constraint(int n, int k, int i, const std::vector<int>& a_set) {
    HConstraint c;
    c.coeffs.assign(k, Rational(1));
    for (int j = i + 1; j <= k; ++j) c.coeffs[j - 1] = k;
    for (int j : a_set) c.coeffs[j - 1] = k;
    c.bound = n + static_cast<long>(a_set.size()) * (k - 1);
    return c;
}

bool constant_coeffs(const HConstraint& c) {
    for (const auto& v : c.coeffs)
        if (v != c.coeffs[0]) return false;
    return true;
}

// All subsets of {1..i} ordered by descending size, lexicographic within a
// size. Matches the order the constraint families are written in.
std::vector<std::vector<int>> subsets_desc(int i) {
    std::vector<std::vector<int>> out;
    for (int size = i; size >= 0; --size) {
        for (const auto& subset : k_subsets(i, size)) {
            std::vector<int> s;
            for (int idx : subset) s.push_back(idx + 1);
            out.push_back(std::move(s));
        }
    }
    return out;
}

} // namespace

std::optional<HPolytope> closed_form_polytope(const codes::GeneratorSpec& spec) {
    const int n = spec.n, k = spec.k, i = spec.i;
    HPolytope p;
    p.k = k;

    if (i == 0) {
        p.provenance = Provenance::S0;
        p.constraints.push_back({std::vector<Rational>(k, Rational(1)), Rational(n, k)});
        return p;
    }
    if (n >= k + i) {
        p.provenance = Provenance::Theorem5;
        for (const auto& a_set : subsets_desc(i)) {
            // For i == k the A = {} row is parallel to and dominated by the
            // A = [k] row; only the tighter one is kept.
            if (i == k && a_set.empty()) continue;
            p.constraints.push_back(node_capacity_constraint(n, k, i, a_set));
        }
        return p;
    }
    if (i == k && n == k + 1) {
        p.provenance = Provenance::SPC;
        for (int a = 1; a <= k; ++a)
            for (int b = a + 1; b <= k; ++b) {
                HConstraint c;
                c.coeffs.assign(k, Rational(0));
                c.coeffs[a - 1] = 1;
                c.coeffs[b - 1] = 1;
                c.bound = 2;
                p.constraints.push_back(std::move(c));
            }
        for (const auto& a_set : subsets_desc(k))
            p.constraints.push_back(node_capacity_constraint(n, k, i, a_set));
        return p;
    }
    if (n == k + i - 1) {
        p.provenance = Provenance::CornerNMinus1;
        p.constraints.push_back({std::vector<Rational>(k, Rational(1)), Rational(i)});
        for (const auto& a_set : subsets_desc(i)) {
            HConstraint c = node_capacity_constraint(n, k, i, a_set);
            // Rows with a constant coefficient vector are parallel to the
            // vertex-cover row and strictly looser; the published lists
            // omit them.
            if (constant_coeffs(c)) continue;
            p.constraints.push_back(std::move(c));
        }
        return p;
    }
    return std::nullopt; // k <= n < k+i-1: open regime
}

namespace {

// Unique solution of rows . x = rhs for a square rational system; nullopt
// when singular.
std::optional<DemandVector> solve_square(std::vector<std::vector<Rational>> m,
                                         std::vector<Rational> rhs) {
    const int k = static_cast<int>(rhs.size());
    for (int col = 0; col < k; ++col) {
        int pivot = -1;
        for (int r = col; r < k; ++r)
            if (m[r][col] != 0) { pivot = r; break; }
        if (pivot < 0) return std::nullopt;
        std::swap(m[pivot], m[col]);
        std::swap(rhs[pivot], rhs[col]);
        Rational inv = Rational(1) / m[col][col];
        for (int c = col; c < k; ++c) m[col][c] *= inv;
        rhs[col] *= inv;
        for (int r = 0; r < k; ++r) {
            if (r == col || m[r][col] == 0) continue;
            Rational f = m[r][col];
            for (int c = col; c < k; ++c) m[r][c] -= f * m[col][c];
            rhs[r] -= f * rhs[col];
        }
    }
    return rhs;
}

} // namespace

std::vector<DemandVector> enumerate_vertices(const HPolytope& p) {
    const int k = p.k;
    if (k != 2 && k != 3)
        throw UnsupportedQuery("vertex enumeration is limited to 2 and 3 objects");

    // Hyperplane list: polytope facets plus the coordinate planes.
    std::vector<HConstraint> planes = p.constraints;
    for (int j = 0; j < k; ++j) {
        HConstraint axis;
        axis.coeffs.assign(k, Rational(0));
        axis.coeffs[j] = 1;
        axis.bound = 0;
        planes.push_back(std::move(axis));
    }

    std::set<DemandVector> found;
    for (const auto& pick : k_subsets(static_cast<int>(planes.size()), k)) {
        std::vector<std::vector<Rational>> m;
        std::vector<Rational> rhs;
        for (int idx : pick) {
            m.push_back(planes[idx].coeffs);
            rhs.push_back(planes[idx].bound);
        }
        auto x = solve_square(std::move(m), std::move(rhs));
        if (!x) continue;
        if (p.contains(*x)) found.insert(*x);
    }
    return {found.begin(), found.end()};
}

InclusionWitness inclusion_witness(int n, int k, int i) {
    if (i < 0 || i >= k) throw std::invalid_argument("need 0 <= i < k");
    codes::GeneratorSpec lo(n, k, i), hi(n, k, i + 1);
    InclusionWitness result;
    result.degenerate = (n == k);

    auto separates = [&](const DemandVector& point) {
        return membership(hi, point).member && !membership(lo, point).member;
    };

    if (n > k) {
        DemandVector point(k, Rational(0));
        point[i] = 1 + Rational(n - 1, k);
        if (!separates(point)) throw std::logic_error("intercept witness failed LP verification");
        result.point = point;
        return result;
    }

    // n == k: the intercept comparison reads 1 vs n/k = 1 and proves
    // nothing. Probe the uniform saturation point first, then fall back to
    // the grid; for i == 0 the two regions genuinely coincide and the
    // search comes back empty.
    DemandVector ones(k, Rational(0));
    for (int j = 0; j <= i; ++j) ones[j] = 1;
    if (separates(ones)) {
        result.point = ones;
        return result;
    }
    Rational box = matching_number_closed_form(hi) + 1;
    long steps = static_cast<long>(box * 4);
    std::vector<long> idx(k, 0);
    Rational sum_cap = matching_number_closed_form(hi);
    while (true) {
        DemandVector point;
        Rational total(0);
        for (long t : idx) {
            point.push_back(Rational(t, 4));
            total += Rational(t, 4);
        }
        if (total <= sum_cap && separates(point)) {
            result.point = point;
            return result;
        }
        int pos = k - 1;
        while (pos >= 0 && idx[pos] == steps) idx[pos--] = 0;
        if (pos < 0) break;
        ++idx[pos];
    }
    return result;
}

Rational sum_rate_bound(const hg::RecoveryHypergraph& h, const std::vector<int>& objects) {
    auto induced = hg::induced_subgraph(h, objects);
    if (induced.graph.edge_count() == 0) return 0;
    return lp::vertex_cover_number(induced.graph.incidence).value;
}

Rational sum_rate_bound(const codes::GeneratorSpec& spec, const std::vector<int>& objects) {
    return sum_rate_bound(hg::build_hypergraph(spec), objects);
}

} // namespace srrkit::region
