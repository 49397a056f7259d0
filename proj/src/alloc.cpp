#include "srrkit/alloc.hpp"

#include <algorithm>
#include <stdexcept>

#include "srrkit/combinatorics.hpp"
#include "srrkit/errors.hpp"
#include "srrkit/simplex.hpp"

namespace srrkit::alloc {

namespace {

// Lookup from (label, sorted column set) to edge id. Non-systematic edges
// only; systematic edges are addressed separately.
std::map<std::pair<int, std::vector<int>>, int> edge_index(const hg::RecoveryHypergraph& h) {
    std::map<std::pair<int, std::vector<int>>, int> index;
    for (const auto& e : h.edges)
        if (e.kind == hg::Hyperedge::NonSystematic) index[{e.label, e.vertices}] = e.id;
    return index;
}

int systematic_edge_id(const hg::RecoveryHypergraph& h, int object) {
    for (const auto& e : h.edges)
        if (e.kind == hg::Hyperedge::Systematic && e.label == object) return e.id;
    throw std::logic_error("missing systematic edge");
}

std::vector<Rational> vertex_loads(const hg::RecoveryHypergraph& h,
                                   const std::map<int, Rational>& weights) {
    std::vector<Rational> load(h.vertex_count(), Rational(0));
    for (const auto& [id, w] : weights)
        for (int v : h.edges[id - 1].vertices) load[v - 1] += w;
    return load;
}

AllocationCertificate finish(const hg::RecoveryHypergraph& h, AllocationCertificate c) {
    c.per_vertex_load = vertex_loads(h, c.edge_weights);
    if (!verify_certificate(h, c)) throw std::logic_error("constructed certificate failed re-check");
    return c;
}

// Demands the greedy prefix leaves open, as (object, amount) pairs in
// ascending object order.
std::vector<std::pair<int, Rational>> open_demands(const GreedyState& state) {
    std::vector<std::pair<int, Rational>> out;
    for (int j = 1; j <= static_cast<int>(state.residual.size()); ++j)
        if (state.residual[j - 1] > 0) out.emplace_back(j, state.residual[j - 1]);
    return out;
}

} // namespace

GreedyState greedy_prefix(const hg::RecoveryHypergraph& h, const DemandVector& lambda) {
    const auto& spec = h.spec;
    if (static_cast<int>(lambda.size()) != spec.k)
        throw std::invalid_argument("demand length does not match k");
    for (const auto& v : lambda)
        if (v < 0) throw std::invalid_argument("demands must be nonnegative");

    GreedyState state;
    state.partition = region::partition_demands(spec, lambda);
    state.residual = lambda;
    state.column_capacity.assign(spec.n, Rational(1));
    for (int j = 1; j <= spec.i; ++j) {
        Rational served = std::min(lambda[j - 1], Rational(1));
        if (served > 0) state.systematic_weights[systematic_edge_id(h, j)] = served;
        state.residual[j - 1] = lambda[j - 1] - served;
        state.column_capacity[j - 1] = 1 - served;
    }
    return state;
}

AllocationCertificate slice_allocate(const hg::RecoveryHypergraph& h, const GreedyState& state,
                                     const DemandVector& lambda, SliceLedger* ledger) {
    const auto& spec = h.spec;
    const int k = spec.k;
    if (spec.n - spec.i < k)
        throw PreconditionFailed("slicing needs n - i >= k");

    // B sorted by descending residual systematic demand, ties by index.
    std::vector<int> b_sorted = state.partition.b;
    std::sort(b_sorted.begin(), b_sorted.end(), [&](int x, int y) {
        if (lambda[x - 1] != lambda[y - 1]) return lambda[x - 1] > lambda[y - 1];
        return x < y;
    });

    // Slice l spans the B-columns from the l-th largest onward plus every
    // column beyond i; alphas telescope the leftover capacities.
    struct SliceDef {
        std::vector<int> columns;
        Rational alpha;
        Rational budget;
    };
    std::vector<SliceDef> slices;
    Rational total_budget(0);
    const int count = static_cast<int>(b_sorted.size()) + 1;
    for (int l = 1; l <= count; ++l) {
        SliceDef s;
        for (int t = l - 1; t < static_cast<int>(b_sorted.size()); ++t)
            s.columns.push_back(b_sorted[t]);
        for (int c = spec.i + 1; c <= spec.n; ++c) s.columns.push_back(c);
        std::sort(s.columns.begin(), s.columns.end());
        if (b_sorted.empty())
            s.alpha = 1;
        else if (l == 1)
            s.alpha = 1 - lambda[b_sorted[0] - 1];
        else if (l <= static_cast<int>(b_sorted.size()))
            s.alpha = lambda[b_sorted[l - 2] - 1] - lambda[b_sorted[l - 1] - 1];
        else
            s.alpha = lambda[b_sorted.back() - 1];
        s.budget = s.alpha * Rational(static_cast<long>(s.columns.size()), k);
        total_budget += s.budget;
        slices.push_back(std::move(s));
    }

    Rational leftover(0);
    for (const auto& demand : open_demands(state)) leftover += demand.second;
    if (leftover > total_budget)
        throw InfeasibleDemand("residual demand exceeds the slice capacity");

    AllocationCertificate cert;
    cert.method = AllocationCertificate::GreedyPlusSlicing;
    cert.spec = spec;
    cert.lambda = lambda;
    cert.edge_weights = state.systematic_weights;

    auto index = edge_index(h);
    auto demands = open_demands(state);
    std::size_t cursor = 0;
    if (ledger) {
        ledger->slices.clear();
        ledger->leftover_demand = leftover;
    }
    for (const auto& s : slices) {
        Rational room = s.budget;
        Rational served(0);
        const auto subsets = k_subsets(static_cast<int>(s.columns.size()), k);
        while (room > 0 && cursor < demands.size()) {
            auto& [obj, amount] = demands[cursor];
            Rational take = std::min(amount, room);
            amount -= take;
            room -= take;
            served += take;
            // Spread uniformly over every k-subset of the slice columns.
            Rational per_edge = take / Rational(static_cast<long>(subsets.size()));
            for (const auto& subset : subsets) {
                std::vector<int> columns;
                for (int idx : subset) columns.push_back(s.columns[idx]);
                auto it = index.find({obj, columns});
                if (it == index.end()) throw std::logic_error("slice edge missing from hypergraph");
                cert.edge_weights[it->second] += per_edge;
            }
            if (amount == 0) ++cursor;
        }
        if (ledger) ledger->slices.push_back({s.columns, s.alpha, served});
    }
    if (cursor < demands.size()) throw std::logic_error("slice budgets failed to cover residual");
    return finish(h, std::move(cert));
}

AllocationCertificate tile_allocate(const hg::RecoveryHypergraph& h, const GreedyState& state,
                                    const DemandVector& lambda) {
    const auto& spec = h.spec;
    if (spec.n != spec.k + spec.i - 1)
        throw PreconditionFailed("tiling needs n = k + i - 1");
    Rational total(0);
    for (const auto& v : lambda) total += v;
    if (total != spec.i) throw PreconditionFailed("tiling needs sum(lambda) = i");
    Rational slack(0);
    for (int j : state.partition.b) slack += 1 - lambda[j - 1];
    if (slack > 1) throw PreconditionFailed("tiling needs the B-slack to fit one column");

    AllocationCertificate cert;
    cert.method = AllocationCertificate::GreedyPlusTiling;
    cert.spec = spec;
    cert.lambda = lambda;
    cert.edge_weights = state.systematic_weights;

    auto index = edge_index(h);
    auto demands = open_demands(state);
    std::size_t cursor = 0;
    for (int j : state.partition.b) {
        Rational room = 1 - lambda[j - 1];
        // Tile: systematic column j plus the k-1 columns beyond i.
        std::vector<int> columns{j};
        for (int c = spec.i + 1; c <= spec.n; ++c) columns.push_back(c);
        std::sort(columns.begin(), columns.end());
        while (room > 0 && cursor < demands.size()) {
            auto& [obj, amount] = demands[cursor];
            Rational take = std::min(amount, room);
            amount -= take;
            room -= take;
            auto it = index.find({obj, columns});
            if (it == index.end()) throw std::logic_error("tile edge missing from hypergraph");
            cert.edge_weights[it->second] += take;
            if (amount == 0) ++cursor;
        }
    }
    if (cursor < demands.size())
        throw std::logic_error("tiles failed to cover residual despite checked hypotheses");
    return finish(h, std::move(cert));
}

namespace {

// Residual feasibility with the greedy prefix pinned: objects with open
// demand route over the columns that kept capacity, all other edges are
// forced to zero and dropped.
AllocateResult pinned_lp(const hg::RecoveryHypergraph& h, const GreedyState& state,
                         const DemandVector& lambda) {
    const auto& spec = h.spec;
    const int k = spec.k;
    std::vector<int> columns; // columns with remaining capacity
    for (int c = 1; c <= spec.n; ++c)
        if (state.column_capacity[c - 1] > 0) columns.push_back(c);
    auto demands = open_demands(state);

    struct Var {
        int object;
        std::vector<int> cols;
        int edge_id;
    };
    std::vector<Var> vars;
    auto index = edge_index(h);
    for (const auto& [obj, amount] : demands) {
        (void)amount;
        for (const auto& subset : k_subsets(static_cast<int>(columns.size()), k)) {
            std::vector<int> cols;
            for (int idx : subset) cols.push_back(columns[idx]);
            auto it = index.find({obj, cols});
            if (it == index.end()) continue; // contains the object's own column
            vars.push_back({obj, cols, it->second});
        }
    }

    lp::Problem p;
    p.num_vars = static_cast<int>(vars.size());
    p.objective.assign(p.num_vars, Rational(0));
    for (const auto& [obj, amount] : demands) {
        lp::Constraint row;
        row.coeffs.assign(p.num_vars, Rational(0));
        for (int v = 0; v < p.num_vars; ++v)
            if (vars[v].object == obj) row.coeffs[v] = 1;
        row.rhs = amount;
        row.rel = lp::Rel::LE;
        p.rows.push_back(row);
        row.rel = lp::Rel::GE;
        p.rows.push_back(std::move(row));
    }
    for (int c : columns) {
        lp::Constraint row;
        row.coeffs.assign(p.num_vars, Rational(0));
        for (int v = 0; v < p.num_vars; ++v)
            if (std::find(vars[v].cols.begin(), vars[v].cols.end(), c) != vars[v].cols.end())
                row.coeffs[v] = 1;
        row.rel = lp::Rel::LE;
        row.rhs = state.column_capacity[c - 1];
        p.rows.push_back(std::move(row));
    }

    auto sol = lp::solve(p);
    AllocateResult result;
    if (sol.status == lp::SolveStatus::Infeasible) {
        result.feasible = false;
        result.infeasibility = std::move(sol.farkas);
        return result;
    }
    AllocationCertificate cert;
    cert.method = AllocationCertificate::LpWitness;
    cert.spec = spec;
    cert.lambda = lambda;
    cert.edge_weights = state.systematic_weights;
    for (int v = 0; v < p.num_vars; ++v)
        if (sol.x[v] > 0) cert.edge_weights[vars[v].edge_id] += sol.x[v];
    result.feasible = true;
    result.certificate = finish(h, std::move(cert));
    return result;
}

} // namespace

AllocateResult allocate(const hg::RecoveryHypergraph& h, const DemandVector& lambda) {
    const auto& spec = h.spec;
    GreedyState state = greedy_prefix(h, lambda);

    Rational leftover(0);
    for (const auto& v : state.residual) leftover += v;
    if (leftover == 0) {
        AllocationCertificate cert;
        cert.method = AllocationCertificate::Greedy;
        cert.spec = spec;
        cert.lambda = lambda;
        cert.edge_weights = state.systematic_weights;
        AllocateResult result;
        result.feasible = true;
        result.certificate = finish(h, std::move(cert));
        return result;
    }

    if (spec.n - spec.i >= spec.k) {
        // The binding partition constraint decides membership here, so the
        // slicing either succeeds or the pinned LP certifies infeasibility.
        const auto& part = state.partition;
        Rational lhs(0);
        for (int j : part.a) lhs += Rational(spec.k) * lambda[j - 1];
        for (int j : part.c) lhs += Rational(spec.k) * lambda[j - 1];
        for (int j : part.b) lhs += lambda[j - 1];
        if (lhs <= spec.n + static_cast<long>(part.a.size()) * (spec.k - 1)) {
            AllocateResult result;
            result.feasible = true;
            result.certificate = slice_allocate(h, state, lambda);
            return result;
        }
        return pinned_lp(h, state, lambda);
    }

    if (spec.n == spec.k + spec.i - 1) {
        Rational total(0), slack(0);
        for (const auto& v : lambda) total += v;
        for (int j : state.partition.b) slack += 1 - lambda[j - 1];
        if (total == spec.i && slack <= 1) {
            AllocateResult result;
            result.feasible = true;
            result.certificate = tile_allocate(h, state, lambda);
            return result;
        }
    }

    return pinned_lp(h, state, lambda);
}

AllocateResult allocate(const codes::GeneratorSpec& spec, const DemandVector& lambda) {
    return allocate(hg::build_hypergraph(spec), lambda);
}

bool verify_certificate(const hg::RecoveryHypergraph& h, const AllocationCertificate& c) {
    if (static_cast<int>(c.lambda.size()) != h.spec.k) return false;
    if (static_cast<int>(c.per_vertex_load.size()) != h.vertex_count()) return false;

    std::vector<Rational> served(h.spec.k, Rational(0));
    std::vector<Rational> load(h.vertex_count(), Rational(0));
    for (const auto& [id, w] : c.edge_weights) {
        if (id < 1 || id > h.edge_count()) return false;
        if (w < 0) return false;
        const auto& edge = h.edges[id - 1];
        served[edge.label - 1] += w;
        for (int v : edge.vertices) load[v - 1] += w;
    }
    for (int j = 0; j < h.spec.k; ++j)
        if (served[j] != c.lambda[j]) return false;
    for (int v = 0; v < h.vertex_count(); ++v) {
        if (load[v] > 1) return false;
        if (load[v] != c.per_vertex_load[v]) return false;
    }
    return true;
}

} // namespace srrkit::alloc
