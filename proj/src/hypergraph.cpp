#include "srrkit/hypergraph.hpp"

#include <algorithm>
#include <stdexcept>

#include "srrkit/combinatorics.hpp"

namespace srrkit::hg {

BinMatrix permuted(const BinMatrix& m, const std::vector<int>& row_perm,
                   const std::vector<int>& col_perm) {
    if (static_cast<int>(row_perm.size()) != m.rows ||
        static_cast<int>(col_perm.size()) != m.cols)
        throw std::invalid_argument("permutation size mismatch");
    BinMatrix out(m.rows, m.cols);
    for (int r = 0; r < m.rows; ++r)
        for (int c = 0; c < m.cols; ++c) out.at(r, c) = m.at(row_perm[r], col_perm[c]);
    return out;
}

BinMatrix incidence_from_edges(int vertex_count, const std::vector<Hyperedge>& edges) {
    BinMatrix a(vertex_count, static_cast<int>(edges.size()));
    for (int e = 0; e < static_cast<int>(edges.size()); ++e)
        for (int v : edges[e].vertices) a.at(v - 1, e) = 1;
    return a;
}

BinMatrix labels_from_edges(int k, const std::vector<Hyperedge>& edges) {
    BinMatrix s(static_cast<int>(edges.size()), k);
    for (int e = 0; e < static_cast<int>(edges.size()); ++e) s.at(e, edges[e].label - 1) = 1;
    return s;
}

RecoveryHypergraph build_hypergraph(const codes::GeneratorMatrix& g) {
    const codes::GeneratorSpec& spec = g.spec;
    if (spec.n > 40)
        throw std::invalid_argument("hypergraph enumeration beyond desk scale");
    std::uint64_t edge_count =
        static_cast<std::uint64_t>(spec.i) * (1 + binomial(spec.n - 1, spec.k)) +
        static_cast<std::uint64_t>(spec.k - spec.i) * binomial(spec.n, spec.k);
    if (edge_count > 2000000)
        throw std::invalid_argument("hypergraph enumeration beyond desk scale");
    RecoveryHypergraph h;
    h.spec = spec;

    for (int c = 1; c <= spec.n; ++c) h.vertices.push_back(Vertex{Vertex::Column, c, c});
    for (int j = 1; j <= spec.i; ++j)
        h.vertices.push_back(Vertex{Vertex::Auxiliary, spec.n + j, j});

    int next_id = 1;
    for (int j = 1; j <= spec.k; ++j) {
        for (const auto& rset : codes::enumerate_recovery_sets(g, j)) {
            Hyperedge e;
            e.id = next_id++;
            e.label = j;
            if (rset.kind == codes::RecoverySet::Systematic) {
                e.kind = Hyperedge::Systematic;
                e.vertices = {j, spec.n + j};
            } else {
                e.kind = Hyperedge::NonSystematic;
                e.vertices = rset.columns;
            }
            h.edges.push_back(std::move(e));
        }
    }

    h.incidence = incidence_from_edges(h.vertex_count(), h.edges);
    h.label_matrix = labels_from_edges(spec.k, h.edges);
    return h;
}

RecoveryHypergraph build_hypergraph(const codes::GeneratorSpec& spec) {
    return build_hypergraph(codes::build_generator(spec));
}

InducedSubgraph induced_subgraph(const RecoveryHypergraph& h, const std::vector<int>& objects) {
    std::vector<bool> keep_label(h.spec.k + 1, false);
    for (int j : objects) {
        if (j < 1 || j > h.spec.k) throw std::invalid_argument("object index out of range");
        keep_label[j] = true;
    }

    std::vector<bool> vertex_used(h.vertices.size() + 1, false);
    std::vector<const Hyperedge*> kept;
    for (const auto& e : h.edges) {
        if (!keep_label[e.label]) continue;
        kept.push_back(&e);
        for (int v : e.vertices) vertex_used[v] = true;
    }

    InducedSubgraph out;
    out.graph.spec = h.spec;
    std::vector<int> new_id(h.vertices.size() + 1, 0);
    for (const auto& v : h.vertices) {
        if (!vertex_used[v.id]) continue;
        Vertex nv = v;
        nv.id = static_cast<int>(out.vertex_map.size()) + 1;
        new_id[v.id] = nv.id;
        out.vertex_map.push_back(v.id);
        out.graph.vertices.push_back(nv);
    }
    for (const Hyperedge* e : kept) {
        Hyperedge ne = *e;
        ne.id = static_cast<int>(out.edge_map.size()) + 1;
        for (int& v : ne.vertices) v = new_id[v];
        std::sort(ne.vertices.begin(), ne.vertices.end());
        out.edge_map.push_back(e->id);
        out.graph.edges.push_back(std::move(ne));
    }
    out.graph.incidence = incidence_from_edges(out.graph.vertex_count(), out.graph.edges);
    out.graph.label_matrix = labels_from_edges(h.spec.k, out.graph.edges);
    return out;
}

std::vector<Rational> servable_vector(const RecoveryHypergraph& h,
                                      const std::vector<Rational>& weights) {
    if (weights.size() != h.edges.size())
        throw std::invalid_argument("weight vector length does not match edge count");
    std::vector<Rational> lambda(h.spec.k, Rational(0));
    for (std::size_t e = 0; e < weights.size(); ++e)
        lambda[h.edges[e].label - 1] += weights[e];
    return lambda;
}

} // namespace srrkit::hg
