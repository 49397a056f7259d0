#pragma once

#include <cstdint>
#include <vector>

#include "srrkit/codes.hpp"
#include "srrkit/rational.hpp"

namespace srrkit::hg {

// Dense 0/1 matrix; small enough at desk scale that byte-per-entry is fine.
struct BinMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<std::uint8_t> entries;

    BinMatrix() = default;
    BinMatrix(int r, int c) : rows(r), cols(c), entries(static_cast<std::size_t>(r) * c, 0) {}

    std::uint8_t& at(int r, int c) { return entries[static_cast<std::size_t>(r) * cols + c]; }
    std::uint8_t at(int r, int c) const { return entries[static_cast<std::size_t>(r) * cols + c]; }

    bool operator==(const BinMatrix& o) const {
        return rows == o.rows && cols == o.cols && entries == o.entries;
    }
};

// Reorders rows/cols: result(r, c) = m(row_perm[r], col_perm[c]). Both
// permutations are 0-based positions into m.
BinMatrix permuted(const BinMatrix& m, const std::vector<int>& row_perm,
                   const std::vector<int>& col_perm);

struct Vertex {
    enum Kind { Column, Auxiliary } kind;
    int id;    // 1-based, stable across runs
    int index; // column index for Column, object index j for Auxiliary; 1-based
};

struct Hyperedge {
    enum Kind { Systematic, NonSystematic } kind;
    int id;                    // 1-based, stable across runs
    int label;                 // object index j in [k]
    std::vector<int> vertices; // sorted vertex ids
};

// The recovery hypergraph of one generator matrix: n column vertices, one
// auxiliary vertex per systematic column, one labeled hyperedge per
// recovery set. Vertex order: columns 1..n then auxiliaries 1..i. Edge
// order: labels ascending, systematic edge first, then non-systematic edges
// in lexicographic column order.
struct RecoveryHypergraph {
    codes::GeneratorSpec spec;
    std::vector<Vertex> vertices;
    std::vector<Hyperedge> edges;
    BinMatrix incidence;    // |V| x |E|, column per edge
    BinMatrix label_matrix; // |E| x k, one 1 per row

    int vertex_count() const { return static_cast<int>(vertices.size()); }
    int edge_count() const { return static_cast<int>(edges.size()); }
};

RecoveryHypergraph build_hypergraph(const codes::GeneratorMatrix& g);
RecoveryHypergraph build_hypergraph(const codes::GeneratorSpec& spec);

// Rebuilds A and S from the edge list alone (round-trip check support).
BinMatrix incidence_from_edges(int vertex_count, const std::vector<Hyperedge>& edges);
BinMatrix labels_from_edges(int k, const std::vector<Hyperedge>& edges);

struct InducedSubgraph {
    RecoveryHypergraph graph;
    std::vector<int> vertex_map; // new vertex id (1-based position) -> original id
    std::vector<int> edge_map;   // new edge id -> original id
};

// Keeps exactly the edges labeled by objects in I together with their
// incident vertices; ids are re-assigned in ascending original order.
InducedSubgraph induced_subgraph(const RecoveryHypergraph& h, const std::vector<int>& objects);

// lambda(w) = w S; does not check feasibility.
std::vector<Rational> servable_vector(const RecoveryHypergraph& h,
                                      const std::vector<Rational>& weights);

} // namespace srrkit::hg
