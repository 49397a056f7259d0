#include "srrkit/json_io.hpp"

#include <fstream>
#include <stdexcept>

namespace srrkit::io {

Json generator_json(const codes::GeneratorMatrix& g) {
    Json j;
    j["n"] = g.spec.n;
    j["k"] = g.spec.k;
    j["i"] = g.spec.i;
    j["q"] = g.spec.q;
    Json columns = Json::array();
    for (int c = 0; c < g.spec.n; ++c) {
        Json column = Json::array();
        for (int r = 0; r < g.spec.k; ++r) column.push_back(g.matrix.at(r, c));
        columns.push_back(std::move(column));
    }
    j["columns"] = std::move(columns);
    return j;
}

Json hypergraph_json(const hg::RecoveryHypergraph& h, bool emit_incidence) {
    Json j;
    j["n"] = h.spec.n;
    j["k"] = h.spec.k;
    j["i"] = h.spec.i;
    j["q"] = h.spec.q;
    Json vertices = Json::array();
    for (const auto& v : h.vertices) {
        Json vj;
        vj["id"] = v.id;
        if (v.kind == hg::Vertex::Column) {
            vj["kind"] = "column";
            vj["column"] = v.index;
        } else {
            vj["kind"] = "auxiliary";
            vj["object"] = v.index;
        }
        vertices.push_back(std::move(vj));
    }
    j["vertices"] = std::move(vertices);
    Json edges = Json::array();
    for (const auto& e : h.edges) {
        Json ej;
        ej["id"] = e.id;
        ej["label"] = e.label;
        ej["kind"] = e.kind == hg::Hyperedge::Systematic ? "systematic" : "non_systematic";
        ej["vertices"] = e.vertices;
        edges.push_back(std::move(ej));
    }
    j["edges"] = std::move(edges);
    if (emit_incidence) {
        Json a = Json::array();
        for (int r = 0; r < h.incidence.rows; ++r) {
            Json row = Json::array();
            for (int c = 0; c < h.incidence.cols; ++c) row.push_back(h.incidence.at(r, c));
            a.push_back(std::move(row));
        }
        j["A"] = std::move(a);
        Json s = Json::array();
        for (int r = 0; r < h.label_matrix.rows; ++r) {
            Json row = Json::array();
            for (int c = 0; c < h.label_matrix.cols; ++c) row.push_back(h.label_matrix.at(r, c));
            s.push_back(std::move(row));
        }
        j["S"] = std::move(s);
    }
    return j;
}

Json polytope_json(const region::HPolytope& p) {
    Json j;
    j["k"] = p.k;
    j["provenance"] = region::provenance_name(p.provenance);
    Json constraints = Json::array();
    for (const auto& c : p.constraints) {
        Json cj;
        cj["coeffs"] = rat_strs(c.coeffs);
        cj["bound"] = rat_str(c.bound);
        constraints.push_back(std::move(cj));
    }
    j["constraints"] = std::move(constraints);
    return j;
}

Json unsupported_polytope_json(int k) {
    Json j;
    j["k"] = k;
    j["provenance"] = "Unsupported";
    return j;
}

Json certificate_json(const hg::RecoveryHypergraph& h, const alloc::AllocationCertificate& c) {
    Json j;
    j["lambda"] = rat_strs(c.lambda);
    switch (c.method) {
        case alloc::AllocationCertificate::Greedy: j["method"] = "Greedy"; break;
        case alloc::AllocationCertificate::GreedyPlusSlicing: j["method"] = "GreedyPlusSlicing"; break;
        case alloc::AllocationCertificate::GreedyPlusTiling: j["method"] = "GreedyPlusTiling"; break;
        case alloc::AllocationCertificate::LpWitness: j["method"] = "LpWitness"; break;
    }
    Json edges = Json::array();
    for (const auto& [id, w] : c.edge_weights) {
        const auto& e = h.edges[id - 1];
        Json ej;
        ej["id"] = id;
        ej["label"] = e.label;
        ej["vertices"] = e.vertices;
        ej["weight"] = rat_str(w);
        edges.push_back(std::move(ej));
    }
    j["edges"] = std::move(edges);
    j["vertex_loads"] = rat_strs(c.per_vertex_load);
    return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

void write_file(const std::string& path, const Json& j) { write_text(path, dump(j)); }

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
}

} // namespace srrkit::io
