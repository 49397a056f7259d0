#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "srrkit/alloc.hpp"
#include "srrkit/json_io.hpp"
#include "srrkit/lp.hpp"
#include "srrkit/region.hpp"
#include "srrkit/render.hpp"
#include "srrkit/verify.hpp"

namespace py = pybind11;
using namespace srrkit;

namespace {

codes::GeneratorSpec make_spec(int n, int k, int i, std::uint64_t q) {
    std::optional<gf::Elem> q_opt;
    if (q) q_opt = static_cast<gf::Elem>(q);
    return codes::GeneratorSpec(n, k, i, q_opt);
}

std::vector<Rational> to_rates(const std::vector<std::string>& raw) {
    std::vector<Rational> rates;
    rates.reserve(raw.size());
    for (const auto& s : raw) rates.push_back(parse_rational(s));
    return rates;
}

// All structured results cross the boundary as JSON text; the python
// package turns them into dicts and Fractions.
std::string construct_json(int n, int k, int i, std::uint64_t q) {
    return io::dump(io::generator_json(codes::build_generator(make_spec(n, k, i, q))));
}

std::string hypergraph_json(int n, int k, int i, std::uint64_t q, bool emit_incidence) {
    return io::dump(
        io::hypergraph_json(hg::build_hypergraph(make_spec(n, k, i, q)), emit_incidence));
}

std::string matching_number(int n, int k, int i, std::uint64_t q) {
    auto h = hg::build_hypergraph(make_spec(n, k, i, q));
    return rat_str(lp::matching_number(h.incidence).value);
}

std::string vertex_cover_number(int n, int k, int i, std::uint64_t q) {
    auto h = hg::build_hypergraph(make_spec(n, k, i, q));
    return rat_str(lp::vertex_cover_number(h.incidence).value);
}

py::dict membership(int n, int k, int i, std::uint64_t q, const std::vector<std::string>& rates) {
    auto h = hg::build_hypergraph(make_spec(n, k, i, q));
    auto result = region::membership(h, to_rates(rates));
    py::dict out;
    out["member"] = result.member;
    out["pivots"] = result.outcome.pivot_count;
    if (result.member)
        out["witness"] = rat_strs(result.outcome.witness);
    else
        out["certificate"] = rat_strs(result.outcome.certificate);
    return out;
}

std::string max_demand(int n, int k, int i, std::uint64_t q, int j) {
    return rat_str(region::max_demand(make_spec(n, k, i, q), j));
}

std::optional<std::string> closed_form(int n, int k, int i, std::uint64_t q) {
    auto p = region::closed_form_polytope(make_spec(n, k, i, q));
    if (!p) return std::nullopt;
    return io::dump(io::polytope_json(*p));
}

std::string matching_simplex(int n, int k, int i, std::uint64_t q) {
    return io::dump(io::polytope_json(region::matching_simplex(make_spec(n, k, i, q))));
}

std::string achievable_simplex(int n, int k, int i, std::uint64_t q) {
    return io::dump(io::polytope_json(region::achievable_simplex(make_spec(n, k, i, q))));
}

std::optional<std::vector<std::vector<std::string>>> region_vertices(int n, int k, int i,
                                                                     std::uint64_t q) {
    auto p = region::closed_form_polytope(make_spec(n, k, i, q));
    if (!p) return std::nullopt;
    std::vector<std::vector<std::string>> out;
    for (const auto& v : region::enumerate_vertices(*p)) out.push_back(rat_strs(v));
    return out;
}

py::dict allocate(int n, int k, int i, std::uint64_t q, const std::vector<std::string>& rates) {
    auto h = hg::build_hypergraph(make_spec(n, k, i, q));
    auto result = alloc::allocate(h, to_rates(rates));
    py::dict out;
    out["feasible"] = result.feasible;
    if (result.feasible)
        out["certificate"] = io::dump(io::certificate_json(h, *result.certificate));
    else
        out["infeasibility"] = rat_strs(result.infeasibility);
    return out;
}

std::string sum_rate_bound(int n, int k, int i, std::uint64_t q, const std::vector<int>& objects) {
    return rat_str(region::sum_rate_bound(make_spec(n, k, i, q), objects));
}

std::string region_svg(int n, int k, int i, std::uint64_t q) {
    return render::region_svg(make_spec(n, k, i, q));
}

std::string verify_sweep(int k_min, int k_max, int n_max, const std::string& grid_step,
                         int random_points, std::uint64_t seed, long stride) {
    verify::SweepConfig cfg;
    cfg.k_min = k_min;
    cfg.k_max = k_max;
    cfg.n_max = n_max;
    cfg.grid_step = parse_rational(grid_step);
    cfg.random_points = random_points;
    cfg.seed = seed;
    cfg.spot_stride = stride;
    return io::dump(verify::report_json(verify::run_sweep(cfg)));
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact service rate regions of MDS-coded storage systems";

    m.def("construct", &construct_json, py::arg("n"), py::arg("k"), py::arg("i"),
          py::arg("q") = 0, "generator matrix as a JSON string");
    m.def("hypergraph", &hypergraph_json, py::arg("n"), py::arg("k"), py::arg("i"),
          py::arg("q") = 0, py::arg("emit_incidence") = false,
          "recovery hypergraph as a JSON string");
    m.def("matching_number", &matching_number, py::arg("n"), py::arg("k"), py::arg("i"),
          py::arg("q") = 0, "nu* as an exact `p/q` string");
    m.def("vertex_cover_number", &vertex_cover_number, py::arg("n"), py::arg("k"), py::arg("i"),
          py::arg("q") = 0, "tau* as an exact `p/q` string");
    m.def("membership", &membership, py::arg("n"), py::arg("k"), py::arg("i"), py::arg("q"),
          py::arg("rates"), "LP membership with witness or infeasibility certificate");
    m.def("max_demand", &max_demand, py::arg("n"), py::arg("k"), py::arg("i"), py::arg("q"),
          py::arg("j"), "axis intercept for object j");
    m.def("closed_form", &closed_form, py::arg("n"), py::arg("k"), py::arg("i"), py::arg("q") = 0,
          "closed-form region polytope, or None in the open regime");
    m.def("matching_simplex", &matching_simplex, py::arg("n"), py::arg("k"), py::arg("i"),
          py::arg("q") = 0);
    m.def("achievable_simplex", &achievable_simplex, py::arg("n"), py::arg("k"), py::arg("i"),
          py::arg("q") = 0);
    m.def("region_vertices", &region_vertices, py::arg("n"), py::arg("k"), py::arg("i"),
          py::arg("q") = 0, "exact vertices for k <= 3, or None without a closed form");
    m.def("allocate", &allocate, py::arg("n"), py::arg("k"), py::arg("i"), py::arg("q"),
          py::arg("rates"), "allocation certificate or infeasibility result");
    m.def("sum_rate_bound", &sum_rate_bound, py::arg("n"), py::arg("k"), py::arg("i"),
          py::arg("q"), py::arg("objects"), "tau* of the induced subgraph");
    m.def("region_svg", &region_svg, py::arg("n"), py::arg("k"), py::arg("i"), py::arg("q") = 0,
          "region figure as SVG text");
    m.def("verify_sweep", &verify_sweep, py::arg("k_min") = 2, py::arg("k_max") = 3,
          py::arg("n_max") = 6, py::arg("grid_step") = "1/4", py::arg("random_points") = 20,
          py::arg("seed") = 0x5EED, py::arg("stride") = 101,
          "property sweep report as a JSON string");

#ifdef VERSION_INFO
#define SRRKIT_STR2(x) #x
#define SRRKIT_STR(x) SRRKIT_STR2(x)
    m.attr("__version__") = SRRKIT_STR(VERSION_INFO);
#else
    m.attr("__version__") = "dev";
#endif
}
