#include <CLI11.hpp>

#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "srrkit/alloc.hpp"
#include "srrkit/json_io.hpp"
#include "srrkit/lp.hpp"
#include "srrkit/region.hpp"
#include "srrkit/render.hpp"
#include "srrkit/verify.hpp"

namespace fs = std::filesystem;
using namespace srrkit;

namespace {

struct CommonArgs {
    int n = 0, k = 0, i = 0;
    std::uint64_t q_override = 0;
    std::string out_dir = ".";
};

void add_spec_options(CLI::App* cmd, CommonArgs& args) {
    cmd->add_option("-n", args.n, "server count")->required();
    cmd->add_option("-k", args.k, "object count")->required();
    cmd->add_option("-i", args.i, "systematic column count")->required();
    cmd->add_option("--q", args.q_override, "field modulus override (prime, >= n+k+1)");
    cmd->add_option("--out", args.out_dir, "output directory")->capture_default_str();
}

codes::GeneratorSpec make_spec(const CommonArgs& args) {
    std::optional<gf::Elem> q;
    if (args.q_override) q = static_cast<gf::Elem>(args.q_override);
    return codes::GeneratorSpec(args.n, args.k, args.i, q);
}

std::string out_path(const CommonArgs& args, const std::string& name) {
    fs::create_directories(args.out_dir);
    return (fs::path(args.out_dir) / name).string();
}

std::vector<Rational> parse_rates(const std::vector<std::string>& raw, int k) {
    if (static_cast<int>(raw.size()) != k)
        throw std::invalid_argument("expected " + std::to_string(k) + " rates, got " +
                                    std::to_string(raw.size()));
    std::vector<Rational> rates;
    for (const auto& s : raw) {
        Rational r = parse_rational(s);
        if (r < 0) throw std::invalid_argument("rates must be nonnegative");
        rates.push_back(r);
    }
    return rates;
}

int cmd_construct(const CommonArgs& args, bool emit_incidence) {
    auto spec = make_spec(args);
    auto generator = codes::build_generator(spec);
    auto graph = hg::build_hypergraph(generator);
    io::write_file(out_path(args, "generator.json"), io::generator_json(generator));
    io::write_file(out_path(args, "hypergraph.json"), io::hypergraph_json(graph, emit_incidence));
    auto nu = lp::matching_number(graph.incidence);
    auto tau = lp::vertex_cover_number(graph.incidence);
    std::cout << "vertices=" << graph.vertex_count() << " edges=" << graph.edge_count()
              << " nu=" << rat_pretty(nu.value) << " tau=" << rat_pretty(tau.value) << "\n";
    return nu.value == tau.value ? 0 : 1;
}

int cmd_check(const CommonArgs& args, const std::vector<std::string>& raw_rates, bool dump_lp,
              bool emit_certificate) {
    auto spec = make_spec(args);
    auto rates = parse_rates(raw_rates, spec.k);
    auto graph = hg::build_hypergraph(spec);

    if (dump_lp) std::cout << lp::dump_feasibility_lp(graph.incidence, graph.label_matrix, rates);

    auto result = alloc::allocate(graph, rates);
    auto closed = region::closed_form_polytope(spec);
    if (result.feasible) {
        std::cout << "IN\n";
        const auto& cert = *result.certificate;
        const char* method = cert.method == alloc::AllocationCertificate::Greedy ? "Greedy"
            : cert.method == alloc::AllocationCertificate::GreedyPlusSlicing ? "GreedyPlusSlicing"
            : cert.method == alloc::AllocationCertificate::GreedyPlusTiling  ? "GreedyPlusTiling"
                                                                             : "LpWitness";
        std::cout << "method=" << method << " edges_used=" << cert.edge_weights.size() << "\n";
        if (emit_certificate) {
            io::write_file(out_path(args, "certificate.json"), io::certificate_json(graph, cert));
            std::cout << "certificate=" << out_path(args, "certificate.json") << "\n";
        }
        return 0;
    }
    std::cout << "OUT\n";
    if (closed) {
        for (const auto& c : closed->constraints) {
            Rational lhs(0);
            for (int j = 0; j < spec.k; ++j) lhs += c.coeffs[j] * rates[j];
            if (lhs > c.bound) {
                std::cout << "violated:";
                for (int j = 0; j < spec.k; ++j) {
                    if (c.coeffs[j] == 0) continue;
                    std::cout << " + " << rat_pretty(c.coeffs[j]) << "*rate" << (j + 1);
                }
                std::cout << " <= " << rat_pretty(c.bound) << " (lhs " << rat_pretty(lhs) << ")\n";
            }
        }
    } else {
        // No closed form in this regime; offer the sum-rate bound when it
        // explains the rejection, otherwise point at the LP certificate.
        Rational total(0);
        for (const auto& r : rates) total += r;
        Rational nu = region::matching_number_closed_form(spec);
        if (total > nu)
            std::cout << "violated: sum of rates " << rat_pretty(total) << " exceeds tau* = "
                      << rat_pretty(nu) << "\n";
        else
            std::cout << "violated: LP infeasibility certificate (" << result.infeasibility.size()
                      << " multipliers)\n";
    }
    return 1;
}

int cmd_region(const CommonArgs& args, const std::string& format, const std::string& step_str) {
    auto spec = make_spec(args);
    Rational step = parse_rational(step_str);
    auto closed = region::closed_form_polytope(spec);

    io::Json bundle;
    bundle["spec"] = {{"n", spec.n}, {"k", spec.k}, {"i", spec.i}, {"q", spec.q}};
    bundle["closed_form"] =
        closed ? io::polytope_json(*closed) : io::unsupported_polytope_json(spec.k);
    bundle["matching_simplex"] = io::polytope_json(region::matching_simplex(spec));
    bundle["achievable_simplex"] = io::polytope_json(region::achievable_simplex(spec));
    io::Json intercepts = io::Json::array();
    for (int j = 1; j <= spec.k; ++j) intercepts.push_back(rat_str(region::max_demand(spec, j)));
    bundle["intercepts"] = std::move(intercepts);
    io::write_file(out_path(args, "polytope.json"), bundle);
    std::cout << "polytope=" << out_path(args, "polytope.json") << "\n";

    if (closed && spec.k <= 3) {
        auto vertices = region::enumerate_vertices(*closed);
        io::Json vj = io::Json::array();
        for (const auto& v : vertices) vj.push_back(rat_strs(v));
        io::write_file(out_path(args, "vertices.json"), vj);
        if (format == "csv")
            io::write_text(out_path(args, "vertices.csv"), render::vertices_csv(vertices));
        io::write_text(out_path(args, "region.svg"), render::region_svg(spec));
        std::cout << "vertices=" << vertices.size() << "\n";
    }
    if (!closed) {
        io::write_text(out_path(args, "points.csv"), render::point_cloud_csv(spec, step));
        std::cout << "closed_form=unsupported points=" << out_path(args, "points.csv") << "\n";
    }
    return 0;
}

int cmd_verify(const verify::SweepConfig& cfg, const CommonArgs& args, bool single_pair) {
    if (single_pair) {
        auto check = verify::inclusion_grid(args.n, args.k, cfg.grid_step);
        io::Json j;
        j["n"] = args.n;
        j["k"] = args.k;
        j["columns"] = check.columns;
        io::Json witnesses = io::Json::array();
        for (int i = 0; i < args.k; ++i) {
            auto w = region::inclusion_witness(args.n, args.k, i);
            io::Json wj;
            wj["i"] = i;
            wj["degenerate"] = w.degenerate;
            if (w.point) wj["point"] = rat_strs(*w.point);
            witnesses.push_back(std::move(wj));
            std::cout << "i=" << i << (w.point ? " witness=" + [&] {
                std::string s;
                for (const auto& r : *w.point) s += (s.empty() ? "" : ",") + rat_pretty(r);
                return s;
            }() : std::string(" witness=none"))
                      << "\n";
        }
        j["witnesses"] = std::move(witnesses);
        io::Json violations = io::Json::array();
        for (const auto& v : check.violations)
            violations.push_back({{"check", v.check}, {"detail", v.detail}});
        j["violations"] = std::move(violations);
        io::write_file(out_path(args, "verify_summary.json"), j);
        std::cout << "columns=" << check.columns << " violations=" << check.violations.size()
                  << "\n";
        return check.violations.empty() ? 0 : 1;
    }

    auto report = verify::run_sweep(cfg);
    io::write_file(out_path(args, "verify_summary.json"), verify::report_json(report));
    std::cout << "duality_instances=" << report.duality_instances << "\n"
              << "oracle_grid_points=" << report.oracle_grid_points << "\n"
              << "oracle_random_points=" << report.oracle_random_points << "\n"
              << "full_lp_spot_checks=" << report.oracle_spot_checks << "\n"
              << "inclusion_witnesses=" << report.inclusion_witnesses << "\n"
              << "greedy_accepted_points=" << report.greedy_accepted_points << "\n"
              << "uniqueness_probes=" << report.uniqueness_probes << "\n"
              << "violations=" << report.violations.size() << "\n";
    for (const auto& v : report.violations)
        std::cout << "violation: " << v.check << " " << v.detail << "\n";
    return report.ok() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"service rate regions of MDS-coded storage, exactly"};
    app.require_subcommand(1);

    CommonArgs construct_args;
    bool emit_incidence = false;
    auto* construct = app.add_subcommand("construct", "build the generator and its hypergraph");
    add_spec_options(construct, construct_args);
    construct->add_flag("--emit-incidence", emit_incidence, "include dense A and S in the dump");

    CommonArgs check_args;
    std::vector<std::string> check_rates;
    bool dump_lp = false;
    auto* check = app.add_subcommand("check", "decide whether a demand vector is servable");
    add_spec_options(check, check_args);
    check->add_flag("--dump-lp", dump_lp, "print the exact feasibility LP");
    check->add_option("rates", check_rates, "demand per object, `p/q` or integers");

    CommonArgs region_args;
    std::string format = "json";
    std::string grid_step = "1/4";
    auto* region_cmd = app.add_subcommand("region", "emit the region polytope and figures");
    add_spec_options(region_cmd, region_args);
    region_cmd->add_option("--format", format, "json, csv or svg")
        ->check(CLI::IsMember({"json", "csv", "svg"}))
        ->capture_default_str();
    region_cmd->add_option("--grid-step", grid_step, "sample step for point clouds")
        ->capture_default_str();

    CommonArgs alloc_args;
    std::vector<std::string> alloc_rates;
    auto* allocate = app.add_subcommand("allocate", "produce an allocation certificate");
    add_spec_options(allocate, alloc_args);
    allocate->add_option("rates", alloc_rates, "demand per object, `p/q` or integers");

    CommonArgs verify_args;
    verify::SweepConfig cfg;
    std::string verify_step = "1/4";
    bool w_duality = false, w_oracle = false, w_inclusion = false, w_greedy = false,
         w_uniqueness = false;
    auto* verify_cmd = app.add_subcommand("verify", "run the property sweeps");
    verify_cmd->add_option("-n", verify_args.n, "single (n,k) inclusion mode: server count");
    verify_cmd->add_option("-k", verify_args.k, "single (n,k) inclusion mode: object count");
    verify_cmd->add_option("--k-min", cfg.k_min)->capture_default_str();
    verify_cmd->add_option("--k-max", cfg.k_max)->capture_default_str();
    verify_cmd->add_option("--n-max", cfg.n_max)->capture_default_str();
    verify_cmd->add_option("--grid-step", verify_step)->capture_default_str();
    verify_cmd->add_option("--random-points", cfg.random_points)->capture_default_str();
    verify_cmd->add_option("--seed", cfg.seed)->capture_default_str();
    verify_cmd->add_option("--stride", cfg.spot_stride, "full-LP spot check stride")
        ->capture_default_str();
    verify_cmd->add_option("--out", verify_args.out_dir)->capture_default_str();
    verify_cmd->add_flag("--duality", w_duality);
    verify_cmd->add_flag("--oracle", w_oracle);
    verify_cmd->add_flag("--inclusion", w_inclusion);
    verify_cmd->add_flag("--greedy", w_greedy);
    verify_cmd->add_flag("--uniqueness", w_uniqueness);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : 2;
    }

    try {
        if (*construct) return cmd_construct(construct_args, emit_incidence);
        if (*check) return cmd_check(check_args, check_rates, dump_lp, true);
        if (*region_cmd) return cmd_region(region_args, format, grid_step);
        if (*allocate) return cmd_check(alloc_args, alloc_rates, false, true);
        if (*verify_cmd) {
            cfg.grid_step = parse_rational(verify_step);
            if (cfg.grid_step <= 0) throw std::invalid_argument("grid step must be positive");
            if (w_duality || w_oracle || w_inclusion || w_greedy || w_uniqueness) {
                cfg.duality = w_duality;
                cfg.oracle = w_oracle;
                cfg.inclusion = w_inclusion;
                cfg.greedy = w_greedy;
                cfg.uniqueness = w_uniqueness;
            }
            bool single_pair = verify_args.n > 0 && verify_args.k > 0;
            if (cfg.n_max > 10 || cfg.k_max > 4)
                throw std::invalid_argument("sweep bounded to n <= 10, k <= 4");
            return cmd_verify(cfg, verify_args, single_pair);
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
