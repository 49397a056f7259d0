#include "srrkit/verify.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <random>
#include <sstream>

#include "srrkit/alloc.hpp"
#include "srrkit/hypergraph.hpp"
#include "srrkit/lp.hpp"
#include "srrkit/orbit_lp.hpp"
#include "srrkit/region.hpp"

namespace srrkit::verify {

namespace {

std::string spec_str(const codes::GeneratorSpec& s) {
    std::ostringstream out;
    out << "(" << s.n << "," << s.k << "," << s.i << ")";
    return out.str();
}

std::string point_str(const std::vector<Rational>& v) {
    std::ostringstream out;
    out << "(";
    for (std::size_t j = 0; j < v.size(); ++j) out << (j ? "," : "") << rat_pretty(v[j]);
    out << ")";
    return out.str();
}

std::string opt_str(const std::optional<Rational>& v) {
    return v ? rat_pretty(*v) : std::string("none");
}

// 0, step, 2*step, ... up to and including bound (when it is a multiple).
std::vector<Rational> grid_values(const Rational& bound, const Rational& step) {
    std::vector<Rational> out;
    for (Rational v(0); v <= bound; v += step) out.push_back(v);
    return out;
}

// Odometer over (k-1)-dimensional grid bases.
bool next_base(std::vector<std::size_t>& idx, std::size_t limit) {
    for (std::size_t pos = idx.size(); pos-- > 0;) {
        if (++idx[pos] < limit) return true;
        idx[pos] = 0;
    }
    return false;
}

struct SpecContext {
    codes::GeneratorSpec spec;
    hg::RecoveryHypergraph graph;
    std::optional<region::HPolytope> closed_form;
    region::HPolytope outer;
    region::HPolytope inner;
    Rational nu_formula;
    Rational own_box;
    std::vector<Rational> own_values; // axis grid inside this spec's box
};

void add(Report& r, const std::string& check, const std::string& detail) {
    r.violations.push_back({check, detail});
}

void run_duality(Report& r, const SpecContext& ctx) {
    auto nu = lp::matching_number(ctx.graph.incidence);
    auto tau = lp::vertex_cover_number(ctx.graph.incidence);
    ++r.duality_instances;
    if (nu.value != tau.value)
        add(r, "duality", spec_str(ctx.spec) + " nu=" + rat_str(nu.value) +
                              " tau=" + rat_str(tau.value));
    if (nu.value != ctx.nu_formula)
        add(r, "duality-closed-form",
            spec_str(ctx.spec) + " nu=" + rat_str(nu.value) +
                " formula=" + rat_str(ctx.nu_formula));
}

void run_random_points(Report& r, const SpecContext& ctx, const SweepConfig& cfg) {
    if (!ctx.closed_form) return;
    std::mt19937_64 eng(cfg.seed);
    const Rational box = ctx.nu_formula + 1;
    for (int t = 0; t < cfg.random_points; ++t) {
        std::vector<Rational> lambda;
        for (int j = 0; j < ctx.spec.k; ++j) {
            long den = 1 + static_cast<long>(eng() % 24);
            Rational cap = box * den;
            long num_max = static_cast<long>(numerator(cap) / denominator(cap));
            long num = static_cast<long>(eng() % static_cast<std::uint64_t>(num_max + 1));
            lambda.emplace_back(num, den);
        }
        bool lp_in = region::membership(ctx.graph, lambda).member;
        bool cf_in = ctx.closed_form->contains(lambda);
        ++r.oracle_random_points;
        if (lp_in != cf_in)
            add(r, "oracle-random",
                spec_str(ctx.spec) + " " + point_str(lambda) + " lp=" + (lp_in ? "in" : "out") +
                    " closed_form=" + (cf_in ? "in" : "out"));
    }
}

void run_uniqueness(Report& r, const codes::GeneratorSpec& spec, const Rational& step) {
    auto violations = uniqueness_probe(spec, step, &r.uniqueness_points);
    ++r.uniqueness_probes;
    for (auto& v : violations) r.violations.push_back(std::move(v));
}

} // namespace

std::vector<Violation> uniqueness_probe(const codes::GeneratorSpec& spec, const Rational& step,
                                        long* points_checked) {
    std::vector<Violation> out;
    auto graph = hg::build_hypergraph(spec);
    std::vector<Rational> star(spec.k, Rational(0));
    for (int j = 0; j < spec.i; ++j) star[j] = 1;

    if (!region::membership(graph, star).member) {
        out.push_back({"uniqueness", spec_str(spec) + " all-ones prefix not servable"});
        return out;
    }

    // Every other grid point on the sum = i plane must be outside.
    Rational target = Rational(spec.i) / step;
    if (denominator(target) == 1) {
        long total = static_cast<long>(numerator(target));
        Rational box = region::matching_number_closed_form(spec) + 1;
        Rational cap_r = box / step;
        long cap = static_cast<long>(numerator(cap_r) / denominator(cap_r));
        std::vector<long> t(spec.k, 0);
        // Enumerate compositions of `total` into k parts bounded by cap.
        std::function<void(int, long)> rec = [&](int pos, long rest) {
            if (pos == spec.k - 1) {
                if (rest > cap) return;
                t[pos] = rest;
                std::vector<Rational> lambda;
                for (long v : t) lambda.push_back(step * v);
                if (lambda == star) return;
                if (points_checked) ++*points_checked;
                if (region::membership(graph, lambda).member)
                    out.push_back({"uniqueness",
                                   spec_str(spec) + " extra point on sum=i plane: " +
                                       point_str(lambda)});
                return;
            }
            for (long v = 0; v <= std::min(rest, cap); ++v) {
                t[pos] = v;
                rec(pos + 1, rest - v);
            }
        };
        rec(0, total);
    }

    // The matching serving the prefix point is unique: every edge weight is
    // pinned to the same value from below and above.
    for (int e = 0; e < graph.edge_count(); ++e) {
        auto [lo, hi] = lp::edge_weight_range(graph.incidence, graph.label_matrix, star, e);
        if (lo != hi)
            out.push_back({"uniqueness", spec_str(spec) + " edge " + std::to_string(e + 1) +
                                             " weight range [" + rat_pretty(lo) + "," +
                                             rat_pretty(hi) + "]"});
    }
    return out;
}

InclusionCheck inclusion_grid(int n, int k, const Rational& step) {
    InclusionCheck result;
    std::vector<codes::GeneratorSpec> specs;
    for (int i = 0; i <= k; ++i) specs.emplace_back(n, k, i);
    Rational box = region::matching_number_closed_form(specs.back()) + 1;
    auto values = grid_values(box, step);

    std::vector<std::size_t> idx(static_cast<std::size_t>(k) - 1, 0);
    do {
        std::vector<Rational> base(k, Rational(0));
        for (int j = 0; j + 1 < k; ++j) base[j] = values[idx[j]];
        ++result.columns;
        std::optional<Rational> prev;
        for (int i = 0; i <= k; ++i) {
            auto gamma = orbitlp::max_axis(specs[i], base, k);
            if (i > 0) {
                bool ok = !prev || (gamma && *gamma >= *prev);
                if (!ok)
                    result.violations.push_back(
                        {"inclusion", spec_str(specs[i]) + " base=" + point_str(base) +
                                          " gamma_i-1=" + opt_str(prev) +
                                          " gamma_i=" + opt_str(gamma)});
            }
            prev = gamma;
        }
    } while (next_base(idx, values.size()));
    return result;
}

Report run_sweep(const SweepConfig& cfg) {
    Report report;
    report.config = cfg;
    const Rational& step = cfg.grid_step;

    for (int k = cfg.k_min; k <= cfg.k_max; ++k) {
        for (int n = k; n <= cfg.n_max; ++n) {
            std::vector<SpecContext> ctxs;
            for (int i = 0; i <= k; ++i) {
                codes::GeneratorSpec spec(n, k, i);
                SpecContext ctx{spec, hg::build_hypergraph(spec), region::closed_form_polytope(spec),
                                region::matching_simplex(spec), region::achievable_simplex(spec),
                                region::matching_number_closed_form(spec), Rational(0), {}};
                ctx.own_box = ctx.nu_formula + 1;
                ctx.own_values = grid_values(ctx.own_box, step);
                ctxs.push_back(std::move(ctx));
            }

            if (cfg.duality)
                for (const auto& ctx : ctxs) run_duality(report, ctx);

            if (cfg.oracle)
                for (const auto& ctx : ctxs) {
                    if (ctx.closed_form) ++report.oracle_specs;
                    run_random_points(report, ctx, cfg);
                }

            if (cfg.uniqueness)
                for (const auto& ctx : ctxs)
                    if (ctx.spec.i >= 2 && n <= k + ctx.spec.i - 2)
                        run_uniqueness(report, ctx.spec, step);

            const bool need_grid = cfg.oracle || cfg.inclusion || cfg.greedy;
            if (need_grid) {
                // One shared base grid per (n, k), sized for the largest
                // region so the inclusion chain can reuse the same columns.
                Rational shared_box = ctxs.back().nu_formula + 1;
                auto values = grid_values(shared_box, step);
                long flat = 0;
                std::vector<std::size_t> idx(static_cast<std::size_t>(k) - 1, 0);
                do {
                    std::vector<Rational> base(k, Rational(0));
                    for (int j = 0; j + 1 < k; ++j) base[j] = values[idx[j]];

                    std::optional<Rational> prev_gamma;
                    for (int i = 0; i <= k; ++i) {
                        const auto& ctx = ctxs[i];
                        auto gamma = orbitlp::max_axis(ctx.spec, base, k);
                        ++report.oracle_columns;

                        bool base_inside = true;
                        for (int j = 0; j + 1 < k; ++j)
                            if (base[j] > ctx.own_box) base_inside = false;

                        if (cfg.oracle && ctx.closed_form) {
                            auto gamma_cf = ctx.closed_form->max_axis(base, k);
                            if (gamma_cf != gamma)
                                add(report, "oracle-gamma",
                                    spec_str(ctx.spec) + " base=" + point_str(base) +
                                        " closed_form=" + opt_str(gamma_cf) +
                                        " lp=" + opt_str(gamma));
                            if (base_inside)
                                report.oracle_grid_points +=
                                    static_cast<long>(ctx.own_values.size());
                        }

                        if (cfg.oracle) {
                            // Sandwich: inner simplex <= region <= outer simplex.
                            auto inner = ctx.inner.max_axis(base, k);
                            auto outer = ctx.outer.max_axis(base, k);
                            if (inner && (!gamma || *gamma < *inner))
                                add(report, "sandwich-inner",
                                    spec_str(ctx.spec) + " base=" + point_str(base) +
                                        " inner=" + opt_str(inner) + " lp=" + opt_str(gamma));
                            if (gamma && (!outer || *outer < *gamma))
                                add(report, "sandwich-outer",
                                    spec_str(ctx.spec) + " base=" + point_str(base) +
                                        " outer=" + opt_str(outer) + " lp=" + opt_str(gamma));
                        }

                        if (cfg.inclusion && i > 0) {
                            ++report.inclusion_columns;
                            bool ok = !prev_gamma || (gamma && *gamma >= *prev_gamma);
                            if (!ok)
                                add(report, "inclusion",
                                    spec_str(ctx.spec) + " base=" + point_str(base) +
                                        " gamma_prev=" + opt_str(prev_gamma) +
                                        " gamma=" + opt_str(gamma));
                        }
                        prev_gamma = gamma;

                        // Per-point duties: greedy completeness on accepted
                        // points and strided full-LP spot checks.
                        if ((cfg.greedy || cfg.oracle) && base_inside) {
                            for (const auto& t : ctx.own_values) {
                                ++flat;
                                bool accepted = gamma && t <= *gamma;
                                std::vector<Rational> lambda = base;
                                lambda[k - 1] = t;
                                if (cfg.greedy && accepted) {
                                    ++report.greedy_accepted_points;
                                    auto res = alloc::allocate(ctx.graph, lambda);
                                    if (!res.feasible)
                                        add(report, "greedy",
                                            spec_str(ctx.spec) + " " + point_str(lambda) +
                                                " accepted by LP but not allocated");
                                }
                                if (cfg.oracle && flat % cfg.spot_stride == 0) {
                                    ++report.oracle_spot_checks;
                                    bool full = region::membership(ctx.graph, lambda).member;
                                    if (full != accepted)
                                        add(report, "oracle-spot",
                                            spec_str(ctx.spec) + " " + point_str(lambda) +
                                                " full_lp=" + (full ? "in" : "out") +
                                                " column=" + (accepted ? "in" : "out"));
                                    if (ctx.closed_form &&
                                        ctx.closed_form->contains(lambda) != full)
                                        add(report, "oracle-spot-closed-form",
                                            spec_str(ctx.spec) + " " + point_str(lambda));
                                    if (cfg.greedy && !accepted) {
                                        auto res = alloc::allocate(ctx.graph, lambda);
                                        if (res.feasible)
                                            add(report, "greedy-spot",
                                                spec_str(ctx.spec) + " " + point_str(lambda) +
                                                    " allocated but outside the region");
                                    }
                                }
                            }
                        }
                    }
                } while (next_base(idx, values.size()));
            }

            if (cfg.inclusion) {
                for (int i = 0; i < k; ++i) {
                    try {
                        auto witness = region::inclusion_witness(n, k, i);
                        if (witness.point) {
                            ++report.inclusion_witnesses;
                        } else if (witness.degenerate) {
                            ++report.inclusion_degenerate_empty;
                        } else {
                            add(report, "inclusion-witness",
                                "(" + std::to_string(n) + "," + std::to_string(k) + ") i=" +
                                    std::to_string(i) + " no separating point found");
                        }
                    } catch (const std::logic_error& err) {
                        add(report, "inclusion-witness",
                            "(" + std::to_string(n) + "," + std::to_string(k) + ") i=" +
                                std::to_string(i) + " " + err.what());
                    }
                }
            }
        }
    }
    return report;
}

nlohmann::ordered_json report_json(const Report& r) {
    nlohmann::ordered_json j;
    j["config"] = {{"k_min", r.config.k_min},
                   {"k_max", r.config.k_max},
                   {"n_max", r.config.n_max},
                   {"grid_step", rat_str(r.config.grid_step)},
                   {"random_points", r.config.random_points},
                   {"seed", r.config.seed},
                   {"spot_stride", r.config.spot_stride},
                   {"sections",
                    {{"duality", r.config.duality},
                     {"oracle", r.config.oracle},
                     {"inclusion", r.config.inclusion},
                     {"greedy", r.config.greedy},
                     {"uniqueness", r.config.uniqueness}}}};
    j["duality"] = {{"instances", r.duality_instances}};
    j["oracle"] = {{"specs", r.oracle_specs},
                   {"columns", r.oracle_columns},
                   {"grid_points", r.oracle_grid_points},
                   {"random_points", r.oracle_random_points},
                   {"full_lp_spot_checks", r.oracle_spot_checks}};
    j["inclusion"] = {{"columns", r.inclusion_columns},
                      {"witnesses", r.inclusion_witnesses},
                      {"degenerate_without_witness", r.inclusion_degenerate_empty}};
    j["greedy"] = {{"accepted_points", r.greedy_accepted_points}};
    j["uniqueness"] = {{"probes", r.uniqueness_probes}, {"points", r.uniqueness_points}};
    nlohmann::ordered_json violations = nlohmann::ordered_json::array();
    for (const auto& v : r.violations) violations.push_back({{"check", v.check}, {"detail", v.detail}});
    j["violations"] = std::move(violations);
    j["ok"] = r.ok();
    return j;
}

} // namespace srrkit::verify
