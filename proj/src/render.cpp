#include "srrkit/render.hpp"

#include <algorithm>
#include <sstream>

#include "srrkit/errors.hpp"
#include "srrkit/orbit_lp.hpp"

namespace srrkit::render {

namespace {

// Fixed-point decimal with two digits, computed in integer arithmetic so
// the output never depends on float formatting.
std::string px(const Rational& value) {
    Rational scaled = value * 100;
    BigInt whole = numerator(scaled) / denominator(scaled);
    BigInt rem = numerator(scaled) - whole * denominator(scaled);
    // round half away from zero
    if (rem * 2 >= denominator(scaled)) whole += 1;
    bool negative = whole < 0;
    if (negative) whole = -whole;
    BigInt int_part = whole / 100;
    BigInt frac = whole % 100;
    std::ostringstream out;
    if (negative) out << "-";
    out << int_part.str() << ".";
    std::string f = frac.str();
    if (f.size() < 2) out << "0";
    out << f;
    return out.str();
}

struct Viewport {
    Rational scale;  // pixels per rate unit
    Rational margin; // pixels
    Rational size;   // drawable pixels

    Rational x(const Rational& v) const { return margin + v * scale; }
    Rational y(const Rational& v) const { return margin + size - v * scale; }
};

std::string polyline(const std::vector<std::pair<Rational, Rational>>& pts) {
    std::ostringstream out;
    for (std::size_t t = 0; t < pts.size(); ++t)
        out << (t ? " " : "") << px(pts[t].first) << "," << px(pts[t].second);
    return out.str();
}

void line(std::ostringstream& svg, const Viewport& vp, const Rational& x1, const Rational& y1,
          const Rational& x2, const Rational& y2, const std::string& style) {
    svg << "<line x1=\"" << px(vp.x(x1)) << "\" y1=\"" << px(vp.y(y1)) << "\" x2=\""
        << px(vp.x(x2)) << "\" y2=\"" << px(vp.y(y2)) << "\" " << style << "/>\n";
}

std::string svg_2d(const codes::GeneratorSpec& spec) {
    auto closed = region::closed_form_polytope(spec);
    auto outer = region::matching_simplex(spec);
    auto inner = region::achievable_simplex(spec);
    Rational nu = region::matching_number_closed_form(spec);

    Viewport vp;
    vp.margin = 60;
    vp.size = 520;
    vp.scale = vp.size / (nu + Rational(1, 2));

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"640\" "
           "viewBox=\"0 0 640 640\">\n";
    svg << "<rect width=\"640\" height=\"640\" fill=\"white\"/>\n";

    // axes
    Rational axis_len = nu + Rational(1, 4);
    line(svg, vp, 0, 0, axis_len, 0, "stroke=\"black\" stroke-width=\"1.5\"");
    line(svg, vp, 0, 0, 0, axis_len, "stroke=\"black\" stroke-width=\"1.5\"");
    svg << "<text x=\"" << px(vp.x(axis_len)) << "\" y=\"" << px(vp.y(0) + 30)
        << "\" font-size=\"16\">rate 1</text>\n";
    svg << "<text x=\"" << px(vp.x(0) - 50) << "\" y=\"" << px(vp.y(axis_len))
        << "\" font-size=\"16\">rate 2</text>\n";

    // bounding simplices, dotted
    const std::string dotted = "stroke=\"black\" stroke-width=\"1\" stroke-dasharray=\"3,4\"";
    line(svg, vp, nu, 0, 0, nu, dotted);
    Rational m1 = region::max_demand(spec, 1), m2 = region::max_demand(spec, 2);
    line(svg, vp, m1, 0, 0, m2, dotted);

    // region boundary in red, drawn through the nonzero vertices
    const region::HPolytope& shape = closed ? *closed : inner;
    auto vertices = region::enumerate_vertices(shape);
    std::vector<std::pair<Rational, Rational>> path;
    for (const auto& v : vertices)
        if (!(v[0] == 0 && v[1] == 0)) path.emplace_back(v[0], v[1]);
    std::sort(path.begin(), path.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first < b.first;
        return a.second > b.second;
    });
    std::vector<std::pair<Rational, Rational>> pixels;
    for (const auto& [x, y] : path) pixels.emplace_back(vp.x(x), vp.y(y));
    svg << "<polyline points=\"" << polyline(pixels)
        << "\" fill=\"none\" stroke=\"red\" stroke-width=\"2\"/>\n";
    if (!closed)
        svg << "<text x=\"70\" y=\"80\" font-size=\"14\">closed form unavailable: inner "
               "simplex drawn</text>\n";

    // intercept labels
    svg << "<text x=\"" << px(vp.x(path.back().first)) << "\" y=\"" << px(vp.y(0) + 20)
        << "\" font-size=\"14\" fill=\"red\">" << rat_pretty(path.back().first) << "</text>\n";
    svg << "<text x=\"" << px(vp.x(0) - 40) << "\" y=\"" << px(vp.y(path.front().second))
        << "\" font-size=\"14\" fill=\"red\">" << rat_pretty(path.front().second) << "</text>\n";
    svg << "</svg>\n";
    return svg.str();
}

// Orthographic projection used for the 3D wireframes: the documented fixed
// angle maps (x, y, z) to (y - x) * 7/8 on the horizontal axis and
// z - (x + y) / 2 on the vertical one.
std::pair<Rational, Rational> project(const region::DemandVector& v) {
    return {(v[1] - v[0]) * Rational(7, 8), v[2] - (v[0] + v[1]) / 2};
}

// Rank over the rationals, used to recognize polytope edges.
int rat_rank(std::vector<std::vector<Rational>> m) {
    int rank = 0;
    const int rows = static_cast<int>(m.size());
    if (rows == 0) return 0;
    const int cols = static_cast<int>(m[0].size());
    for (int c = 0; c < cols && rank < rows; ++c) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r)
            if (m[r][c] != 0) { pivot = r; break; }
        if (pivot < 0) continue;
        std::swap(m[pivot], m[rank]);
        for (int r = 0; r < rows; ++r) {
            if (r == rank || m[r][c] == 0) continue;
            Rational f = m[r][c] / m[rank][c];
            for (int cc = 0; cc < cols; ++cc) m[r][cc] -= f * m[rank][cc];
        }
        ++rank;
    }
    return rank;
}

std::string svg_3d(const codes::GeneratorSpec& spec) {
    auto closed = region::closed_form_polytope(spec);
    const region::HPolytope shape = closed ? *closed : region::achievable_simplex(spec);
    auto vertices = region::enumerate_vertices(shape);

    // Active constraint sets (facets and coordinate planes) per vertex.
    std::vector<region::HConstraint> planes = shape.constraints;
    for (int j = 0; j < 3; ++j) {
        region::HConstraint axis;
        axis.coeffs.assign(3, Rational(0));
        axis.coeffs[j] = 1;
        axis.bound = 0;
        planes.push_back(std::move(axis));
    }
    auto active = [&](const region::DemandVector& v) {
        std::vector<int> out;
        for (std::size_t p = 0; p < planes.size(); ++p) {
            Rational lhs(0);
            for (int j = 0; j < 3; ++j) lhs += planes[p].coeffs[j] * v[j];
            if (lhs == planes[p].bound) out.push_back(static_cast<int>(p));
        }
        return out;
    };
    std::vector<std::vector<int>> act;
    for (const auto& v : vertices) act.push_back(active(v));

    Viewport vp;
    vp.margin = 60;
    vp.size = 520;
    Rational reach(1);
    std::vector<std::pair<Rational, Rational>> proj;
    for (const auto& v : vertices) {
        auto [u, w] = project(v);
        proj.emplace_back(u, w);
        for (const Rational& dim : {u < 0 ? -u : u, w < 0 ? -w : w})
            if (dim > reach) reach = dim;
    }
    vp.scale = (vp.size / 2) / reach;
    auto sx = [&](const Rational& u) { return Rational(320) + u * vp.scale; };
    auto sy = [&](const Rational& w) { return Rational(320) - w * vp.scale; };

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"640\" "
           "viewBox=\"0 0 640 640\">\n";
    svg << "<rect width=\"640\" height=\"640\" fill=\"white\"/>\n";
    // wireframe: vertex pairs whose common active planes span a line
    for (std::size_t a = 0; a < vertices.size(); ++a)
        for (std::size_t b = a + 1; b < vertices.size(); ++b) {
            std::vector<std::vector<Rational>> common;
            for (int p : act[a])
                if (std::find(act[b].begin(), act[b].end(), p) != act[b].end())
                    common.push_back(planes[p].coeffs);
            if (rat_rank(common) != 2) continue;
            svg << "<line x1=\"" << px(sx(proj[a].first)) << "\" y1=\"" << px(sy(proj[a].second))
                << "\" x2=\"" << px(sx(proj[b].first)) << "\" y2=\"" << px(sy(proj[b].second))
                << "\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
        }
    for (std::size_t a = 0; a < vertices.size(); ++a) {
        svg << "<circle cx=\"" << px(sx(proj[a].first)) << "\" cy=\"" << px(sy(proj[a].second))
            << "\" r=\"3\" fill=\"blue\"/>\n";
        svg << "<text x=\"" << px(sx(proj[a].first) + 6) << "\" y=\"" << px(sy(proj[a].second) - 6)
            << "\" font-size=\"12\">(" << rat_pretty(vertices[a][0]) << ","
            << rat_pretty(vertices[a][1]) << "," << rat_pretty(vertices[a][2]) << ")</text>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

} // namespace

std::string region_svg(const codes::GeneratorSpec& spec) {
    if (spec.k == 2) return svg_2d(spec);
    if (spec.k == 3) return svg_3d(spec);
    throw UnsupportedQuery("figures are limited to 2 and 3 objects");
}

std::string vertices_csv(const std::vector<region::DemandVector>& vertices) {
    std::ostringstream out;
    for (const auto& v : vertices) {
        for (std::size_t j = 0; j < v.size(); ++j) out << (j ? "," : "") << rat_str(v[j]);
        out << "\n";
    }
    return out.str();
}

std::string point_cloud_csv(const codes::GeneratorSpec& spec, const Rational& step) {
    Rational box = region::matching_number_closed_form(spec) + 1;
    std::vector<Rational> values;
    for (Rational v(0); v <= box; v += step) values.push_back(v);

    std::ostringstream out;
    std::vector<std::size_t> idx(spec.k - 1, 0);
    bool more = true;
    while (more) {
        std::vector<Rational> base(spec.k, Rational(0));
        for (int j = 0; j + 1 < spec.k; ++j) base[j] = values[idx[j]];
        auto gamma = orbitlp::max_axis(spec, base, spec.k);
        if (gamma) {
            for (const auto& t : values) {
                if (t > *gamma) break;
                std::vector<Rational> lambda = base;
                lambda[spec.k - 1] = t;
                for (int j = 0; j < spec.k; ++j) out << (j ? "," : "") << rat_str(lambda[j]);
                out << "\n";
            }
        }
        more = false;
        for (std::size_t pos = idx.size(); pos-- > 0;) {
            if (++idx[pos] < values.size()) {
                more = true;
                break;
            }
            idx[pos] = 0;
        }
    }
    return out.str();
}

} // namespace srrkit::render
