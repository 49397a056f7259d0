#pragma once

#include <string>
#include <vector>

#include "srrkit/codes.hpp"
#include "srrkit/rational.hpp"
#include "srrkit/region.hpp"

namespace srrkit::render {

// Region figure for k = 2 (exact 2D) or k = 3 (orthographic wireframe at a
// fixed angle). All geometry stays rational; only the final viewport
// mapping rounds, to hundredths of a pixel.
std::string region_svg(const codes::GeneratorSpec& spec);

// Vertex list as CSV, one exact "p/q" entry per coordinate.
std::string vertices_csv(const std::vector<region::DemandVector>& vertices);

// Grid sample of the service region for specs without a closed form:
// one row per servable grid point.
std::string point_cloud_csv(const codes::GeneratorSpec& spec, const Rational& step);

} // namespace srrkit::render
