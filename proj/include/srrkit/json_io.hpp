#pragma once

#include <string>

#include <json.hpp>

#include "srrkit/alloc.hpp"
#include "srrkit/codes.hpp"
#include "srrkit/hypergraph.hpp"
#include "srrkit/region.hpp"

namespace srrkit::io {

using Json = nlohmann::ordered_json;

Json generator_json(const codes::GeneratorMatrix& g);
Json hypergraph_json(const hg::RecoveryHypergraph& h, bool emit_incidence);
Json polytope_json(const region::HPolytope& p);
Json unsupported_polytope_json(int k);
Json certificate_json(const hg::RecoveryHypergraph& h, const alloc::AllocationCertificate& c);

// Canonical serialization: 2-space indent, trailing newline. All files the
// toolkit writes go through this one door so byte determinism holds.
std::string dump(const Json& j);
void write_file(const std::string& path, const Json& j);
void write_text(const std::string& path, const std::string& text);

} // namespace srrkit::io
