#pragma once

#include <optional>
#include <vector>

#include "srrkit/codes.hpp"
#include "srrkit/rational.hpp"

namespace srrkit::orbitlp {

// Membership and axis maxima computed on a reduced LP that aggregates
// edges into orbits of the parity-column symmetry of the recovery
// hypergraph. Permuting parity columns is a label-preserving automorphism,
// so averaging any feasible matching over the permutation group keeps it
// feasible with the same served vector; a symmetric matching in turn is
// determined by one total weight per (label, systematic-support) orbit.
// The reduction is therefore exact, and the verification sweeps assert
// agreement with the full edge-level LP on sampled points.

bool member(const codes::GeneratorSpec& spec, const std::vector<Rational>& lambda);

// Largest gamma with base + gamma * e_axis servable (1-based axis, the
// axis coordinate of `base` is ignored); nullopt when the pinned
// coordinates are already unservable.
std::optional<Rational> max_axis(const codes::GeneratorSpec& spec,
                                 const std::vector<Rational>& base, int axis);

} // namespace srrkit::orbitlp
