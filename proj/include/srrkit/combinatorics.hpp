#pragma once

#include <cstdint>
#include <vector>

namespace srrkit {

// C(n, k) in exact 64-bit arithmetic; callers stay well inside desk scale.
std::uint64_t binomial(unsigned n, unsigned k);

// All k-subsets of {0, .., n-1} in lexicographic order.
// Empty result when k > n; the single empty subset when k == 0.
std::vector<std::vector<int>> k_subsets(int n, int k);

// Lexicographic successor of a k-subset of {0, .., n-1}; starts from an
// empty state vector. Returns false once exhausted.
bool next_k_subset(std::vector<int>& state, int n, int k);

} // namespace srrkit
