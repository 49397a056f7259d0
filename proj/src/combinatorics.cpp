#include "srrkit/combinatorics.hpp"

namespace srrkit {

std::uint64_t binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    std::uint64_t result = 1;
    for (unsigned i = 1; i <= k; ++i) {
        result = result * (n - k + i) / i;
    }
    return result;
}

bool next_k_subset(std::vector<int>& state, int n, int k) {
    if (k > n || k < 0) return false;
    if (state.empty()) {
        for (int j = 0; j < k; ++j) state.push_back(j);
        return true;
    }
    if (state[0] == n - k) return false;
    int i = k - 1;
    while (state[i] >= n - k + i) --i;
    ++state[i];
    for (int j = i + 1; j < k; ++j) state[j] = state[i] + j - i;
    return true;
}

std::vector<std::vector<int>> k_subsets(int n, int k) {
    std::vector<std::vector<int>> out;
    if (k < 0 || k > n) return out;
    if (k == 0) {
        out.emplace_back();
        return out;
    }
    std::vector<int> state;
    while (next_k_subset(state, n, k)) out.push_back(state);
    return out;
}

} // namespace srrkit
