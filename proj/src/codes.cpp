#include "srrkit/codes.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <string>

#include "srrkit/combinatorics.hpp"

namespace srrkit::codes {

GeneratorSpec::GeneratorSpec(int n_, int k_, int i_, std::optional<gf::Elem> q_override)
    : n(n_), k(k_), i(i_) {
    if (k < 2) throw std::invalid_argument("k must be at least 2");
    if (n < k) throw std::invalid_argument("n must be at least k");
    if (i < 0 || i > k) throw std::invalid_argument("i must lie in [0, k]");
    const std::uint64_t q_min = static_cast<std::uint64_t>(n) + k + 1;
    if (q_override) {
        q = *q_override;
        if (!gf::is_prime(q)) throw std::invalid_argument("q must be prime");
        if (q < q_min)
            throw std::invalid_argument("q must be at least n+k+1 = " + std::to_string(q_min));
    } else {
        q = gf::smallest_prime_at_least(q_min);
    }
}

gf::FieldMatrix build_mother_matrix(int n, int k, gf::Elem q) {
    if (static_cast<std::uint64_t>(q) < static_cast<std::uint64_t>(n) + k + 1)
        throw std::invalid_argument("q < n+k+1");
    gf::PrimeField field(q);

    // Reed-Solomon generator on points 0..k+n-1: column c is (1, c, c^2, ...).
    gf::FieldMatrix rs(field, k, k + n);
    for (int c = 0; c < k + n; ++c) {
        gf::Elem x = static_cast<gf::Elem>(c);
        gf::Elem p = 1;
        for (int r = 0; r < k; ++r) {
            rs.at(r, c) = p;
            p = field.mul(p, x);
        }
    }

    // Row-reduce so the first k columns become I_k. The leading block is a
    // Vandermonde matrix on distinct points, hence invertible; row
    // operations keep every k-column minor nonsingular.
    for (int c = 0; c < k; ++c) {
        int pivot = -1;
        for (int r = c; r < k; ++r)
            if (rs.at(r, c) != 0) { pivot = r; break; }
        assert(pivot >= 0);
        if (pivot != c)
            for (int cc = 0; cc < k + n; ++cc) std::swap(rs.at(pivot, cc), rs.at(c, cc));
        gf::Elem inv = field.inv(rs.at(c, c));
        for (int cc = 0; cc < k + n; ++cc) rs.at(c, cc) = field.mul(rs.at(c, cc), inv);
        for (int r = 0; r < k; ++r) {
            if (r == c || rs.at(r, c) == 0) continue;
            gf::Elem factor = rs.at(r, c);
            for (int cc = 0; cc < k + n; ++cc)
                rs.at(r, cc) = field.sub(rs.at(r, cc), field.mul(factor, rs.at(c, cc)));
        }
    }

    if (n + k <= 16 && !all_k_minors_nonsingular(rs, k))
        throw std::logic_error("mother matrix failed the MDS minor check");
    return rs;
}

GeneratorMatrix build_generator(const GeneratorSpec& spec) {
    gf::FieldMatrix mother = build_mother_matrix(spec.n, spec.k, spec.q);
    gf::PrimeField field(spec.q);
    gf::FieldMatrix g(field, spec.k, spec.n);
    std::vector<ColumnKind> kinds;
    kinds.reserve(spec.n);
    for (int c = 0; c < spec.i; ++c) {
        for (int r = 0; r < spec.k; ++r) g.at(r, c) = mother.at(r, c);
        kinds.push_back({ColumnKind::Systematic, c + 1});
    }
    for (int c = spec.i; c < spec.n; ++c) {
        // Parity p_l sits at mother column k + l (1-based l).
        for (int r = 0; r < spec.k; ++r) g.at(r, c) = mother.at(r, spec.k + c);
        kinds.push_back({ColumnKind::Parity, c + 1});
    }
    return GeneratorMatrix{spec, std::move(g), std::move(kinds)};
}

std::vector<RecoverySet> enumerate_recovery_sets(const GeneratorMatrix& g, int j) {
    const GeneratorSpec& spec = g.spec;
    if (j < 1 || j > spec.k) throw std::invalid_argument("object index out of range");
    std::vector<RecoverySet> out;
    if (j <= spec.i) {
        out.push_back(RecoverySet{RecoverySet::Systematic, j, {j}});
        // All k-subsets of the other n-1 columns.
        std::vector<int> others;
        for (int c = 1; c <= spec.n; ++c)
            if (c != j) others.push_back(c);
        for (const auto& subset : k_subsets(static_cast<int>(others.size()), spec.k)) {
            RecoverySet r{RecoverySet::NonSystematic, j, {}};
            for (int idx : subset) r.columns.push_back(others[idx]);
            out.push_back(std::move(r));
        }
    } else {
        for (const auto& subset : k_subsets(spec.n, spec.k)) {
            RecoverySet r{RecoverySet::NonSystematic, j, {}};
            for (int idx : subset) r.columns.push_back(idx + 1);
            out.push_back(std::move(r));
        }
    }
    return out;
}

bool verify_recovery_set(const GeneratorMatrix& g, const RecoverySet& r) {
    const int k = g.spec.k;
    if (r.object < 1 || r.object > k) return false;
    std::vector<gf::Elem> target(k, 0);
    target[r.object - 1] = 1;

    std::vector<int> cols0;
    for (int c : r.columns) {
        if (c < 1 || c > g.spec.n) return false;
        cols0.push_back(c - 1);
    }
    if (!gf::solve_in_span(g.matrix, cols0, target)) return false;
    // Minimality: no (|R|-1)-subset spans e_j.
    for (std::size_t drop = 0; drop < cols0.size(); ++drop) {
        std::vector<int> sub;
        for (std::size_t t = 0; t < cols0.size(); ++t)
            if (t != drop) sub.push_back(cols0[t]);
        if (gf::solve_in_span(g.matrix, sub, target)) return false;
    }
    return true;
}

} // namespace srrkit::codes
