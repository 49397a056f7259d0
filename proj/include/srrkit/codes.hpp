#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "srrkit/prime_field.hpp"

namespace srrkit::codes {

// Parameters of one storage system: k objects on n servers, the first i of
// which hold uncoded copies. q must be prime with q >= n + k + 1; when not
// given it defaults to the smallest such prime.
struct GeneratorSpec {
    int n = 0;
    int k = 0;
    int i = 0;
    gf::Elem q = 0;

    GeneratorSpec() = default;
    GeneratorSpec(int n, int k, int i, std::optional<gf::Elem> q_override = std::nullopt);

    bool operator==(const GeneratorSpec& o) const {
        return n == o.n && k == o.k && i == o.i && q == o.q;
    }
};

struct ColumnKind {
    enum Tag { Systematic, Parity } tag;
    int index; // object index j for Systematic, mother parity index l for Parity; 1-based
};

struct GeneratorMatrix {
    GeneratorSpec spec;
    gf::FieldMatrix matrix; // k x n
    std::vector<ColumnKind> column_kinds;
};

// Systematic MDS mother matrix [I_k | p_1 .. p_n] over GF(q), built from the
// Reed-Solomon generator on evaluation points 0..k+n-1 and row-reduced so
// the leading block is the identity. Every k-column minor is nonsingular;
// verified exhaustively when n + k <= 16, trusted beyond that (the
// Vandermonde argument covers all sizes).
gf::FieldMatrix build_mother_matrix(int n, int k, gf::Elem q);

// The i leftmost systematic columns of the mother matrix followed by its
// n - i rightmost parity columns.
GeneratorMatrix build_generator(const GeneratorSpec& spec);

struct RecoverySet {
    enum Kind { Systematic, NonSystematic } kind;
    int object;               // 1-based object index j
    std::vector<int> columns; // sorted 1-based column indices
};

// All recovery sets for object j, in deterministic order: the systematic
// singleton first (when j <= i), then the size-k sets in lexicographic
// column order. Counts follow the closed forms 1 + C(n-1, k) and C(n, k).
std::vector<RecoverySet> enumerate_recovery_sets(const GeneratorMatrix& g, int j);

// Span-based oracle: e_j lies in the span of the set's columns and in the
// span of no proper subset. Kept independent of the combinatorial
// enumeration above so the two can cross-check each other.
bool verify_recovery_set(const GeneratorMatrix& g, const RecoverySet& r);

} // namespace srrkit::codes
