#pragma once

#include <cstdint>
#include <vector>

namespace srrkit::gf {

// Field element values live in [0, q) as plain integers; the field object
// carries the modulus and the arithmetic.
using Elem = std::uint32_t;

// GF(q) for prime q. Primality is checked at construction by trial
// division; q is capped at desk scale (q < 10^6).
class PrimeField {
  public:
    explicit PrimeField(Elem q);

    Elem modulus() const { return q_; }

    Elem add(Elem a, Elem b) const { return reduce(static_cast<std::uint64_t>(a) + b); }
    Elem sub(Elem a, Elem b) const { return reduce(static_cast<std::uint64_t>(a) + q_ - b); }
    Elem mul(Elem a, Elem b) const { return reduce(static_cast<std::uint64_t>(a) * b); }
    Elem neg(Elem a) const { return a == 0 ? 0 : q_ - a; }

    // Throws DivisionByZero for a == 0.
    Elem inv(Elem a) const;

    Elem pow(Elem base, std::uint64_t exp) const;

    bool operator==(const PrimeField& other) const { return q_ == other.q_; }

  private:
    Elem reduce(std::uint64_t x) const { return static_cast<Elem>(x % q_); }
    Elem q_;
};

bool is_prime(std::uint64_t n);

// Smallest prime >= n; used to pick q for a generator spec.
Elem smallest_prime_at_least(std::uint64_t n);

// Dense row-major matrix over GF(q).
struct FieldMatrix {
    FieldMatrix(PrimeField field, int rows, int cols)
        : field(field), rows(rows), cols(cols), entries(static_cast<std::size_t>(rows) * cols, 0) {}

    PrimeField field;
    int rows;
    int cols;
    std::vector<Elem> entries;

    Elem& at(int r, int c) { return entries[static_cast<std::size_t>(r) * cols + c]; }
    Elem at(int r, int c) const { return entries[static_cast<std::size_t>(r) * cols + c]; }

    static FieldMatrix identity(PrimeField field, int n);
};

// Row rank over GF(q) by Gaussian elimination.
int rank(const FieldMatrix& m);

// True iff every k-column submatrix of m has rank k (brute force over all
// C(cols, k) subsets). Requires m.rows == k; throws std::invalid_argument
// when k > cols.
bool all_k_minors_nonsingular(const FieldMatrix& m, int k);

// Solves M x = target over GF(q) where M is built from the given columns of
// src. Returns false when the target is not in their span.
bool solve_in_span(const FieldMatrix& src, const std::vector<int>& columns,
                   const std::vector<Elem>& target, std::vector<Elem>* solution = nullptr);

} // namespace srrkit::gf
