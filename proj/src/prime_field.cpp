#include "srrkit/prime_field.hpp"

#include <cassert>
#include <stdexcept>

#include "srrkit/errors.hpp"

namespace srrkit::gf {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

Elem smallest_prime_at_least(std::uint64_t n) {
    std::uint64_t candidate = n < 2 ? 2 : n;
    while (!is_prime(candidate)) ++candidate;
    if (candidate >= 1000000) throw std::invalid_argument("field modulus beyond desk scale");
    return static_cast<Elem>(candidate);
}

PrimeField::PrimeField(Elem q) : q_(q) {
    if (q >= 1000000) throw std::invalid_argument("field modulus beyond desk scale");
    if (!is_prime(q)) throw std::invalid_argument("modulus " + std::to_string(q) + " is not prime");
}

Elem PrimeField::inv(Elem a) const {
    if (a == 0) throw DivisionByZero("inverse of zero in GF(" + std::to_string(q_) + ")");
    return pow(a, q_ - 2);
}

Elem PrimeField::pow(Elem base, std::uint64_t exp) const {
    std::uint64_t acc = 1;
    std::uint64_t b = base % q_;
    while (exp > 0) {
        if (exp & 1) acc = acc * b % q_;
        b = b * b % q_;
        exp >>= 1;
    }
    return static_cast<Elem>(acc);
}

FieldMatrix FieldMatrix::identity(PrimeField field, int n) {
    FieldMatrix m(field, n, n);
    for (int d = 0; d < n; ++d) m.at(d, d) = 1;
    return m;
}

namespace {

// Forward elimination in place; returns the rank.
int eliminate(FieldMatrix& m) {
    const PrimeField& f = m.field;
    int r = 0;
    for (int c = 0; c < m.cols && r < m.rows; ++c) {
        int pivot = -1;
        for (int row = r; row < m.rows; ++row) {
            if (m.at(row, c) != 0) {
                pivot = row;
                break;
            }
        }
        if (pivot < 0) continue;
        if (pivot != r)
            for (int cc = 0; cc < m.cols; ++cc) std::swap(m.at(pivot, cc), m.at(r, cc));
        Elem inv = f.inv(m.at(r, c));
        for (int cc = c; cc < m.cols; ++cc) m.at(r, cc) = f.mul(m.at(r, cc), inv);
        for (int row = 0; row < m.rows; ++row) {
            if (row == r || m.at(row, c) == 0) continue;
            Elem factor = m.at(row, c);
            for (int cc = c; cc < m.cols; ++cc)
                m.at(row, cc) = f.sub(m.at(row, cc), f.mul(factor, m.at(r, cc)));
        }
        ++r;
    }
    return r;
}

} // namespace

int rank(const FieldMatrix& m) {
    FieldMatrix copy = m;
    return eliminate(copy);
}

bool all_k_minors_nonsingular(const FieldMatrix& m, int k) {
    if (m.rows != k) throw std::invalid_argument("matrix must have exactly k rows");
    if (k > m.cols) throw std::invalid_argument("k exceeds column count");
    std::vector<int> subset;
    while (true) {
        if (subset.empty()) {
            for (int j = 0; j < k; ++j) subset.push_back(j);
        } else {
            if (subset[0] == m.cols - k) break;
            int i = k - 1;
            while (subset[i] >= m.cols - k + i) --i;
            ++subset[i];
            for (int j = i + 1; j < k; ++j) subset[j] = subset[i] + j - i;
        }
        FieldMatrix minor(m.field, k, k);
        for (int r = 0; r < k; ++r)
            for (int c = 0; c < k; ++c) minor.at(r, c) = m.at(r, subset[c]);
        if (eliminate(minor) != k) return false;
        if (k == 0) break;
    }
    return true;
}

bool solve_in_span(const FieldMatrix& src, const std::vector<int>& columns,
                   const std::vector<Elem>& target, std::vector<Elem>* solution) {
    assert(static_cast<int>(target.size()) == src.rows);
    const int n = static_cast<int>(columns.size());
    FieldMatrix aug(src.field, src.rows, n + 1);
    for (int r = 0; r < src.rows; ++r) {
        for (int c = 0; c < n; ++c) aug.at(r, c) = src.at(r, columns[c]);
        aug.at(r, n) = target[r];
    }
    eliminate(aug);
    // Inconsistent iff a row reads 0 = nonzero.
    for (int r = 0; r < aug.rows; ++r) {
        bool all_zero = true;
        for (int c = 0; c < n; ++c)
            if (aug.at(r, c) != 0) { all_zero = false; break; }
        if (all_zero && aug.at(r, n) != 0) return false;
    }
    if (solution) {
        solution->assign(n, 0);
        for (int r = 0; r < aug.rows; ++r) {
            int lead = -1;
            for (int c = 0; c < n; ++c)
                if (aug.at(r, c) != 0) { lead = c; break; }
            if (lead >= 0) (*solution)[lead] = aug.at(r, n);
        }
    }
    return true;
}

} // namespace srrkit::gf
