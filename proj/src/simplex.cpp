#include "srrkit/simplex.hpp"

#include <cstdint>
#include <limits>
#include <sstream>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

namespace srrkit::lp {

namespace {

struct TableauOverflow {};

using Int128 = __int128;

// Backend traits: Word is the tableau element type, Wide the type products
// are formed in. The int64 backend checks every narrowing; the big-integer
// backend never overflows.
struct I64Backend {
    using Word = std::int64_t;
    using Wide = Int128;
    static Word narrow(Wide v) {
        if (v > std::numeric_limits<std::int64_t>::max() ||
            v < std::numeric_limits<std::int64_t>::min())
            throw TableauOverflow{};
        return static_cast<Word>(v);
    }
    static Word from_bigint(const BigInt& v) {
        if (v > std::numeric_limits<std::int64_t>::max() ||
            v < std::numeric_limits<std::int64_t>::min())
            throw TableauOverflow{};
        return static_cast<Word>(v);
    }
    static BigInt to_bigint(Word v) { return BigInt(v); }
};

struct BigBackend {
    using Word = BigInt;
    using Wide = BigInt;
    static const Word& narrow(const Wide& v) { return v; }
    static Word from_bigint(const BigInt& v) { return v; }
    static const BigInt& to_bigint(const Word& v) { return v; }
};

// Row of the scaled integer system, sign-normalized so rhs >= 0.
struct IntRow {
    std::vector<BigInt> coeffs;
    Rel rel;
    BigInt rhs;
    BigInt scale;  // positive factor the original row was multiplied by
    bool flipped;  // original row negated (and rel mirrored)
};

std::vector<IntRow> scale_rows(const Problem& p) {
    std::vector<IntRow> rows;
    rows.reserve(p.rows.size());
    for (const auto& row : p.rows) {
        if (static_cast<int>(row.coeffs.size()) != p.num_vars)
            throw std::invalid_argument("constraint width does not match variable count");
        BigInt l = denominator(row.rhs);
        for (const auto& c : row.coeffs) l = lcm(l, denominator(c));
        IntRow ir;
        ir.scale = l;
        ir.flipped = false;
        ir.rel = row.rel;
        ir.coeffs.reserve(row.coeffs.size());
        for (const auto& c : row.coeffs)
            ir.coeffs.push_back(BigInt(numerator(c) * (l / denominator(c))));
        ir.rhs = numerator(row.rhs) * (l / denominator(row.rhs));
        if (ir.rhs < 0) {
            for (auto& c : ir.coeffs) c = -c;
            ir.rhs = -ir.rhs;
            ir.flipped = true;
            if (ir.rel == Rel::LE) ir.rel = Rel::GE;
            else if (ir.rel == Rel::GE) ir.rel = Rel::LE;
        }
        rows.push_back(std::move(ir));
    }
    return rows;
}

enum class RawStatus { Optimal, Infeasible, Unbounded };

struct RawResult {
    RawStatus status;
    std::vector<Rational> x;      // structural variables
    std::vector<Rational> duals;  // phase-1 duals per internal row (on infeasible)
    long pivots = 0;
};

// Dense integer tableau with a shared denominator `det` (fraction-free
// pivoting): the true tableau entry is a[r][c] / det, det > 0. The pivot
// row is left untouched; every other entry updates as
// (a*piv - f*p)/det, which divides exactly.
template <class B>
class Tableau {
    using Word = typename B::Word;
    using Wide = typename B::Wide;

  public:
    Tableau(const std::vector<IntRow>& rows, const std::vector<BigInt>& min_costs, int num_vars)
        : m_(static_cast<int>(rows.size())), n_struct_(num_vars) {
        // Column layout: structural | slacks (one per LE/GE row) | artificials.
        slack_col_.assign(m_, -1);
        art_col_.assign(m_, -1);
        int next = n_struct_;
        for (int r = 0; r < m_; ++r)
            if (rows[r].rel != Rel::EQ) slack_col_[r] = next++;
        first_art_ = next;
        for (int r = 0; r < m_; ++r)
            if (rows[r].rel != Rel::LE) art_col_[r] = next++;
        n_ = next;
        width_ = n_ + 1; // + rhs
        a_.assign(static_cast<std::size_t>(m_ + 1) * width_, Word(0));
        det_ = Word(1);
        basis_.assign(m_, -1);

        for (int r = 0; r < m_; ++r) {
            for (int j = 0; j < n_struct_; ++j) at(r, j) = B::from_bigint(rows[r].coeffs[j]);
            if (slack_col_[r] >= 0) at(r, slack_col_[r]) = Word(rows[r].rel == Rel::LE ? 1 : -1);
            if (art_col_[r] >= 0) at(r, art_col_[r]) = Word(1);
            at(r, n_) = B::from_bigint(rows[r].rhs);
            basis_[r] = rows[r].rel == Rel::LE ? slack_col_[r] : art_col_[r];
        }

        // Phase-1 reduced costs (minimize the artificial sum), with basic
        // artificials priced out; the rhs cell carries -z.
        for (int r = 0; r < m_; ++r) {
            if (art_col_[r] < 0) continue;
            for (int j = 0; j <= n_; ++j) at(m_, j) = B::narrow(Wide(at(m_, j)) - Wide(at(r, j)));
            at(m_, art_col_[r]) = B::narrow(Wide(at(m_, art_col_[r])) + Wide(det_));
        }

        min_costs_ = min_costs;
        while (static_cast<int>(min_costs_.size()) < n_) min_costs_.push_back(0);
    }

    RawResult run() {
        RawResult res;
        res.pivots = 0;
        if (!optimize(/*exclude_artificials=*/false, res.pivots))
            throw std::logic_error("phase-1 unbounded");
        // Phase-1 optimum is -z = a(m, n)/det; infeasible iff z > 0.
        if (at(m_, n_) != Word(0)) {
            res.status = RawStatus::Infeasible;
            res.duals = phase1_duals();
            return res;
        }
        drive_out_artificials(res.pivots);
        install_phase2_costs();
        if (!optimize(/*exclude_artificials=*/true, res.pivots)) {
            res.status = RawStatus::Unbounded;
            return res;
        }
        res.status = RawStatus::Optimal;
        res.x.assign(n_struct_, Rational(0));
        for (int r = 0; r < m_; ++r) {
            if (basis_[r] >= first_art_ && at(r, n_) != Word(0))
                throw std::logic_error("artificial variable left basic at a nonzero value");
            if (basis_[r] >= 0 && basis_[r] < n_struct_)
                res.x[basis_[r]] = Rational(B::to_bigint(at(r, n_)), B::to_bigint(det_));
        }
        return res;
    }

  private:
    Word& at(int r, int c) { return a_[static_cast<std::size_t>(r) * width_ + c]; }
    const Word& at(int r, int c) const { return a_[static_cast<std::size_t>(r) * width_ + c]; }

    void pivot(int pr, int pc) {
        const Word piv = at(pr, pc);
        const Wide det_w(det_);
        for (int r = 0; r <= m_; ++r) {
            if (r == pr) continue;
            const Word f = at(r, pc);
            Word* row = &a_[static_cast<std::size_t>(r) * width_];
            const Word* prow = &a_[static_cast<std::size_t>(pr) * width_];
            for (int c = 0; c < width_; ++c) {
                Wide v = Wide(row[c]) * Wide(piv) - Wide(f) * Wide(prow[c]);
                Wide q = v / det_w;
                if (q * det_w != v) throw std::logic_error("inexact fraction-free division");
                row[c] = B::narrow(q);
            }
        }
        det_ = piv;
        basis_[pr] = pc;
        // Pivots chosen by the ratio test are positive; drive-out pivots may
        // not be. Negating numerators and denominator together keeps every
        // represented value identical and restores det > 0.
        if (det_ < Word(0)) {
            for (auto& w : a_) w = B::narrow(-Wide(w));
            det_ = B::narrow(-Wide(det_));
        }
    }

    // Entering column for the current cost row, or -1 at optimality.
    // Dantzig with lowest-index ties until degeneracy persists, then Bland.
    int entering(bool exclude_artificials, bool bland) const {
        const int limit = exclude_artificials ? first_art_ : n_;
        int best = -1;
        for (int j = 0; j < limit; ++j) {
            const Word& c = at(m_, j);
            if (c < Word(0)) {
                if (bland) return j;
                if (best < 0 || c < at(m_, best)) best = j;
            }
        }
        return best;
    }

    // Min-ratio row with lowest-basic-variable ties, or -1 (unbounded).
    int leaving(int pc) const {
        int pick = -1;
        for (int r = 0; r < m_; ++r) {
            if (at(r, pc) <= Word(0)) continue;
            if (pick < 0) {
                pick = r;
                continue;
            }
            Wide lhs = Wide(at(r, n_)) * Wide(at(pick, pc));
            Wide rhs = Wide(at(pick, n_)) * Wide(at(r, pc));
            if (lhs < rhs || (lhs == rhs && basis_[r] < basis_[pick])) pick = r;
        }
        return pick;
    }

    bool optimize(bool exclude_artificials, long& pivots) {
        bool bland = false;
        int degenerate_run = 0;
        while (true) {
            int pc = entering(exclude_artificials, bland);
            if (pc < 0) return true;
            int pr = leaving(pc);
            if (pr < 0) return false;
            bool degenerate = at(pr, n_) == Word(0);
            pivot(pr, pc);
            ++pivots;
            if (pivots > 2000000) throw std::logic_error("pivot budget exceeded");
            if (degenerate) {
                if (++degenerate_run >= 40) bland = true;
            } else {
                degenerate_run = 0;
                bland = false;
            }
        }
    }

    // Pivot remaining basic artificials (all at value zero) onto
    // non-artificial columns where possible. A row with no such column is
    // identically zero outside its artificial and never constrains again.
    void drive_out_artificials(long& pivots) {
        for (int r = 0; r < m_; ++r) {
            if (basis_[r] < first_art_) continue; // artificials can surface in any row

            for (int j = 0; j < first_art_; ++j) {
                if (at(r, j) != Word(0)) {
                    pivot(r, j);
                    ++pivots;
                    break;
                }
            }
        }
    }

    void install_phase2_costs() {
        // cost(j) = c_j * det - sum_r c_basis(r) * a(r, j); rhs carries -z.
        for (int j = 0; j <= n_; ++j) {
            Wide acc = 0;
            for (int r = 0; r < m_; ++r) {
                const BigInt& cb = min_costs_[basis_[r]];
                if (cb == 0) continue;
                acc += Wide(B::from_bigint(cb)) * Wide(at(r, j));
            }
            Wide value = (j < n_ ? Wide(B::from_bigint(min_costs_[j])) * Wide(det_) : Wide(0)) - acc;
            at(m_, j) = B::narrow(value);
        }
    }

    // Phase-1 dual multipliers per internal row, recovered from the reduced
    // costs of that row's own unit columns.
    std::vector<Rational> phase1_duals() const {
        std::vector<Rational> y(m_, Rational(0));
        for (int r = 0; r < m_; ++r) {
            if (art_col_[r] >= 0) {
                // artificial column: c_bar = 1 - y_r.
                Rational cbar(B::to_bigint(at(m_, art_col_[r])), B::to_bigint(det_));
                y[r] = Rational(1) - cbar;
            } else {
                // LE slack column: c_bar = -y_r.
                Rational cbar(B::to_bigint(at(m_, slack_col_[r])), B::to_bigint(det_));
                y[r] = -cbar;
            }
        }
        return y;
    }

    int m_;
    int n_struct_;
    int n_ = 0;
    int width_ = 0;
    int first_art_ = 0;
    std::vector<Word> a_;
    Word det_;
    std::vector<int> basis_;
    std::vector<int> slack_col_;
    std::vector<int> art_col_;
    std::vector<BigInt> min_costs_;
};

Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    Rational acc(0);
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0 && b[i] != 0) acc += a[i] * b[i];
    return acc;
}

void verify_witness(const Problem& p, const std::vector<Rational>& x) {
    for (const auto& v : x)
        if (v < 0) throw std::logic_error("solver returned a negative witness entry");
    for (const auto& row : p.rows) {
        Rational lhs = dot(row.coeffs, x);
        bool ok = row.rel == Rel::LE ? lhs <= row.rhs
                : row.rel == Rel::GE ? lhs >= row.rhs
                                     : lhs == row.rhs;
        if (!ok) throw std::logic_error("solver witness violates a constraint");
    }
}

void verify_farkas(const Problem& p, const std::vector<Rational>& y) {
    Rational rhs_combo(0);
    std::vector<Rational> coeff_combo(p.num_vars, Rational(0));
    for (std::size_t r = 0; r < p.rows.size(); ++r) {
        const auto& row = p.rows[r];
        if (row.rel == Rel::LE && y[r] < 0)
            throw std::logic_error("Farkas multiplier sign violation on LE row");
        if (row.rel == Rel::GE && y[r] > 0)
            throw std::logic_error("Farkas multiplier sign violation on GE row");
        if (y[r] == 0) continue;
        for (int j = 0; j < p.num_vars; ++j) coeff_combo[j] += y[r] * row.coeffs[j];
        rhs_combo += y[r] * row.rhs;
    }
    for (const auto& c : coeff_combo)
        if (c < 0) throw std::logic_error("Farkas combination has a negative coefficient");
    if (rhs_combo >= 0) throw std::logic_error("Farkas combination bound is not negative");
}

template <class B>
RawResult run_backend(const std::vector<IntRow>& rows, const std::vector<BigInt>& min_costs,
                      int num_vars) {
    Tableau<B> t(rows, min_costs, num_vars);
    return t.run();
}

} // namespace

Solution solve(const Problem& p) {
    if (static_cast<int>(p.objective.size()) != p.num_vars)
        throw std::invalid_argument("objective width does not match variable count");
    std::vector<IntRow> rows = scale_rows(p);

    // Integer minimization costs: maximize c.x == minimize (-c).x, scaled
    // by the lcm of the objective denominators.
    BigInt obj_scale = 1;
    for (const auto& c : p.objective) obj_scale = lcm(obj_scale, denominator(c));
    std::vector<BigInt> min_costs;
    min_costs.reserve(p.num_vars);
    for (const auto& c : p.objective)
        min_costs.push_back(BigInt(-numerator(c) * (obj_scale / denominator(c))));

    RawResult raw;
    try {
        raw = run_backend<I64Backend>(rows, min_costs, p.num_vars);
    } catch (const TableauOverflow&) {
        raw = run_backend<BigBackend>(rows, min_costs, p.num_vars);
    }

    Solution sol;
    sol.pivots = raw.pivots;
    if (raw.status == RawStatus::Infeasible) {
        sol.status = SolveStatus::Infeasible;
        // Internal duals y satisfy y.A <= 0, y.b > 0; the published
        // certificate is -y mapped back through row scaling and flips.
        sol.farkas.assign(p.rows.size(), Rational(0));
        for (std::size_t r = 0; r < p.rows.size(); ++r) {
            Rational v = -raw.duals[r] * Rational(rows[r].scale);
            sol.farkas[r] = rows[r].flipped ? -v : v;
        }
        verify_farkas(p, sol.farkas);
        return sol;
    }
    if (raw.status == RawStatus::Unbounded) {
        sol.status = SolveStatus::Unbounded;
        return sol;
    }
    sol.status = SolveStatus::Optimal;
    sol.x = std::move(raw.x);
    verify_witness(p, sol.x);
    sol.objective = dot(p.objective, sol.x);
    return sol;
}

std::string dump_problem(const Problem& p) {
    std::ostringstream out;
    out << "maximize";
    bool first = true;
    for (int j = 0; j < p.num_vars; ++j) {
        if (p.objective[j] == 0) continue;
        out << (first ? " " : " + ") << rat_pretty(p.objective[j]) << "*x" << j;
        first = false;
    }
    if (first) out << " 0";
    out << "\nsubject to\n";
    for (const auto& row : p.rows) {
        bool lead = true;
        for (int j = 0; j < p.num_vars; ++j) {
            if (row.coeffs[j] == 0) continue;
            out << (lead ? "  " : " + ") << rat_pretty(row.coeffs[j]) << "*x" << j;
            lead = false;
        }
        if (lead) out << "  0";
        out << (row.rel == Rel::LE ? " <= " : row.rel == Rel::GE ? " >= " : " = ")
            << rat_pretty(row.rhs) << "\n";
    }
    out << "  x >= 0\n";
    return out.str();
}

} // namespace srrkit::lp
