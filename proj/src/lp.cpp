#include "faircover/lp.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

#include "faircover/errors.hpp"

namespace faircover {

void LinearProgram::validate() const {
    if (num_vars < 0) throw InputError("lp: negative variable count");
    const auto nv = static_cast<size_t>(num_vars);
    if (lower.size() != nv || upper.size() != nv)
        throw InputError("lp: bound vector length does not match variable count");
    if (objective.size() != nv)
        throw InputError("lp: objective length does not match variable count");
    for (size_t j = 0; j < nv; ++j)
        if (lower[j] > upper[j]) throw InputError("lp: lower bound exceeds upper bound");
    for (const LpRow& row : rows)
        if (row.coeffs.size() != nv)
            throw InputError("lp: row width does not match variable count");
}

int LpSolution::count_fractional_unit() const {
    int count = 0;
    for (const Rational& v : values)
        if (!v.is_integer()) ++count;
    return count;
}

namespace {

enum ColStatus : char { kBasic, kAtLower, kAtUpper };

struct ColBounds {
    bool has_lo = false;
    bool has_hi = false;
    Rational lo;
    Rational hi;

    bool fixed() const { return has_lo && has_hi && lo == hi; }
};

/// Bounded-variable primal simplex on a dense rational tableau.
///
/// Rows are stored as B^-1 * A for the current basis B; current variable
/// values (not the transformed right-hand side) are tracked explicitly, so a
/// pivot both updates values along the entering direction and eliminates the
/// pivot column. Entering-variable pricing is Dantzig by default and falls
/// back to Bland's rule after a run of degenerate pivots, which guarantees
/// termination.
class Simplex {
public:
    explicit Simplex(const LinearProgram& lp, Sense sense) : nv_(lp.num_vars), nr_(static_cast<int>(lp.rows.size())) {
        ncols_ = nv_ + nr_;
        bounds_.resize(static_cast<size_t>(ncols_));
        for (int j = 0; j < nv_; ++j) {
            auto& b = bounds_[static_cast<size_t>(j)];
            b.has_lo = b.has_hi = true;
            b.lo = lp.lower[static_cast<size_t>(j)];
            b.hi = lp.upper[static_cast<size_t>(j)];
        }
        for (int i = 0; i < nr_; ++i) {
            auto& b = bounds_[static_cast<size_t>(nv_ + i)];
            switch (lp.rows[static_cast<size_t>(i)].rel) {
                case Relation::LessEq: b.has_lo = true; break;                  // s in [0, inf)
                case Relation::GreaterEq: b.has_hi = true; break;               // s in (-inf, 0]
                case Relation::Equal: b.has_lo = b.has_hi = true; break;        // s = 0
            }
        }
        tab_.assign(static_cast<size_t>(nr_), std::vector<Rational>(static_cast<size_t>(ncols_)));
        for (int i = 0; i < nr_; ++i) {
            const LpRow& row = lp.rows[static_cast<size_t>(i)];
            for (int j = 0; j < nv_; ++j) tab_[static_cast<size_t>(i)][static_cast<size_t>(j)] = row.coeffs[static_cast<size_t>(j)];
            tab_[static_cast<size_t>(i)][static_cast<size_t>(nv_ + i)] = Rational(1);
        }
        rhs_.resize(static_cast<size_t>(nr_));
        for (int i = 0; i < nr_; ++i) rhs_[static_cast<size_t>(i)] = lp.rows[static_cast<size_t>(i)].rhs;

        objective_.assign(static_cast<size_t>(ncols_), Rational(0));
        for (int j = 0; j < nv_; ++j) {
            objective_[static_cast<size_t>(j)] = lp.objective[static_cast<size_t>(j)];
            if (sense == Sense::Maximize) objective_[static_cast<size_t>(j)].negate();
        }
    }

    LpStatus solve() {
        pick_initial_point();
        if (!start_feasible_ && !run_phase_one()) return LpStatus::Infeasible;
        cost_ = objective_;
        cost_.resize(static_cast<size_t>(ncols_), Rational(0));
        recompute_reduced_costs();
        return iterate() ? LpStatus::Optimal : LpStatus::Unbounded;
    }

    std::vector<Rational> structural_values() const {
        return {xval_.begin(), xval_.begin() + nv_};
    }

private:
    // Places every structural variable at one of its bounds (whichever of
    // all-lower / all-upper leaves fewer rows violated) and makes slacks basic.
    void pick_initial_point() {
        xval_.assign(static_cast<size_t>(ncols_), Rational(0));
        status_.assign(static_cast<size_t>(ncols_), kAtLower);
        int best_violations = -1;
        char best_side = kAtLower;
        for (char side : {kAtLower, kAtUpper}) {
            int violations = 0;
            for (int i = 0; i < nr_; ++i) {
                Rational act(0);
                for (int j = 0; j < nv_; ++j) {
                    const Rational& a = tab_[static_cast<size_t>(i)][static_cast<size_t>(j)];
                    if (a.is_zero()) continue;
                    const auto& b = bounds_[static_cast<size_t>(j)];
                    act.sub_mul(a, side == kAtLower ? b.lo : b.hi);
                }
                act.negate();  // act = sum a_ij x_j
                Rational slack = rhs_[static_cast<size_t>(i)] - act;
                if (!slack_in_bounds(i, slack)) ++violations;
            }
            if (best_violations < 0 || violations < best_violations) {
                best_violations = violations;
                best_side = side;
            }
        }
        for (int j = 0; j < nv_; ++j) {
            status_[static_cast<size_t>(j)] = best_side;
            const auto& b = bounds_[static_cast<size_t>(j)];
            xval_[static_cast<size_t>(j)] = best_side == kAtLower ? b.lo : b.hi;
        }
        basis_.assign(static_cast<size_t>(nr_), -1);
        for (int i = 0; i < nr_; ++i) {
            Rational act(0);
            for (int j = 0; j < nv_; ++j) {
                const Rational& a = tab_[static_cast<size_t>(i)][static_cast<size_t>(j)];
                if (!a.is_zero()) act.sub_mul(a, xval_[static_cast<size_t>(j)]);
            }
            act.negate();
            const int slack = nv_ + i;
            basis_[static_cast<size_t>(i)] = slack;
            status_[static_cast<size_t>(slack)] = kBasic;
            xval_[static_cast<size_t>(slack)] = rhs_[static_cast<size_t>(i)] - act;
        }
        start_feasible_ = true;
        for (int i = 0; i < nr_; ++i)
            if (!slack_in_bounds(i, xval_[static_cast<size_t>(nv_ + i)])) { start_feasible_ = false; break; }
    }

    bool slack_in_bounds(int row, const Rational& v) const {
        const auto& b = bounds_[static_cast<size_t>(nv_ + row)];
        if (b.has_lo && v < b.lo) return false;
        if (b.has_hi && v > b.hi) return false;
        return true;
    }

    // Adds one artificial column per violated row and minimizes their sum.
    // Returns false (infeasible) when the phase-1 optimum stays positive.
    bool run_phase_one() {
        first_artificial_ = ncols_;
        for (int i = 0; i < nr_; ++i) {
            const int slack = nv_ + i;
            Rational v = xval_[static_cast<size_t>(slack)];
            if (slack_in_bounds(i, v)) continue;
            // Clamp the slack to its nearest bound (always 0 by construction)
            // and hand the residual to a fresh artificial variable.
            const auto& sb = bounds_[static_cast<size_t>(slack)];
            Rational clamp = (sb.has_lo && v < sb.lo) ? sb.lo : sb.hi;
            Rational residual = v - clamp;
            xval_[static_cast<size_t>(slack)] = clamp;
            status_[static_cast<size_t>(slack)] = clamp == sb.lo && sb.has_lo ? kAtLower : kAtUpper;

            const int art = ncols_++;
            for (auto& row : tab_) row.emplace_back(0);
            bounds_.push_back(ColBounds{});
            bounds_.back().has_lo = true;  // [0, inf)
            status_.push_back(kBasic);
            const bool negative = residual.sign() < 0;
            tab_[static_cast<size_t>(i)][static_cast<size_t>(art)] = Rational(negative ? -1 : 1);
            if (negative) residual.negate();
            xval_.push_back(residual);
            basis_[static_cast<size_t>(i)] = art;
            artificial_row_.push_back(i);
        }
        // Rows whose basic column is a negative artificial are negated so the
        // basis stays an identity in tableau form.
        for (size_t k = 0; k < artificial_row_.size(); ++k) {
            const int i = artificial_row_[k];
            const int art = basis_[static_cast<size_t>(i)];
            if (tab_[static_cast<size_t>(i)][static_cast<size_t>(art)].sign() < 0)
                for (auto& cell : tab_[static_cast<size_t>(i)]) cell.negate();
        }
        cost_.assign(static_cast<size_t>(ncols_), Rational(0));
        for (int a = first_artificial_; a < ncols_; ++a) cost_[static_cast<size_t>(a)] = Rational(1);
        recompute_reduced_costs();
        if (!iterate()) throw ContractViolation("phase-1 objective cannot be unbounded");

        Rational infeasibility(0);
        for (int a = first_artificial_; a < ncols_; ++a) infeasibility += xval_[static_cast<size_t>(a)];
        if (infeasibility.sign() > 0) return false;

        // Pivot leftover artificials out of the basis where possible; rows
        // that admit no pivot are redundant and keep their artificial frozen.
        for (int i = 0; i < nr_; ++i) {
            if (basis_[static_cast<size_t>(i)] < first_artificial_) continue;
            int entering = -1;
            for (int j = 0; j < first_artificial_; ++j) {
                if (status_[static_cast<size_t>(j)] == kBasic) continue;
                if (!tab_[static_cast<size_t>(i)][static_cast<size_t>(j)].is_zero()) { entering = j; break; }
            }
            if (entering >= 0) degenerate_swap(i, entering);
        }
        for (int a = first_artificial_; a < ncols_; ++a) {
            auto& b = bounds_[static_cast<size_t>(a)];
            b.has_lo = b.has_hi = true;
            b.lo = b.hi = Rational(0);
        }
        return true;
    }

    void recompute_reduced_costs() {
        dcost_ = cost_;
        for (int i = 0; i < nr_; ++i) {
            const Rational& cb = cost_[static_cast<size_t>(basis_[static_cast<size_t>(i)])];
            if (cb.is_zero()) continue;
            const auto& row = tab_[static_cast<size_t>(i)];
            for (int j = 0; j < ncols_; ++j)
                if (!row[static_cast<size_t>(j)].is_zero()) dcost_[static_cast<size_t>(j)].sub_mul(cb, row[static_cast<size_t>(j)]);
        }
    }

    bool eligible(int j) const {
        if (status_[static_cast<size_t>(j)] == kBasic || bounds_[static_cast<size_t>(j)].fixed()) return false;
        const int s = dcost_[static_cast<size_t>(j)].sign();
        return status_[static_cast<size_t>(j)] == kAtLower ? s < 0 : s > 0;
    }

    int choose_entering(bool bland) const {
        int best = -1;
        for (int j = 0; j < ncols_; ++j) {
            if (!eligible(j)) continue;
            if (bland) return j;
            if (best < 0) { best = j; continue; }
            Rational a = dcost_[static_cast<size_t>(j)];
            Rational b = dcost_[static_cast<size_t>(best)];
            if (a.sign() < 0) a.negate();
            if (b.sign() < 0) b.negate();
            if (a > b) best = j;
        }
        return best;
    }

    // Runs pivots until optimal (true) or unbounded (false).
    bool iterate() {
        constexpr int kStallLimit = 64;
        constexpr long kPivotCap = 50'000'000;
        int stall = 0;
        bool bland = false;
        for (long pivots = 0;; ++pivots) {
            if (pivots > kPivotCap) throw ContractViolation("simplex pivot cap exceeded");
            const int e = choose_entering(bland);
            if (e < 0) return true;
            const int dir = status_[static_cast<size_t>(e)] == kAtLower ? 1 : -1;

            // Ratio test: tightest basic-variable bound hit along the move.
            std::optional<Rational> best_t;
            int leave_row = -1;
            bool leave_at_lower = false;
            for (int i = 0; i < nr_; ++i) {
                const Rational& a = tab_[static_cast<size_t>(i)][static_cast<size_t>(e)];
                if (a.is_zero()) continue;
                Rational g = a;
                if (dir < 0) g.negate();
                const int b = basis_[static_cast<size_t>(i)];
                const auto& bb = bounds_[static_cast<size_t>(b)];
                Rational t;
                bool at_lower;
                if (g.sign() > 0) {
                    if (!bb.has_lo) continue;
                    t = (xval_[static_cast<size_t>(b)] - bb.lo) / g;
                    at_lower = true;
                } else {
                    if (!bb.has_hi) continue;
                    g.negate();
                    t = (bb.hi - xval_[static_cast<size_t>(b)]) / g;
                    at_lower = false;
                }
                if (!best_t || t < *best_t ||
                    (t == *best_t && basis_[static_cast<size_t>(i)] < basis_[static_cast<size_t>(leave_row)])) {
                    best_t = std::move(t);
                    leave_row = i;
                    leave_at_lower = at_lower;
                }
            }
            const auto& eb = bounds_[static_cast<size_t>(e)];
            if (eb.has_lo && eb.has_hi) {
                Rational flip = eb.hi - eb.lo;
                if (!best_t || flip < *best_t) {
                    apply_step(e, dir, flip);
                    status_[static_cast<size_t>(e)] = status_[static_cast<size_t>(e)] == kAtLower ? kAtUpper : kAtLower;
                    stall = 0;
                    bland = false;
                    continue;
                }
            }
            if (!best_t) return false;  // unbounded ray

            const bool degenerate = best_t->is_zero();
            apply_step(e, dir, *best_t);
            const int leaving = basis_[static_cast<size_t>(leave_row)];
            status_[static_cast<size_t>(leaving)] = leave_at_lower ? kAtLower : kAtUpper;
            pivot(leave_row, e);
            if (degenerate) {
                if (++stall > kStallLimit) bland = true;
            } else {
                stall = 0;
                bland = false;
            }
        }
    }

    // Moves the entering column by dir*t and propagates to basic values.
    void apply_step(int e, int dir, const Rational& t) {
        if (t.is_zero()) return;
        Rational step = t;
        if (dir < 0) step.negate();
        for (int i = 0; i < nr_; ++i) {
            const Rational& a = tab_[static_cast<size_t>(i)][static_cast<size_t>(e)];
            if (a.is_zero()) continue;
            xval_[static_cast<size_t>(basis_[static_cast<size_t>(i)])].sub_mul(a, step);
        }
        xval_[static_cast<size_t>(e)] += step;
    }

    // Basis exchange at (row, entering); values must already be consistent.
    void pivot(int row, int entering) {
        auto& prow = tab_[static_cast<size_t>(row)];
        const Rational piv = prow[static_cast<size_t>(entering)];
        if (piv.is_zero()) throw ContractViolation("zero pivot");
        if (!(piv == Rational(1)))
            for (auto& cell : prow)
                if (!cell.is_zero()) cell /= piv;
        for (int i = 0; i < nr_; ++i) {
            if (i == row) continue;
            Rational f = tab_[static_cast<size_t>(i)][static_cast<size_t>(entering)];
            if (f.is_zero()) continue;
            auto& irow = tab_[static_cast<size_t>(i)];
            for (int j = 0; j < ncols_; ++j)
                if (!prow[static_cast<size_t>(j)].is_zero()) irow[static_cast<size_t>(j)].sub_mul(f, prow[static_cast<size_t>(j)]);
        }
        Rational f = dcost_[static_cast<size_t>(entering)];
        if (!f.is_zero())
            for (int j = 0; j < ncols_; ++j)
                if (!prow[static_cast<size_t>(j)].is_zero()) dcost_[static_cast<size_t>(j)].sub_mul(f, prow[static_cast<size_t>(j)]);
        basis_[static_cast<size_t>(row)] = entering;
        status_[static_cast<size_t>(entering)] = kBasic;
    }

    // Swaps a zero-valued basic artificial for a nonbasic column, no movement.
    void degenerate_swap(int row, int entering) {
        const int leaving = basis_[static_cast<size_t>(row)];
        status_[static_cast<size_t>(leaving)] = kAtLower;
        xval_[static_cast<size_t>(leaving)] = Rational(0);
        pivot(row, entering);
        // The entering column keeps its bound value; it is now basic there.
    }

    int nv_;
    int nr_;
    int ncols_;
    std::vector<std::vector<Rational>> tab_;
    std::vector<Rational> rhs_;
    std::vector<ColBounds> bounds_;
    std::vector<Rational> xval_;
    std::vector<char> status_;
    std::vector<int> basis_;
    std::vector<Rational> objective_;  // sense-adjusted (always minimized)
    std::vector<Rational> cost_;       // current-phase costs
    std::vector<Rational> dcost_;
    std::vector<int> artificial_row_;
    int first_artificial_ = -1;
    bool start_feasible_ = false;
};

}  // namespace

bool is_feasible_solution(const LinearProgram& lp, const std::vector<Rational>& values) {
    if (static_cast<int>(values.size()) != lp.num_vars)
        throw InputError("solution length does not match variable count");
    for (int j = 0; j < lp.num_vars; ++j)
        if (values[static_cast<size_t>(j)] < lp.lower[static_cast<size_t>(j)] ||
            values[static_cast<size_t>(j)] > lp.upper[static_cast<size_t>(j)])
            return false;
    for (const LpRow& row : lp.rows) {
        Rational act(0);
        for (int j = 0; j < lp.num_vars; ++j)
            if (!row.coeffs[static_cast<size_t>(j)].is_zero())
                act.sub_mul(row.coeffs[static_cast<size_t>(j)], -values[static_cast<size_t>(j)]);
        switch (row.rel) {
            case Relation::LessEq: if (act > row.rhs) return false; break;
            case Relation::GreaterEq: if (act < row.rhs) return false; break;
            case Relation::Equal: if (!(act == row.rhs)) return false; break;
        }
    }
    return true;
}

TightSet tight_set_of(const LinearProgram& lp, const std::vector<Rational>& values) {
    TightSet tight;
    for (size_t i = 0; i < lp.rows.size(); ++i) {
        const LpRow& row = lp.rows[i];
        Rational act(0);
        for (int j = 0; j < lp.num_vars; ++j)
            if (!row.coeffs[static_cast<size_t>(j)].is_zero())
                act.sub_mul(row.coeffs[static_cast<size_t>(j)], -values[static_cast<size_t>(j)]);
        if (act == row.rhs) tight.rows.push_back(static_cast<int>(i));
    }
    for (int j = 0; j < lp.num_vars; ++j) {
        if (values[static_cast<size_t>(j)] == lp.lower[static_cast<size_t>(j)]) tight.lower_bounds.push_back(j);
        if (values[static_cast<size_t>(j)] == lp.upper[static_cast<size_t>(j)]) tight.upper_bounds.push_back(j);
    }
    return tight;
}

LpSolution solve_to_optimal_basic(const LinearProgram& lp) {
    lp.validate();
    Simplex simplex(lp, lp.sense);
    LpSolution sol;
    sol.status = simplex.solve();
    if (sol.status != LpStatus::Optimal) return sol;
    sol.values = simplex.structural_values();
    sol.objective = Rational(0);
    for (int j = 0; j < lp.num_vars; ++j)
        if (!lp.objective[static_cast<size_t>(j)].is_zero())
            sol.objective.sub_mul(lp.objective[static_cast<size_t>(j)], -sol.values[static_cast<size_t>(j)]);
    sol.tight = tight_set_of(lp, sol.values);
    return sol;
}

bool verify_extreme_point(const LinearProgram& lp, const LpSolution& sol) {
    lp.validate();
    if (!is_feasible_solution(lp, sol.values))
        throw InputError("verify_extreme_point: solution is not feasible");
    const TightSet tight = tight_set_of(lp, sol.values);
    std::vector<std::vector<Rational>> mat;
    for (int i : tight.rows) mat.push_back(lp.rows[static_cast<size_t>(i)].coeffs);
    auto unit = [&](int j) {
        std::vector<Rational> row(static_cast<size_t>(lp.num_vars), Rational(0));
        row[static_cast<size_t>(j)] = Rational(1);
        return row;
    };
    for (int j : tight.lower_bounds) mat.push_back(unit(j));
    for (int j : tight.upper_bounds) mat.push_back(unit(j));

    // Exact rank by Gaussian elimination.
    int rank = 0;
    const int n = lp.num_vars;
    for (int col = 0; col < n && rank < static_cast<int>(mat.size()); ++col) {
        int pivot = -1;
        for (int r = rank; r < static_cast<int>(mat.size()); ++r)
            if (!mat[static_cast<size_t>(r)][static_cast<size_t>(col)].is_zero()) { pivot = r; break; }
        if (pivot < 0) continue;
        std::swap(mat[static_cast<size_t>(rank)], mat[static_cast<size_t>(pivot)]);
        const Rational p = mat[static_cast<size_t>(rank)][static_cast<size_t>(col)];
        for (int r = rank + 1; r < static_cast<int>(mat.size()); ++r) {
            Rational f = mat[static_cast<size_t>(r)][static_cast<size_t>(col)] / p;
            if (f.is_zero()) continue;
            for (int c = col; c < n; ++c)
                mat[static_cast<size_t>(r)][static_cast<size_t>(c)].sub_mul(f, mat[static_cast<size_t>(rank)][static_cast<size_t>(c)]);
        }
        ++rank;
    }
    return rank == lp.num_vars;
}

std::string dump_lp(const LinearProgram& lp) {
    std::ostringstream os;
    os << (lp.sense == Sense::Minimize ? "minimize" : "maximize");
    for (const Rational& c : lp.objective) os << ' ' << c;
    os << '\n';
    for (const LpRow& row : lp.rows) {
        for (const Rational& a : row.coeffs) os << a << ' ';
        switch (row.rel) {
            case Relation::LessEq: os << "<="; break;
            case Relation::GreaterEq: os << ">="; break;
            case Relation::Equal: os << "="; break;
        }
        os << ' ' << row.rhs << '\n';
    }
    for (int j = 0; j < lp.num_vars; ++j)
        os << lp.lower[static_cast<size_t>(j)] << " <= x" << j << " <= " << lp.upper[static_cast<size_t>(j)] << '\n';
    return os.str();
}

}  // namespace faircover
