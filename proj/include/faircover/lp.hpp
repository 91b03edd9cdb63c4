#pragma once

#include <string>
#include <vector>

#include "faircover/rational.hpp"

namespace faircover {

enum class Relation { LessEq, GreaterEq, Equal };
enum class Sense { Minimize, Maximize };

struct LpRow {
    std::vector<Rational> coeffs;  // one per variable
    Relation rel = Relation::LessEq;
    Rational rhs;
};

/// Linear program over finitely box-bounded variables. Row widths must equal
/// the variable count and lower <= upper per variable.
struct LinearProgram {
    int num_vars = 0;
    std::vector<Rational> lower;
    std::vector<Rational> upper;
    std::vector<LpRow> rows;
    std::vector<Rational> objective;
    Sense sense = Sense::Minimize;

    void validate() const;
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

/// Constraints active at a solution: rows at exact equality plus variable
/// bounds attained exactly. Membership is exact rational equality.
struct TightSet {
    std::vector<int> rows;          // 0-based row indices
    std::vector<int> lower_bounds;  // 0-based variable indices at lower bound
    std::vector<int> upper_bounds;  // 0-based variable indices at upper bound
};

struct LpSolution {
    LpStatus status = LpStatus::Infeasible;
    std::vector<Rational> values;
    Rational objective;
    TightSet tight;

    int count_fractional_unit() const;  // variables strictly between 0 and 1
};

/// Exact-rational bounded-variable simplex. When the program is feasible and
/// bounded the result is an optimal basic feasible solution: the tight rows
/// and active bounds span the full variable space. Infeasibility is certified
/// by a positive phase-1 optimum; unboundedness by an unblocked ray. Never
/// returns silently wrong statuses and never uses tolerances.
LpSolution solve_to_optimal_basic(const LinearProgram& lp);

/// True iff the tight system of `sol` has rank equal to the variable count
/// (exact Gaussian elimination). Throws if `sol` is not feasible for `lp`.
bool verify_extreme_point(const LinearProgram& lp, const LpSolution& sol);

/// Recomputes feasibility of a value vector from scratch.
bool is_feasible_solution(const LinearProgram& lp, const std::vector<Rational>& values);

/// Recomputes the tight set of a feasible point from scratch.
TightSet tight_set_of(const LinearProgram& lp, const std::vector<Rational>& values);

/// Plain-text dump for reproduction reports: one constraint per line,
/// rationals as "p/q".
std::string dump_lp(const LinearProgram& lp);

}  // namespace faircover
