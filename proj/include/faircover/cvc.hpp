#pragma once

#include <optional>
#include <vector>

#include "faircover/graph.hpp"
#include "faircover/lp.hpp"

namespace faircover {

/// Index bookkeeping between a CvcInstance and its LP relaxation.
struct CvcLpMapping {
    std::vector<int> edge_var;       // LP variable per edge (edge id - 1 -> var)
    std::vector<int> vertex_var;     // LP variable per vertex
    std::vector<int> coverage_row;   // LP row per color
    std::vector<int> sanity_row;     // LP row per edge
};

/// Relaxation: minimize the vertex mass subject to per-color coverage
/// (sum of edge variables over a color class >= target) and per-edge sanity
/// (endpoint vertex mass >= edge variable), all variables in [0, 1].
std::pair<LinearProgram, CvcLpMapping> build_cvc_lp(const CvcInstance& inst);

/// LP solution reshaped so each edge draws its whole fractional coverage from
/// a single endpoint. Doubling the vertex mass pays for the separation, so
/// the cost at most doubles and all rows stay satisfied.
struct SeparatedSolution {
    std::vector<Rational> vertex_value;  // per vertex, min(1, 2 * input value)
    std::vector<Rational> edge_value;    // per edge, equals vertex_value[assignee]
    std::vector<VertexId> assignee;      // per edge: the endpoint it is charged to

    Rational cost() const;
};

/// Requires `sol` optimal & feasible for the LP of `mapping`. Each edge is
/// assigned to its larger-valued endpoint (tie: lower id; pendant: its only
/// endpoint).
SeparatedSolution separate(const LpSolution& sol, const CvcLpMapping& mapping,
                           const CvcInstance& inst);

/// Data of the few-constraint second-stage LP over per-vertex selectors.
struct SparseLpData {
    std::vector<std::vector<int>> assigned_count;  // [color-1][vertex-1]: edges of
                                                   // that color assigned to the vertex
    Rational budget;                               // total separated vertex mass
    CoverageRequirements requirements;
};

/// Second stage: maximize color-1 assigned coverage subject to the coverage
/// rows of colors 2..w and a single budget row; one [0,1] variable per vertex.
std::pair<LinearProgram, SparseLpData> build_sparse_lp(const SeparatedSolution& sep,
                                                       const CvcInstance& inst);

/// Rounds every nonzero coordinate of an extreme-point solution up to 1.
/// Throws ContractViolation if more than w coordinates are fractional (the
/// extreme-point solver contract was broken).
struct RoundedSelection {
    std::vector<int> selector;  // 0/1 per vertex
    VertexSet chosen;
};
RoundedSelection round_sparse(const LpSolution& sparse_sol, const SparseLpData& data);

/// LP-rounding pipeline; feasible output of size <= 2*OPT + w, or infeasible
/// when some color class is smaller than its target.
std::optional<VertexSet> solve_additive(const CvcInstance& inst);

/// (2+eps)-approximation: exhaustive search over solutions of size up to
/// ceil(w/eps), falling back to the additive pipeline. Output of size
/// <= (2+eps)*OPT, and exactly OPT whenever OPT <= ceil(w/eps).
std::optional<VertexSet> solve_eps(const CvcInstance& inst, const Rational& eps);

}  // namespace faircover
