#include "faircover/cvc.hpp"

#include <algorithm>
#include <string>

namespace faircover {

namespace {

Rational clamped_double(const Rational& v) {
    Rational two_v = v + v;
    return two_v > Rational(1) ? Rational(1) : two_v;
}

}  // namespace

std::pair<LinearProgram, CvcLpMapping> build_cvc_lp(const CvcInstance& inst) {
    const int m = inst.num_edges();
    const int n = inst.num_vertices();
    CvcLpMapping map;
    map.edge_var.resize(static_cast<size_t>(m));
    map.vertex_var.resize(static_cast<size_t>(n));
    for (int j = 0; j < m; ++j) map.edge_var[static_cast<size_t>(j)] = j;
    for (int i = 0; i < n; ++i) map.vertex_var[static_cast<size_t>(i)] = m + i;

    LinearProgram lp;
    lp.num_vars = m + n;
    lp.lower.assign(static_cast<size_t>(lp.num_vars), Rational(0));
    lp.upper.assign(static_cast<size_t>(lp.num_vars), Rational(1));
    lp.objective.assign(static_cast<size_t>(lp.num_vars), Rational(0));
    for (int i = 0; i < n; ++i) lp.objective[static_cast<size_t>(m + i)] = Rational(1);
    lp.sense = Sense::Minimize;

    for (ColorId c = 1; c <= inst.num_colors(); ++c) {
        LpRow row;
        row.coeffs.assign(static_cast<size_t>(lp.num_vars), Rational(0));
        for (int j = 0; j < m; ++j)
            if (inst.edges()[static_cast<size_t>(j)].color == c)
                row.coeffs[static_cast<size_t>(j)] = Rational(1);
        row.rel = Relation::GreaterEq;
        row.rhs = Rational(inst.requirements().target(c));
        map.coverage_row.push_back(static_cast<int>(lp.rows.size()));
        lp.rows.push_back(std::move(row));
    }
    for (int j = 0; j < m; ++j) {
        const ColoredEdge& e = inst.edges()[static_cast<size_t>(j)];
        LpRow row;
        row.coeffs.assign(static_cast<size_t>(lp.num_vars), Rational(0));
        row.coeffs[static_cast<size_t>(m + e.u - 1)] += Rational(1);
        if (e.v) row.coeffs[static_cast<size_t>(m + *e.v - 1)] += Rational(1);
        row.coeffs[static_cast<size_t>(j)] = Rational(-1);
        row.rel = Relation::GreaterEq;
        row.rhs = Rational(0);
        map.sanity_row.push_back(static_cast<int>(lp.rows.size()));
        lp.rows.push_back(std::move(row));
    }
    return {std::move(lp), std::move(map)};
}

Rational SeparatedSolution::cost() const {
    Rational total(0);
    for (const Rational& y : vertex_value) total += y;
    return total;
}

SeparatedSolution separate(const LpSolution& sol, const CvcLpMapping& mapping,
                           const CvcInstance& inst) {
    if (sol.status != LpStatus::Optimal)
        throw ContractViolation("separate: input solution is not optimal");
    const int m = inst.num_edges();
    const int n = inst.num_vertices();

    SeparatedSolution sep;
    sep.vertex_value.resize(static_cast<size_t>(n));
    sep.edge_value.resize(static_cast<size_t>(m));
    sep.assignee.resize(static_cast<size_t>(m));

    auto y_of = [&](VertexId v) -> const Rational& {
        return sol.values.at(static_cast<size_t>(mapping.vertex_var.at(static_cast<size_t>(v - 1))));
    };
    for (int i = 1; i <= n; ++i)
        sep.vertex_value[static_cast<size_t>(i - 1)] = clamped_double(y_of(i));
    for (int j = 0; j < m; ++j) {
        const ColoredEdge& e = inst.edges()[static_cast<size_t>(j)];
        VertexId pick = e.u;
        if (e.v) {
            // Charged to the endpoint with the larger value, lower id on ties.
            const Rational& yu = y_of(e.u);
            const Rational& yv = y_of(*e.v);
            if (yv > yu || (yv == yu && *e.v < e.u)) pick = *e.v;
        }
        sep.assignee[static_cast<size_t>(j)] = pick;
        sep.edge_value[static_cast<size_t>(j)] = sep.vertex_value[static_cast<size_t>(pick - 1)];
    }
    return sep;
}

std::pair<LinearProgram, SparseLpData> build_sparse_lp(const SeparatedSolution& sep,
                                                       const CvcInstance& inst) {
    const int n = inst.num_vertices();
    const int w = inst.num_colors();
    SparseLpData data;
    data.requirements = inst.requirements();
    data.assigned_count.assign(static_cast<size_t>(w), std::vector<int>(static_cast<size_t>(n), 0));
    for (int j = 0; j < inst.num_edges(); ++j) {
        const ColoredEdge& e = inst.edges()[static_cast<size_t>(j)];
        ++data.assigned_count[static_cast<size_t>(e.color - 1)]
                             [static_cast<size_t>(sep.assignee[static_cast<size_t>(j)] - 1)];
    }
    data.budget = sep.cost();

    LinearProgram lp;
    lp.num_vars = n;
    lp.lower.assign(static_cast<size_t>(n), Rational(0));
    lp.upper.assign(static_cast<size_t>(n), Rational(1));
    lp.objective.assign(static_cast<size_t>(n), Rational(0));
    if (w >= 1)
        for (int i = 0; i < n; ++i)
            lp.objective[static_cast<size_t>(i)] = Rational(data.assigned_count[0][static_cast<size_t>(i)]);
    lp.sense = Sense::Maximize;
    for (ColorId c = 2; c <= w; ++c) {
        LpRow row;
        row.coeffs.assign(static_cast<size_t>(n), Rational(0));
        for (int i = 0; i < n; ++i)
            row.coeffs[static_cast<size_t>(i)] =
                Rational(data.assigned_count[static_cast<size_t>(c - 1)][static_cast<size_t>(i)]);
        row.rel = Relation::GreaterEq;
        row.rhs = Rational(inst.requirements().target(c));
        lp.rows.push_back(std::move(row));
    }
    LpRow budget_row;
    budget_row.coeffs.assign(static_cast<size_t>(n), Rational(1));
    budget_row.rel = Relation::LessEq;
    budget_row.rhs = data.budget;
    lp.rows.push_back(std::move(budget_row));
    return {std::move(lp), std::move(data)};
}

RoundedSelection round_sparse(const LpSolution& sparse_sol, const SparseLpData& data) {
    if (sparse_sol.status != LpStatus::Optimal)
        throw ContractViolation("round_sparse: input solution is not optimal");
    const int w = data.requirements.num_colors();
    const int fractional = sparse_sol.count_fractional_unit();
    if (fractional > w)
        throw ContractViolation("round_sparse: " + std::to_string(fractional) +
                                " fractional coordinates exceed the color count " +
                                std::to_string(w) + " (solution is not an extreme point)");
    RoundedSelection out;
    const int n = static_cast<int>(sparse_sol.values.size());
    out.selector.assign(static_cast<size_t>(n), 0);
    std::vector<int> chosen;
    for (int i = 0; i < n; ++i) {
        if (sparse_sol.values[static_cast<size_t>(i)].sign() > 0) {
            out.selector[static_cast<size_t>(i)] = 1;
            chosen.push_back(i + 1);
        }
    }
    // Rounding up can only raise assigned coverage, so every color target
    // (including color 1 through the objective bound) stays met.
    for (ColorId c = 1; c <= w; ++c) {
        long total = 0;
        for (int i = 0; i < n; ++i)
            if (out.selector[static_cast<size_t>(i)])
                total += data.assigned_count[static_cast<size_t>(c - 1)][static_cast<size_t>(i)];
        if (total < data.requirements.target(c))
            throw ContractViolation("round_sparse: rounded selection misses a coverage target");
    }
    out.chosen = VertexSet(std::move(chosen));
    return out;
}

namespace {

bool requirements_within_class_sizes(const CvcInstance& inst) {
    for (ColorId c = 1; c <= inst.num_colors(); ++c)
        if (inst.requirements().target(c) > inst.color_class_size(c)) return false;
    return true;
}

}  // namespace

std::optional<VertexSet> solve_additive(const CvcInstance& inst) {
    if (!requirements_within_class_sizes(inst)) return std::nullopt;
    if (inst.num_colors() == 0) return VertexSet{};

    auto [lp, mapping] = build_cvc_lp(inst);
    LpSolution relax = solve_to_optimal_basic(lp);
    if (relax.status != LpStatus::Optimal)
        throw ContractViolation("cvc relaxation must be solvable after the feasibility pre-check");
    SeparatedSolution sep = separate(relax, mapping, inst);
    auto [sparse_lp, data] = build_sparse_lp(sep, inst);
    LpSolution sparse = solve_to_optimal_basic(sparse_lp);
    if (sparse.status != LpStatus::Optimal)
        throw ContractViolation("sparse stage must be solvable (the separated point is feasible)");
    return round_sparse(sparse, data).chosen;
}

std::optional<VertexSet> solve_eps(const CvcInstance& inst, const Rational& eps) {
    if (eps.sign() <= 0) throw InputError("solve_eps: epsilon must be positive");
    if (!requirements_within_class_sizes(inst)) return std::nullopt;
    if (is_feasible_cvc(inst, VertexSet{})) return VertexSet{};

    const int n = inst.num_vertices();
    long depth = (Rational(inst.num_colors()) / eps).ceil_long();
    depth = std::min<long>(depth, n);
    std::vector<int> ids;
    // All subsets of size kappa in lexicographic order; the first feasible hit
    // at the smallest kappa is an optimal solution.
    for (long kappa = 1; kappa <= depth; ++kappa) {
        ids.assign(static_cast<size_t>(kappa), 0);
        for (long i = 0; i < kappa; ++i) ids[static_cast<size_t>(i)] = static_cast<int>(i) + 1;
        while (true) {
            VertexSet s{std::vector<int>(ids)};
            if (is_feasible_cvc(inst, s)) return s;
            long i = kappa - 1;
            while (i >= 0 && ids[static_cast<size_t>(i)] == n - static_cast<int>(kappa - 1 - i)) --i;
            if (i < 0) break;
            ++ids[static_cast<size_t>(i)];
            for (long j = i + 1; j < kappa; ++j)
                ids[static_cast<size_t>(j)] = ids[static_cast<size_t>(j - 1)] + 1;
        }
    }
    return solve_additive(inst);
}

}  // namespace faircover
