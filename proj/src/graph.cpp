#include "faircover/graph.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace faircover {

namespace {

void check_vertex(VertexId v, int n, const char* what) {
    if (v < 1 || v > n)
        throw InputError(std::string(what) + ": vertex id " + std::to_string(v) +
                         " out of range 1.." + std::to_string(n));
}

void check_color(ColorId c, int num_colors, const char* what) {
    if (c < 1 || c > num_colors)
        throw InputError(std::string(what) + ": color " + std::to_string(c) +
                         " out of range 1.." + std::to_string(num_colors));
}

}  // namespace

CoverageRequirements::CoverageRequirements(std::vector<int> targets) : targets_(std::move(targets)) {
    for (int r : targets_)
        if (r < 0) throw InputError("negative coverage requirement");
}

bool CoverageRequirements::all_zero() const {
    return std::all_of(targets_.begin(), targets_.end(), [](int r) { return r == 0; });
}

bool CoverageRequirements::met_by(const std::vector<int>& counts) const {
    if (counts.size() != targets_.size())
        throw InputError("coverage vector length does not match color count");
    for (size_t i = 0; i < targets_.size(); ++i)
        if (counts[i] < targets_[i]) return false;
    return true;
}

CvcInstance::CvcInstance(int num_vertices, std::vector<ColoredEdge> edges, int num_colors,
                         CoverageRequirements requirements)
    : n_(num_vertices),
      edges_(std::move(edges)),
      num_colors_(num_colors),
      requirements_(std::move(requirements)) {
    if (n_ < 0) throw InputError("negative vertex count");
    if (num_colors_ < 0) throw InputError("negative color count");
    if (requirements_.num_colors() != num_colors_)
        throw InputError("requirement vector length does not match color count");
    class_sizes_.assign(static_cast<size_t>(num_colors_), 0);
    for (const ColoredEdge& e : edges_) {
        check_vertex(e.u, n_, "cvc edge");
        if (e.v) {
            check_vertex(*e.v, n_, "cvc edge");
            if (*e.v == e.u) throw InputError("cvc edge with identical endpoints (use a pendant edge)");
        }
        check_color(e.color, num_colors_, "cvc edge");
        ++class_sizes_[static_cast<size_t>(e.color - 1)];
    }
}

VertexColoredGraph::VertexColoredGraph(int num_vertices, std::vector<ColorId> vertex_colors,
                                       std::vector<std::pair<VertexId, VertexId>> edges,
                                       int num_colors)
    : n_(num_vertices), colors_(std::move(vertex_colors)), edges_(std::move(edges)), num_colors_(num_colors) {
    if (n_ < 0) throw InputError("negative vertex count");
    if (num_colors_ < 0) throw InputError("negative color count");
    if (static_cast<int>(colors_.size()) != n_)
        throw InputError("vertex color vector length does not match vertex count");
    class_sizes_.assign(static_cast<size_t>(num_colors_), 0);
    for (ColorId c : colors_) {
        check_color(c, num_colors_, "vertex color");
        ++class_sizes_[static_cast<size_t>(c - 1)];
    }
    degrees_.assign(static_cast<size_t>(n_), 0);
    std::set<std::pair<VertexId, VertexId>> seen;
    for (auto& [u, v] : edges_) {
        check_vertex(u, n_, "edge");
        check_vertex(v, n_, "edge");
        if (u == v) throw InputError("self-loop in simple graph");
        auto key = std::minmax(u, v);
        if (!seen.insert(key).second) throw InputError("duplicate edge in simple graph");
        ++degrees_[static_cast<size_t>(u - 1)];
        ++degrees_[static_cast<size_t>(v - 1)];
    }
}

std::vector<VertexId> VertexColoredGraph::color_class(ColorId c) const {
    check_color(c, num_colors_, "color class");
    std::vector<VertexId> out;
    for (VertexId v = 1; v <= n_; ++v)
        if (color(v) == c) out.push_back(v);
    return out;
}

IdSet::IdSet(std::vector<int> ids) : ids_(std::move(ids)) {
    std::sort(ids_.begin(), ids_.end());
    if (std::adjacent_find(ids_.begin(), ids_.end()) != ids_.end())
        throw InputError("duplicate id in set");
}

bool IdSet::contains(int id) const {
    return std::binary_search(ids_.begin(), ids_.end(), id);
}

bool is_matching(const VertexColoredGraph& g, const EdgeSet& edges) {
    std::vector<char> used(static_cast<size_t>(g.num_vertices()) + 1, 0);
    for (EdgeId e : edges) {
        if (e < 1 || e > g.num_edges()) throw InputError("edge id out of range");
        auto [u, v] = g.edge(e);
        if (used[static_cast<size_t>(u)] || used[static_cast<size_t>(v)]) return false;
        used[static_cast<size_t>(u)] = used[static_cast<size_t>(v)] = 1;
    }
    return true;
}

std::vector<int> coverage_by_vertices(const CvcInstance& inst, const VertexSet& s) {
    for (VertexId v : s) check_vertex(v, inst.num_vertices(), "coverage");
    std::vector<int> counts(static_cast<size_t>(inst.num_colors()), 0);
    for (const ColoredEdge& e : inst.edges()) {
        bool covered = s.contains(e.u) || (e.v && s.contains(*e.v));
        if (covered) ++counts[static_cast<size_t>(e.color - 1)];
    }
    return counts;
}

std::vector<int> coverage_by_edges(const VertexColoredGraph& g, const EdgeSet& selected) {
    std::vector<char> touched(static_cast<size_t>(g.num_vertices()) + 1, 0);
    for (EdgeId e : selected) {
        if (e < 1 || e > g.num_edges()) throw InputError("edge id out of range");
        auto [u, v] = g.edge(e);
        touched[static_cast<size_t>(u)] = touched[static_cast<size_t>(v)] = 1;
    }
    std::vector<int> counts(static_cast<size_t>(g.num_colors()), 0);
    for (VertexId v = 1; v <= g.num_vertices(); ++v)
        if (touched[static_cast<size_t>(v)]) ++counts[static_cast<size_t>(g.color(v) - 1)];
    return counts;
}

bool is_feasible_cvc(const CvcInstance& inst, const VertexSet& s) {
    return inst.requirements().met_by(coverage_by_vertices(inst, s));
}

bool is_feasible_cec(const VertexColoredGraph& g, const CoverageRequirements& req,
                     const EdgeSet& selected) {
    if (req.num_colors() != g.num_colors())
        throw InputError("requirement vector length does not match color count");
    return req.met_by(coverage_by_edges(g, selected));
}

EdgeSet normalize_to_stars(const VertexColoredGraph& g, const EdgeSet& selected) {
    std::vector<EdgeId> current(selected.begin(), selected.end());
    std::vector<int> degree(static_cast<size_t>(g.num_vertices()) + 1, 0);
    for (EdgeId e : current) {
        if (e < 1 || e > g.num_edges()) throw InputError("edge id out of range");
        auto [u, v] = g.edge(e);
        ++degree[static_cast<size_t>(u)];
        ++degree[static_cast<size_t>(v)];
    }
    // Drop the lowest-id edge whose endpoints both keep degree >= 2, restart.
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i < current.size(); ++i) {
            auto [u, v] = g.edge(current[i]);
            if (degree[static_cast<size_t>(u)] >= 2 && degree[static_cast<size_t>(v)] >= 2) {
                --degree[static_cast<size_t>(u)];
                --degree[static_cast<size_t>(v)];
                current.erase(current.begin() + static_cast<long>(i));
                changed = true;
                break;
            }
        }
    }
    return EdgeSet(std::move(current));
}

}  // namespace faircover
