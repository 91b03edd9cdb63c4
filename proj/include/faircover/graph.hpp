#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "faircover/errors.hpp"

namespace faircover {

// Vertex/edge/color ids are 1-based dense integers throughout.
using VertexId = int;
using EdgeId = int;
using ColorId = int;

/// Per-color minimum coverage targets r_1..r_w.
class CoverageRequirements {
public:
    CoverageRequirements() = default;
    explicit CoverageRequirements(std::vector<int> targets);

    int num_colors() const { return static_cast<int>(targets_.size()); }
    int target(ColorId c) const { return targets_.at(static_cast<size_t>(c - 1)); }
    const std::vector<int>& targets() const { return targets_; }

    bool all_zero() const;

    /// True iff every per-color count meets its target. `counts` must have
    /// one entry per color.
    bool met_by(const std::vector<int>& counts) const;

    friend bool operator==(const CoverageRequirements&, const CoverageRequirements&) = default;

private:
    std::vector<int> targets_;
};

/// One edge of a CVC instance: either a normal 2-endpoint edge or a pendant
/// edge with a single endpoint (produced by the geometry frontend for points
/// lying on exactly one line).
struct ColoredEdge {
    VertexId u = 0;
    std::optional<VertexId> v;  // empty for pendant edges
    ColorId color = 0;

    static ColoredEdge pair(VertexId a, VertexId b, ColorId c) { return {a, b, c}; }
    static ColoredEdge pendant(VertexId a, ColorId c) { return {a, std::nullopt, c}; }

    bool is_pendant() const { return !v.has_value(); }
    bool touches(VertexId w) const { return u == w || (v && *v == w); }

    friend bool operator==(const ColoredEdge&, const ColoredEdge&) = default;
};

/// Colorful Vertex Cover instance: an edge-colored multigraph (pendant edges
/// and parallel edges allowed, self-loops not) plus coverage requirements.
class CvcInstance {
public:
    CvcInstance(int num_vertices, std::vector<ColoredEdge> edges, int num_colors,
                CoverageRequirements requirements);

    int num_vertices() const { return n_; }
    int num_edges() const { return static_cast<int>(edges_.size()); }
    int num_colors() const { return num_colors_; }
    const std::vector<ColoredEdge>& edges() const { return edges_; }
    const ColoredEdge& edge(EdgeId e) const { return edges_.at(static_cast<size_t>(e - 1)); }
    const CoverageRequirements& requirements() const { return requirements_; }

    /// Size of color class t (number of edges of that color).
    int color_class_size(ColorId c) const { return class_sizes_.at(static_cast<size_t>(c - 1)); }

    friend bool operator==(const CvcInstance&, const CvcInstance&) = default;

private:
    int n_;
    std::vector<ColoredEdge> edges_;
    int num_colors_;
    CoverageRequirements requirements_;
    std::vector<int> class_sizes_;
};

/// Simple graph with one color per vertex (CEC / BM / TM instances).
class VertexColoredGraph {
public:
    VertexColoredGraph(int num_vertices, std::vector<ColorId> vertex_colors,
                       std::vector<std::pair<VertexId, VertexId>> edges, int num_colors);

    int num_vertices() const { return n_; }
    int num_edges() const { return static_cast<int>(edges_.size()); }
    int num_colors() const { return num_colors_; }
    ColorId color(VertexId v) const { return colors_.at(static_cast<size_t>(v - 1)); }
    const std::vector<ColorId>& colors() const { return colors_; }
    const std::vector<std::pair<VertexId, VertexId>>& edges() const { return edges_; }
    std::pair<VertexId, VertexId> edge(EdgeId e) const { return edges_.at(static_cast<size_t>(e - 1)); }

    int degree(VertexId v) const { return degrees_.at(static_cast<size_t>(v - 1)); }
    int color_class_size(ColorId c) const { return class_sizes_.at(static_cast<size_t>(c - 1)); }

    /// Vertices of color c in ascending order.
    std::vector<VertexId> color_class(ColorId c) const;

    friend bool operator==(const VertexColoredGraph&, const VertexColoredGraph&) = default;

private:
    int n_;
    std::vector<ColorId> colors_;
    std::vector<std::pair<VertexId, VertexId>> edges_;
    int num_colors_;
    std::vector<int> degrees_;
    std::vector<int> class_sizes_;
};

/// Sorted duplicate-free set of 1-based ids (shared shape of vertex and edge
/// selections). Construction sorts and rejects duplicates.
class IdSet {
public:
    IdSet() = default;
    explicit IdSet(std::vector<int> ids);

    int size() const { return static_cast<int>(ids_.size()); }
    bool empty() const { return ids_.empty(); }
    bool contains(int id) const;
    const std::vector<int>& ids() const { return ids_; }

    auto begin() const { return ids_.begin(); }
    auto end() const { return ids_.end(); }

    friend bool operator==(const IdSet&, const IdSet&) = default;

private:
    std::vector<int> ids_;
};

using VertexSet = IdSet;
using EdgeSet = IdSet;

/// A set of edge ids of an owning graph, no two sharing an endpoint.
/// Endpoint-disjointness is the caller's obligation; `is_matching` checks it.
struct Matching {
    EdgeSet edges;

    int size() const { return edges.size(); }

    friend bool operator==(const Matching&, const Matching&) = default;
};

bool is_matching(const VertexColoredGraph& g, const EdgeSet& edges);

/// Per-color counts of edges covered by S (an edge is covered when S contains
/// one of its endpoints; a pendant edge when S contains its only endpoint).
std::vector<int> coverage_by_vertices(const CvcInstance& inst, const VertexSet& s);

/// Per-color counts of distinct vertices incident to some edge of `selected`.
std::vector<int> coverage_by_edges(const VertexColoredGraph& g, const EdgeSet& selected);

bool is_feasible_cvc(const CvcInstance& inst, const VertexSet& s);
bool is_feasible_cec(const VertexColoredGraph& g, const CoverageRequirements& req,
                     const EdgeSet& selected);

/// Thins `selected` to a star forest covering the same vertex set: while some
/// member edge has both endpoints of degree >= 2 within the current set, the
/// lowest-id such edge is removed and the scan restarts.
EdgeSet normalize_to_stars(const VertexColoredGraph& g, const EdgeSet& selected);

}  // namespace faircover
