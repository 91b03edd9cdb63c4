#pragma once

#include <optional>

#include "faircover/graph.hpp"

namespace faircover {

/// Vertex-colored graph in which every color id is actually used; input of
/// the tropical solver.
class TmInstance {
public:
    explicit TmInstance(VertexColoredGraph graph);

    const VertexColoredGraph& graph() const { return graph_; }

private:
    VertexColoredGraph graph_;
};

/// Maximum-cardinality matching (general graphs, blossom contraction).
Matching max_cardinality_matching(const VertexColoredGraph& g);

/// Maximum-cardinality matching among those covering every vertex of
/// `must_cover`; nullopt when no matching covers all of them. When feasible,
/// the result has the size of an unconstrained maximum matching (a coverable
/// vertex set is always covered by some maximum matching).
std::optional<Matching> constrained_max_matching(const VertexColoredGraph& g,
                                                 const VertexSet& must_cover);

/// Maximum-cardinality matching covering at least one vertex of every color;
/// nullopt when no matching covers all colors. Reduction-shaped instances
/// (every color class is a singleton or contains an endpoint of a forced
/// degree-1 edge) dispatch to the constrained matcher; the general case runs
/// an exact branch-and-bound with a residual-matching upper bound.
std::optional<Matching> solve_tropical(const TmInstance& inst);

}  // namespace faircover
