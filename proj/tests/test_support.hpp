#pragma once

#include <utility>
#include <vector>

#include "faircover/graph.hpp"

namespace faircover::test {

/// Star with the center first: center=1, leaves 2..leaves+1, all edges color 1.
inline CvcInstance star_cvc(int leaves, std::vector<int> req) {
    std::vector<ColoredEdge> edges;
    for (int l = 0; l < leaves; ++l) edges.push_back(ColoredEdge::pair(1, l + 2, 1));
    return CvcInstance(leaves + 1, std::move(edges), static_cast<int>(req.size()),
                       CoverageRequirements(std::move(req)));
}

inline VertexColoredGraph path_graph(std::vector<ColorId> colors, int num_colors) {
    const int n = static_cast<int>(colors.size());
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (int v = 1; v < n; ++v) edges.emplace_back(v, v + 1);
    return VertexColoredGraph(n, std::move(colors), std::move(edges), num_colors);
}

inline VertexColoredGraph petersen_graph() {
    std::vector<std::pair<VertexId, VertexId>> edges = {
        {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 1},    // outer cycle
        {1, 6}, {2, 7}, {3, 8}, {4, 9}, {5, 10},   // spokes
        {6, 8}, {8, 10}, {10, 7}, {7, 9}, {9, 6},  // inner pentagram
    };
    return VertexColoredGraph(10, std::vector<ColorId>(10, 1), std::move(edges), 1);
}

}  // namespace faircover::test
