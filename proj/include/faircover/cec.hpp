#pragma once

#include <optional>
#include <vector>

#include "faircover/graph.hpp"
#include "faircover/matching.hpp"

namespace faircover {

/// Budgeted-matching instance: find a minimum matching covering at least the
/// per-color vertex targets.
struct BmInstance {
    VertexColoredGraph graph;
    CoverageRequirements requirements;
};

/// Edge-cover-to-budgeted-matching reduction: isolated vertices removed, the
/// graph doubled with one pendant partner per surviving vertex, partners
/// carrying a fresh color with target 0. Original edge ids are preserved.
struct CecBmReduction {
    BmInstance bm;
    std::vector<VertexId> kept;          // BM id i covers original vertex kept[i-1]
    std::vector<int> bm_id;              // original id -> BM id (0 when removed)
    std::vector<VertexId> removed_isolated;
    ColorId partner_color = 0;
    std::vector<EdgeId> lowest_incident_edge;  // per original vertex (0 if none)

    VertexId partner_of(VertexId bm_vertex) const;
    bool is_partner_edge(EdgeId e) const;  // pendant (v, a(v)) edges
};

std::optional<CecBmReduction> reduce_cec_to_bm(const VertexColoredGraph& g,
                                               const CoverageRequirements& req);

/// Maps a feasible BM matching back to an edge cover of the original graph:
/// real edges kept, each partner edge replaced by its vertex's lowest-id
/// incident edge, duplicates dropped. Optimal inputs lift at equal size.
EdgeSet lift_bm_to_cec(const Matching& m, const CecBmReduction& red,
                       const VertexColoredGraph& g);

/// Budgeted-matching-to-tropical reduction: originals get private colors,
/// each color class x gets a block of (class size - target) spill vertices
/// completely joined to it, plus a forced pendant edge carrying two fresh
/// colors. Original edge ids are preserved.
struct BmTmReduction {
    TmInstance tm;
    int original_n = 0;
    int original_m = 0;
    std::vector<std::vector<VertexId>> color_class;  // per color, ascending
    std::vector<int> block_start;                    // per color: first spill vertex id
    std::vector<int> block_size;                     // per color: class size - target
    std::vector<int> block_edge_base;                // per color: id before its first spill edge
    VertexId forced_tail = 0;                        // c_t
    VertexId forced_head = 0;                        // d_t (degree 1)
    EdgeId forced_edge = 0;
    ColorId spill_color = 0;                         // C
    ColorId head_color = 0;                          // D
};

std::optional<BmTmReduction> reduce_bm_to_tm(const BmInstance& bm);

/// Restriction of a color-feasible tropical matching to the original edges;
/// meets every BM target and has size n - |input| + 1.
Matching lift_tm_to_bm(const Matching& tropical, const BmTmReduction& red);

/// Forward direction of the same correspondence, for round-trip testing: a
/// feasible BM matching extended by the forced edge and a greedy saturation
/// of each class's unmatched vertices into its spill block; the result is
/// color-feasible of size n - |input| + 1.
Matching embed_bm_into_tm(const Matching& m, const BmTmReduction& red);

std::optional<Matching> solve_bm(const BmInstance& bm);

std::optional<EdgeSet> solve_cec(const VertexColoredGraph& g, const CoverageRequirements& req);

}  // namespace faircover
