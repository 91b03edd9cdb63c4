#include "faircover/cec.hpp"

#include <algorithm>
#include <string>

namespace faircover {

VertexId CecBmReduction::partner_of(VertexId bm_vertex) const {
    const int n_kept = static_cast<int>(kept.size());
    return bm_vertex <= n_kept ? bm_vertex + n_kept : bm_vertex - n_kept;
}

bool CecBmReduction::is_partner_edge(EdgeId e) const {
    return e > bm.graph.num_edges() - static_cast<int>(kept.size());
}

std::optional<CecBmReduction> reduce_cec_to_bm(const VertexColoredGraph& g,
                                               const CoverageRequirements& req) {
    if (req.num_colors() != g.num_colors())
        throw InputError("requirement vector length does not match color count");
    CecBmReduction red;
    red.bm_id.assign(static_cast<size_t>(g.num_vertices()) + 1, 0);
    for (VertexId v = 1; v <= g.num_vertices(); ++v) {
        if (g.degree(v) == 0) {
            red.removed_isolated.push_back(v);
        } else {
            red.kept.push_back(v);
            red.bm_id[static_cast<size_t>(v)] = static_cast<int>(red.kept.size());
        }
    }
    std::vector<int> surviving(static_cast<size_t>(g.num_colors()), 0);
    for (VertexId v : red.kept) ++surviving[static_cast<size_t>(g.color(v) - 1)];
    for (ColorId c = 1; c <= g.num_colors(); ++c)
        if (req.target(c) > surviving[static_cast<size_t>(c - 1)]) return std::nullopt;

    red.lowest_incident_edge.assign(static_cast<size_t>(g.num_vertices()) + 1, 0);
    for (EdgeId e = 1; e <= g.num_edges(); ++e) {
        auto [u, v] = g.edge(e);
        auto& lu = red.lowest_incident_edge[static_cast<size_t>(u)];
        auto& lv = red.lowest_incident_edge[static_cast<size_t>(v)];
        if (lu == 0) lu = e;
        if (lv == 0) lv = e;
    }

    const int n_kept = static_cast<int>(red.kept.size());
    red.partner_color = g.num_colors() + 1;
    std::vector<ColorId> colors(static_cast<size_t>(2 * n_kept));
    for (int i = 0; i < n_kept; ++i) {
        colors[static_cast<size_t>(i)] = g.color(red.kept[static_cast<size_t>(i)]);
        colors[static_cast<size_t>(n_kept + i)] = red.partner_color;
    }
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (auto [u, v] : g.edges())
        edges.emplace_back(red.bm_id[static_cast<size_t>(u)], red.bm_id[static_cast<size_t>(v)]);
    for (int i = 1; i <= n_kept; ++i) edges.emplace_back(i, n_kept + i);

    std::vector<int> targets = req.targets();
    targets.push_back(0);
    red.bm = BmInstance{VertexColoredGraph(2 * n_kept, std::move(colors), std::move(edges),
                                           red.partner_color),
                        CoverageRequirements(std::move(targets))};
    return red;
}

EdgeSet lift_bm_to_cec(const Matching& m, const CecBmReduction& red,
                       const VertexColoredGraph& g) {
    if (!is_matching(red.bm.graph, m.edges) ||
        !is_feasible_cec(red.bm.graph, red.bm.requirements, m.edges))
        throw ContractViolation("lift_bm_to_cec: input does not solve the reduced instance");
    std::vector<EdgeId> out;
    for (EdgeId e : m.edges) {
        if (!red.is_partner_edge(e)) {
            out.push_back(e);  // original edge ids are preserved by the reduction
            continue;
        }
        const VertexId bm_v = red.bm.graph.edge(e).first;
        const VertexId original = red.kept.at(static_cast<size_t>(bm_v - 1));
        const EdgeId replacement = red.lowest_incident_edge.at(static_cast<size_t>(original));
        if (replacement == 0)
            throw ContractViolation("lift_bm_to_cec: partner edge at an isolated vertex");
        out.push_back(replacement);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    for (EdgeId e : out)
        if (e < 1 || e > g.num_edges())
            throw ContractViolation("lift_bm_to_cec: lifted edge id outside the original graph");
    return EdgeSet(std::move(out));
}

std::optional<BmTmReduction> reduce_bm_to_tm(const BmInstance& bm) {
    const VertexColoredGraph& g = bm.graph;
    const int n = g.num_vertices();
    const int w = g.num_colors();
    for (ColorId c = 1; c <= w; ++c)
        if (bm.requirements.target(c) > g.color_class_size(c)) return std::nullopt;

    std::vector<std::vector<VertexId>> classes(static_cast<size_t>(w));
    for (ColorId c = 1; c <= w; ++c) classes[static_cast<size_t>(c - 1)] = g.color_class(c);

    // Vertex layout: originals 1..n, then the per-color spill blocks, then the
    // forced pair. Original vertex i keeps color i; spills and the forced tail
    // share color n+1; the forced head alone carries color n+2.
    const ColorId spill_color = n + 1;
    const ColorId head_color = n + 2;
    std::vector<ColorId> colors(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) colors[static_cast<size_t>(i)] = i + 1;

    BmTmReduction red;
    red.original_n = n;
    red.original_m = g.num_edges();
    red.color_class = classes;
    red.spill_color = spill_color;
    red.head_color = head_color;

    int next_vertex = n;
    for (ColorId c = 1; c <= w; ++c) {
        const int size = g.color_class_size(c) - bm.requirements.target(c);
        red.block_start.push_back(next_vertex + 1);
        red.block_size.push_back(size);
        next_vertex += size;
        colors.insert(colors.end(), static_cast<size_t>(size), spill_color);
    }
    red.forced_tail = ++next_vertex;
    colors.push_back(spill_color);
    red.forced_head = ++next_vertex;
    colors.push_back(head_color);

    std::vector<std::pair<VertexId, VertexId>> edges(g.edges());
    for (ColorId c = 1; c <= w; ++c) {
        red.block_edge_base.push_back(static_cast<int>(edges.size()));
        const auto& cls = classes[static_cast<size_t>(c - 1)];
        for (int b = 0; b < red.block_size[static_cast<size_t>(c - 1)]; ++b)
            for (VertexId member : cls)
                edges.emplace_back(red.block_start[static_cast<size_t>(c - 1)] + b, member);
    }
    red.forced_edge = static_cast<int>(edges.size()) + 1;
    edges.emplace_back(red.forced_tail, red.forced_head);

    red.tm = TmInstance(VertexColoredGraph(next_vertex, std::move(colors), std::move(edges),
                                           head_color));
    return red;
}

namespace {

void require_tropical_feasible(const Matching& tropical, const BmTmReduction& red) {
    const VertexColoredGraph& g = red.tm.graph();
    if (!is_matching(g, tropical.edges))
        throw ContractViolation("tropical lift: edge set is not a matching");
    std::vector<int> cov = coverage_by_edges(g, tropical.edges);
    for (int count : cov)
        if (count < 1) throw ContractViolation("tropical lift: some color is uncovered");
}

}  // namespace

Matching lift_tm_to_bm(const Matching& tropical, const BmTmReduction& red) {
    require_tropical_feasible(tropical, red);
    std::vector<EdgeId> kept;
    for (EdgeId e : tropical.edges)
        if (e <= red.original_m) kept.push_back(e);
    Matching m{EdgeSet(std::move(kept))};
    if (m.size() != red.original_n - tropical.size() + 1)
        throw ContractViolation("tropical lift: size identity n - s + 1 violated");
    return m;
}

Matching embed_bm_into_tm(const Matching& m, const BmTmReduction& red) {
    const VertexColoredGraph& g = red.tm.graph();
    for (EdgeId e : m.edges)
        if (e < 1 || e > red.original_m)
            throw ContractViolation("embed: matching uses non-original edges");
    if (!is_matching(g, m.edges))
        throw ContractViolation("embed: edge set is not a matching");

    std::vector<char> matched(static_cast<size_t>(red.original_n) + 1, 0);
    for (EdgeId e : m.edges) {
        auto [u, v] = g.edge(e);
        matched[static_cast<size_t>(u)] = matched[static_cast<size_t>(v)] = 1;
    }
    std::vector<EdgeId> out(m.edges.begin(), m.edges.end());
    out.push_back(red.forced_edge);
    const int w = static_cast<int>(red.color_class.size());
    for (int c = 0; c < w; ++c) {
        const auto& cls = red.color_class[static_cast<size_t>(c)];
        int next_block = 0;
        int covered = 0;
        for (VertexId v : cls)
            if (matched[static_cast<size_t>(v)]) ++covered;
        const int target = static_cast<int>(cls.size()) - red.block_size[static_cast<size_t>(c)];
        if (covered < target)
            throw ContractViolation("embed: input matching misses a coverage target");
        for (size_t j = 0; j < cls.size(); ++j) {
            if (matched[static_cast<size_t>(cls[j])]) continue;
            if (next_block >= red.block_size[static_cast<size_t>(c)])
                throw ContractViolation("embed: spill block too small");
            // Edge ids in a spill block are laid out block-vertex-major.
            out.push_back(red.block_edge_base[static_cast<size_t>(c)] +
                          next_block * static_cast<int>(cls.size()) + static_cast<int>(j) + 1);
            ++next_block;
        }
    }
    Matching result{EdgeSet(std::move(out))};
    if (result.size() != red.original_n - m.size() + 1)
        throw ContractViolation("embed: size identity n - k + 1 violated");
    return result;
}

std::optional<Matching> solve_bm(const BmInstance& bm) {
    auto red = reduce_bm_to_tm(bm);
    if (!red) return std::nullopt;
    auto tropical = solve_tropical(red->tm);
    if (!tropical) return std::nullopt;
    return lift_tm_to_bm(*tropical, *red);
}

std::optional<EdgeSet> solve_cec(const VertexColoredGraph& g, const CoverageRequirements& req) {
    auto red = reduce_cec_to_bm(g, req);
    if (!red) return std::nullopt;
    auto m = solve_bm(red->bm);
    if (!m) return std::nullopt;
    return lift_bm_to_cec(*m, *red, g);
}

}  // namespace faircover
