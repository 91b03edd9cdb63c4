#include "faircover/verify.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <string>

namespace faircover {

namespace {

void check_cap(int actual, int cap, const char* what) {
    if (actual > cap)
        throw CapExceeded(std::string(what) + ": instance size " + std::to_string(actual) +
                          " exceeds brute-force cap " + std::to_string(cap));
}

/// Visits all k-subsets of {1..n} in lexicographic order until `fn` returns
/// true; returns whether any call did.
template <typename Fn>
bool any_combination(int n, int k, Fn&& fn) {
    if (k > n) return false;
    std::vector<int> ids(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) ids[static_cast<size_t>(i)] = i + 1;
    while (true) {
        if (fn(ids)) return true;
        int i = k - 1;
        while (i >= 0 && ids[static_cast<size_t>(i)] == n - (k - 1 - i)) --i;
        if (i < 0) return false;
        ++ids[static_cast<size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            ids[static_cast<size_t>(j)] = ids[static_cast<size_t>(j - 1)] + 1;
    }
}

/// Enumerates every matching (as a sorted edge-id list) in lexicographic
/// order; fn may record the best one. Used by all matching oracles.
void enumerate_matchings(const VertexColoredGraph& g,
                         const std::function<void(const std::vector<EdgeId>&)>& fn) {
    std::vector<EdgeId> chosen;
    std::vector<char> used(static_cast<size_t>(g.num_vertices()) + 1, 0);
    auto rec = [&](auto&& self, EdgeId next) -> void {
        fn(chosen);
        for (EdgeId e = next; e <= g.num_edges(); ++e) {
            auto [u, v] = g.edge(e);
            if (used[static_cast<size_t>(u)] || used[static_cast<size_t>(v)]) continue;
            used[static_cast<size_t>(u)] = used[static_cast<size_t>(v)] = 1;
            chosen.push_back(e);
            self(self, e + 1);
            chosen.pop_back();
            used[static_cast<size_t>(u)] = used[static_cast<size_t>(v)] = 0;
        }
    };
    rec(rec, 1);
}

std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) {
    // bound > 0; plain modulo keeps the stream implementation-independent.
    return rng() % bound;
}

bool draw_bernoulli(std::mt19937_64& rng, const Rational& p) {
    if (p >= Rational(1)) return true;
    if (p.sign() <= 0) return false;
    // p = num/den with den small in practice; compare a uniform draw mod den.
    const auto den = p.raw().get_den().get_ui();
    const auto num = p.raw().get_num().get_ui();
    return draw(rng, den) < num;
}

}  // namespace

std::optional<VertexSet> brute_force_cvc(const CvcInstance& inst, int vertex_cap) {
    check_cap(inst.num_vertices(), vertex_cap, "brute_force_cvc");
    const int n = inst.num_vertices();
    for (int k = 0; k <= n; ++k) {
        std::optional<VertexSet> found;
        any_combination(n, k, [&](const std::vector<int>& ids) {
            VertexSet s(std::vector<int>(ids));
            if (is_feasible_cvc(inst, s)) {
                found = std::move(s);
                return true;
            }
            return false;
        });
        if (found) return found;
    }
    return std::nullopt;
}

std::optional<EdgeSet> brute_force_cec(const VertexColoredGraph& g,
                                       const CoverageRequirements& req, int edge_cap) {
    check_cap(g.num_edges(), edge_cap, "brute_force_cec");
    const int m = g.num_edges();
    for (int k = 0; k <= m; ++k) {
        std::optional<EdgeSet> found;
        any_combination(m, k, [&](const std::vector<int>& ids) {
            EdgeSet s(std::vector<int>(ids));
            if (is_feasible_cec(g, req, s)) {
                found = std::move(s);
                return true;
            }
            return false;
        });
        if (found) return found;
    }
    return std::nullopt;
}

std::optional<Matching> brute_force_bm(const VertexColoredGraph& g,
                                       const CoverageRequirements& req, int edge_cap) {
    check_cap(g.num_edges(), edge_cap, "brute_force_bm");
    std::optional<std::vector<EdgeId>> best;
    enumerate_matchings(g, [&](const std::vector<EdgeId>& m) {
        if (best && m.size() >= best->size()) return;
        if (is_feasible_cec(g, req, EdgeSet(std::vector<int>(m)))) best = m;
    });
    if (!best) return std::nullopt;
    return Matching{EdgeSet(std::move(*best))};
}

std::optional<Matching> brute_force_tm(const VertexColoredGraph& g, int edge_cap) {
    check_cap(g.num_edges(), edge_cap, "brute_force_tm");
    std::optional<std::vector<EdgeId>> best;
    enumerate_matchings(g, [&](const std::vector<EdgeId>& m) {
        if (best && m.size() <= best->size()) return;
        std::vector<int> cov = coverage_by_edges(g, EdgeSet(std::vector<int>(m)));
        if (std::all_of(cov.begin(), cov.end(), [](int c) { return c >= 1; })) best = m;
    });
    if (!best) return std::nullopt;
    return Matching{EdgeSet(std::move(*best))};
}

Matching brute_force_max_matching(const VertexColoredGraph& g, int edge_cap) {
    check_cap(g.num_edges(), edge_cap, "brute_force_max_matching");
    std::vector<EdgeId> best;
    enumerate_matchings(g, [&](const std::vector<EdgeId>& m) {
        if (m.size() > best.size()) best = m;
    });
    return Matching{EdgeSet(std::move(best))};
}

std::optional<Matching> brute_force_constrained_matching(const VertexColoredGraph& g,
                                                         const VertexSet& must_cover,
                                                         int edge_cap) {
    check_cap(g.num_edges(), edge_cap, "brute_force_constrained_matching");
    std::optional<std::vector<EdgeId>> best;
    enumerate_matchings(g, [&](const std::vector<EdgeId>& m) {
        if (best && m.size() <= best->size()) return;
        std::vector<char> touched(static_cast<size_t>(g.num_vertices()) + 1, 0);
        for (EdgeId e : m) {
            auto [u, v] = g.edge(e);
            touched[static_cast<size_t>(u)] = touched[static_cast<size_t>(v)] = 1;
        }
        for (VertexId t : must_cover)
            if (!touched[static_cast<size_t>(t)]) return;
        best = m;
    });
    if (!best) return std::nullopt;
    return Matching{EdgeSet(std::move(*best))};
}

void GeneratorConfig::validate() const {
    if (min_vertices < 1 || max_vertices < min_vertices)
        throw InputError("generator vertex range empty");
    if (edge_density.sign() < 0 || edge_density > Rational(1))
        throw InputError("generator edge density outside [0, 1]");
    if (num_colors < 1) throw InputError("generator needs at least one color");
    if (max_edges < 0) throw InputError("negative edge cap");
}

CvcInstance gen_random_cvc(const GeneratorConfig& cfg) {
    cfg.validate();
    std::mt19937_64 rng(cfg.seed);
    const int n = cfg.min_vertices +
                  static_cast<int>(draw(rng, static_cast<std::uint64_t>(cfg.max_vertices - cfg.min_vertices + 1)));
    std::vector<ColoredEdge> edges;
    for (VertexId u = 1; u <= n; ++u) {
        for (VertexId v = u + 1; v <= n; ++v) {
            if (!draw_bernoulli(rng, cfg.edge_density)) continue;
            ColorId c = 1 + static_cast<int>(draw(rng, static_cast<std::uint64_t>(cfg.num_colors)));
            if (draw(rng, 8) == 0) {
                // occasional pendant edge, exercising the geometry extension
                edges.push_back(ColoredEdge::pendant(u, c));
            } else {
                edges.push_back(ColoredEdge::pair(u, v, c));
                if (draw(rng, 8) == 0) {
                    // occasional parallel duplicate (multigraph)
                    ColorId c2 = 1 + static_cast<int>(draw(rng, static_cast<std::uint64_t>(cfg.num_colors)));
                    edges.push_back(ColoredEdge::pair(u, v, c2));
                }
            }
        }
    }
    if (cfg.max_edges > 0 && static_cast<int>(edges.size()) > cfg.max_edges)
        edges.resize(static_cast<size_t>(cfg.max_edges));

    std::vector<int> class_sizes(static_cast<size_t>(cfg.num_colors), 0);
    for (const ColoredEdge& e : edges) ++class_sizes[static_cast<size_t>(e.color - 1)];
    std::vector<int> targets(static_cast<size_t>(cfg.num_colors), 0);
    for (int t = 0; t < cfg.num_colors; ++t) {
        const int cap = class_sizes[static_cast<size_t>(t)];
        switch (cfg.policy) {
            case RequirementPolicy::RandomFeasible:
                targets[static_cast<size_t>(t)] = static_cast<int>(draw(rng, static_cast<std::uint64_t>(cap + 1)));
                break;
            case RequirementPolicy::RandomAny:
                targets[static_cast<size_t>(t)] = static_cast<int>(draw(rng, static_cast<std::uint64_t>(cap + 3)));
                break;
            case RequirementPolicy::Tight:
                targets[static_cast<size_t>(t)] = cap;
                break;
        }
    }
    return CvcInstance(n, std::move(edges), cfg.num_colors, CoverageRequirements(std::move(targets)));
}

std::pair<VertexColoredGraph, CoverageRequirements> gen_random_cec(const GeneratorConfig& cfg) {
    cfg.validate();
    std::mt19937_64 rng(cfg.seed);
    const int n = cfg.min_vertices +
                  static_cast<int>(draw(rng, static_cast<std::uint64_t>(cfg.max_vertices - cfg.min_vertices + 1)));
    std::vector<ColorId> colors(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i)
        colors[static_cast<size_t>(i)] = 1 + static_cast<int>(draw(rng, static_cast<std::uint64_t>(cfg.num_colors)));
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (VertexId u = 1; u <= n; ++u)
        for (VertexId v = u + 1; v <= n; ++v)
            if (draw_bernoulli(rng, cfg.edge_density)) edges.emplace_back(u, v);
    if (cfg.max_edges > 0 && static_cast<int>(edges.size()) > cfg.max_edges)
        edges.resize(static_cast<size_t>(cfg.max_edges));

    VertexColoredGraph g(n, std::move(colors), std::move(edges), cfg.num_colors);
    // Achievable per-color maximum: selecting every edge covers exactly the
    // non-isolated vertices.
    std::vector<int> achievable(static_cast<size_t>(cfg.num_colors), 0);
    for (VertexId v = 1; v <= n; ++v)
        if (g.degree(v) > 0) ++achievable[static_cast<size_t>(g.color(v) - 1)];
    std::vector<int> targets(static_cast<size_t>(cfg.num_colors), 0);
    for (int t = 0; t < cfg.num_colors; ++t) {
        switch (cfg.policy) {
            case RequirementPolicy::RandomFeasible:
                targets[static_cast<size_t>(t)] = static_cast<int>(
                    draw(rng, static_cast<std::uint64_t>(achievable[static_cast<size_t>(t)] + 1)));
                break;
            case RequirementPolicy::RandomAny:
                targets[static_cast<size_t>(t)] = static_cast<int>(
                    draw(rng, static_cast<std::uint64_t>(g.color_class_size(t + 1) + 2)));
                break;
            case RequirementPolicy::Tight:
                targets[static_cast<size_t>(t)] = achievable[static_cast<size_t>(t)];
                break;
        }
    }
    return {std::move(g), CoverageRequirements(std::move(targets))};
}

}  // namespace faircover
