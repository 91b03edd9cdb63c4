#include "faircover/matching.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <string>

namespace faircover {

namespace {

/// Edmonds' blossom algorithm (contract-and-augment, O(V^3)-style) over an
/// adjacency-list graph. Vertices are 0-based internally. The search is
/// deterministic: adjacency lists are kept sorted and roots are processed in
/// ascending order.
class Blossom {
public:
    explicit Blossom(int n)
        : n_(n), adj_(static_cast<size_t>(n)), match_(static_cast<size_t>(n), -1),
          parent_(static_cast<size_t>(n), -1), base_(static_cast<size_t>(n)) {}

    void add_edge(int u, int v) {
        adj_[static_cast<size_t>(u)].push_back(v);
        adj_[static_cast<size_t>(v)].push_back(u);
        sorted_ = false;
    }

    void set_matched_pair(int u, int v) {
        match_[static_cast<size_t>(u)] = v;
        match_[static_cast<size_t>(v)] = u;
    }

    int mate(int v) const { return match_[static_cast<size_t>(v)]; }
    bool is_matched(int v) const { return mate(v) != -1; }

    /// Matches each free vertex to its first free neighbor (cheap start).
    void greedy_init() {
        ensure_sorted();
        for (int u = 0; u < n_; ++u) {
            if (is_matched(u)) continue;
            for (int v : adj_[static_cast<size_t>(u)])
                if (!is_matched(v)) { set_matched_pair(u, v); break; }
        }
    }

    /// One phase of Edmonds' search from an exposed root; grows the matching
    /// by one when an augmenting path exists.
    bool try_augment(int root) {
        ensure_sorted();
        used_.assign(static_cast<size_t>(n_), 0);
        parent_.assign(static_cast<size_t>(n_), -1);
        for (int i = 0; i < n_; ++i) base_[static_cast<size_t>(i)] = i;
        used_[static_cast<size_t>(root)] = 1;
        std::queue<int> q;
        q.push(root);
        while (!q.empty()) {
            const int v = q.front();
            q.pop();
            for (int to : adj_[static_cast<size_t>(v)]) {
                if (base_[static_cast<size_t>(v)] == base_[static_cast<size_t>(to)] || mate(v) == to) continue;
                if (to == root || (is_matched(to) && parent_[static_cast<size_t>(mate(to))] != -1)) {
                    // Even-even edge: contract the blossom up to the common base.
                    const int cur_base = lowest_common_base(v, to);
                    std::vector<char> in_blossom(static_cast<size_t>(n_), 0);
                    mark_path(v, cur_base, to, in_blossom);
                    mark_path(to, cur_base, v, in_blossom);
                    for (int i = 0; i < n_; ++i) {
                        if (!in_blossom[static_cast<size_t>(base_[static_cast<size_t>(i)])]) continue;
                        base_[static_cast<size_t>(i)] = cur_base;
                        if (!used_[static_cast<size_t>(i)]) {
                            used_[static_cast<size_t>(i)] = 1;
                            q.push(i);
                        }
                    }
                } else if (parent_[static_cast<size_t>(to)] == -1) {
                    parent_[static_cast<size_t>(to)] = v;
                    if (!is_matched(to)) {
                        augment_along(to);
                        return true;
                    }
                    used_[static_cast<size_t>(mate(to))] = 1;
                    q.push(mate(to));
                }
            }
        }
        return false;
    }

private:
    void ensure_sorted() {
        if (sorted_) return;
        for (auto& list : adj_) std::sort(list.begin(), list.end());
        sorted_ = true;
    }

    int lowest_common_base(int a, int b) {
        std::vector<char> seen(static_cast<size_t>(n_), 0);
        for (;;) {
            a = base_[static_cast<size_t>(a)];
            seen[static_cast<size_t>(a)] = 1;
            if (!is_matched(a)) break;
            a = parent_[static_cast<size_t>(mate(a))];
        }
        for (;;) {
            b = base_[static_cast<size_t>(b)];
            if (seen[static_cast<size_t>(b)]) return b;
            b = parent_[static_cast<size_t>(mate(b))];
        }
    }

    void mark_path(int v, int stop_base, int child, std::vector<char>& in_blossom) {
        while (base_[static_cast<size_t>(v)] != stop_base) {
            in_blossom[static_cast<size_t>(base_[static_cast<size_t>(v)])] = 1;
            in_blossom[static_cast<size_t>(base_[static_cast<size_t>(mate(v))])] = 1;
            parent_[static_cast<size_t>(v)] = child;
            child = mate(v);
            v = parent_[static_cast<size_t>(mate(v))];
        }
    }

    void augment_along(int to) {
        while (to != -1) {
            const int pv = parent_[static_cast<size_t>(to)];
            const int next = mate(pv);
            set_matched_pair(to, pv);
            to = next;
        }
    }

    int n_;
    std::vector<std::vector<int>> adj_;
    std::vector<int> match_;
    std::vector<int> parent_;
    std::vector<int> base_;
    std::vector<char> used_;
    bool sorted_ = true;
};

std::map<std::pair<int, int>, EdgeId> edge_index(const VertexColoredGraph& g) {
    std::map<std::pair<int, int>, EdgeId> idx;
    for (EdgeId e = 1; e <= g.num_edges(); ++e) {
        auto [u, v] = g.edge(e);
        idx[std::minmax(u, v)] = e;
    }
    return idx;
}

Matching matching_from_mates(const VertexColoredGraph& g, const Blossom& bl) {
    const auto idx = edge_index(g);
    std::vector<EdgeId> edges;
    for (int u = 0; u < g.num_vertices(); ++u) {
        const int v = bl.mate(u);
        if (v <= u || v >= g.num_vertices()) continue;  // phantom mates excluded
        edges.push_back(idx.at(std::minmax(u + 1, v + 1)));
    }
    return Matching{EdgeSet(std::move(edges))};
}

/// Shared core: maximize cardinality on the real graph, then rewire so every
/// vertex of `must_cover` is matched. A phantom partner per sacrificable
/// vertex turns the rewiring into ordinary augmentations: an augmenting path
/// from an uncovered target can only end at a phantom, which covers the
/// target, preserves the matched status of everything in between and gives up
/// exactly one non-target vertex.
std::optional<Blossom> cover_targets(const VertexColoredGraph& g, const VertexSet& must_cover,
                                     std::optional<std::pair<VertexId, VertexId>> forced_pair) {
    const int n = g.num_vertices();
    for (VertexId t : must_cover)
        if (t < 1 || t > n) throw InputError("constrained matching: vertex id out of range");

    std::vector<char> is_target(static_cast<size_t>(n), 0);
    for (VertexId t : must_cover) is_target[static_cast<size_t>(t - 1)] = 1;
    std::vector<char> keep_covered = is_target;
    if (forced_pair) {
        keep_covered[static_cast<size_t>(forced_pair->first - 1)] = 1;
        keep_covered[static_cast<size_t>(forced_pair->second - 1)] = 1;
    }

    std::vector<int> phantom(static_cast<size_t>(n), -1);
    int total = n;
    for (int v = 0; v < n; ++v)
        if (!keep_covered[static_cast<size_t>(v)]) phantom[static_cast<size_t>(v)] = total++;

    Blossom bl(total);
    for (auto [u, v] : g.edges()) bl.add_edge(u - 1, v - 1);
    if (forced_pair) bl.set_matched_pair(forced_pair->first - 1, forced_pair->second - 1);

    // Stage 1: maximum matching of the real graph (phantom edges absent).
    bl.greedy_init();
    for (int v = 0; v < n; ++v)
        if (!bl.is_matched(v)) bl.try_augment(v);

    // Stage 2: enable sacrifices and cover every target.
    for (int v = 0; v < n; ++v)
        if (phantom[static_cast<size_t>(v)] != -1) bl.add_edge(v, phantom[static_cast<size_t>(v)]);
    for (VertexId t : must_cover) {
        if (bl.is_matched(t - 1)) continue;
        if (!bl.try_augment(t - 1)) return std::nullopt;
    }
    return bl;
}

}  // namespace

TmInstance::TmInstance(VertexColoredGraph graph) : graph_(std::move(graph)) {
    for (ColorId c = 1; c <= graph_.num_colors(); ++c)
        if (graph_.color_class_size(c) == 0)
            throw InputError("tropical instance: color " + std::to_string(c) + " is unused");
}

Matching max_cardinality_matching(const VertexColoredGraph& g) {
    Blossom bl(g.num_vertices());
    for (auto [u, v] : g.edges()) bl.add_edge(u - 1, v - 1);
    bl.greedy_init();
    for (int v = 0; v < g.num_vertices(); ++v)
        if (!bl.is_matched(v)) bl.try_augment(v);
    return matching_from_mates(g, bl);
}

std::optional<Matching> constrained_max_matching(const VertexColoredGraph& g,
                                                 const VertexSet& must_cover) {
    auto bl = cover_targets(g, must_cover, std::nullopt);
    if (!bl) return std::nullopt;
    return matching_from_mates(g, *bl);
}

namespace {

struct ReductionShape {
    VertexId forced_low;   // endpoint of the forced edge with degree 1
    VertexId forced_other;
    VertexSet targets;     // singleton-colored vertices outside the forced pair
};

/// A tropical instance is reduction-shaped when some degree-1 vertex carries
/// a private color (forcing its unique edge into every feasible matching) and
/// every other color class is either a singleton or touches the forced pair.
std::optional<ReductionShape> detect_reduction_shape(const VertexColoredGraph& g) {
    for (VertexId d = 1; d <= g.num_vertices(); ++d) {
        if (g.degree(d) != 1 || g.color_class_size(g.color(d)) != 1) continue;
        VertexId c = 0;
        for (auto [a, b] : g.edges()) {
            if (a == d) { c = b; break; }
            if (b == d) { c = a; break; }
        }
        std::vector<int> targets;
        bool ok = true;
        for (ColorId col = 1; col <= g.num_colors() && ok; ++col) {
            std::vector<VertexId> cls = g.color_class(col);
            if (std::find(cls.begin(), cls.end(), c) != cls.end() ||
                std::find(cls.begin(), cls.end(), d) != cls.end())
                continue;  // covered by the forced edge
            if (cls.size() == 1)
                targets.push_back(cls.front());
            else
                ok = false;
        }
        if (ok) return ReductionShape{d, c, VertexSet(std::move(targets))};
    }
    return std::nullopt;
}

/// Exact branch-and-bound for arbitrary instances: branch on the edges
/// incident to the uncovered color with fewest vertices, prune against
/// (chosen + residual maximum matching) and color classes with no live edge.
class TropicalSearch {
public:
    explicit TropicalSearch(const VertexColoredGraph& g) : g_(g), used_(static_cast<size_t>(g.num_vertices()) + 1, 0) {}

    std::optional<Matching> run() {
        covered_.assign(static_cast<size_t>(g_.num_colors()) + 1, 0);
        explore();
        if (!best_) return std::nullopt;
        return Matching{EdgeSet(std::move(*best_))};
    }

private:
    int residual_max_matching(std::vector<EdgeId>* out_edges) const {
        std::vector<int> rank(static_cast<size_t>(g_.num_vertices()) + 1, -1);
        int live = 0;
        for (VertexId v = 1; v <= g_.num_vertices(); ++v)
            if (!used_[static_cast<size_t>(v)]) rank[static_cast<size_t>(v)] = live++;
        Blossom bl(live);
        std::vector<EdgeId> live_edges;
        for (EdgeId e = 1; e <= g_.num_edges(); ++e) {
            auto [u, v] = g_.edge(e);
            if (rank[static_cast<size_t>(u)] < 0 || rank[static_cast<size_t>(v)] < 0) continue;
            bl.add_edge(rank[static_cast<size_t>(u)], rank[static_cast<size_t>(v)]);
        }
        bl.greedy_init();
        for (int v = 0; v < live; ++v)
            if (!bl.is_matched(v)) bl.try_augment(v);
        int size = 0;
        std::vector<VertexId> back(static_cast<size_t>(live));
        for (VertexId v = 1; v <= g_.num_vertices(); ++v)
            if (rank[static_cast<size_t>(v)] >= 0) back[static_cast<size_t>(rank[static_cast<size_t>(v)])] = v;
        for (int v = 0; v < live; ++v) {
            const int w = bl.mate(v);
            if (w <= v) continue;
            ++size;
            if (out_edges) {
                auto key = std::minmax(back[static_cast<size_t>(v)], back[static_cast<size_t>(w)]);
                for (EdgeId e = 1; e <= g_.num_edges(); ++e)
                    if (std::minmax(g_.edge(e).first, g_.edge(e).second) == key) {
                        out_edges->push_back(e);
                        break;
                    }
            }
        }
        return size;
    }

    void explore() {
        // Uncovered color with the fewest vertices; -1 when all covered.
        ColorId branch_color = -1;
        int branch_size = 0;
        for (ColorId c = 1; c <= g_.num_colors(); ++c) {
            if (covered_[static_cast<size_t>(c)]) continue;
            const int size = g_.color_class_size(c);
            if (branch_color < 0 || size < branch_size) {
                branch_color = c;
                branch_size = size;
            }
        }
        if (branch_color < 0) {
            std::vector<EdgeId> completion;
            residual_max_matching(&completion);
            std::vector<EdgeId> candidate = chosen_;
            candidate.insert(candidate.end(), completion.begin(), completion.end());
            std::sort(candidate.begin(), candidate.end());
            if (!best_ || candidate.size() > best_->size()) best_ = std::move(candidate);
            return;
        }
        const int upper = static_cast<int>(chosen_.size()) + residual_max_matching(nullptr);
        if (best_ && upper <= static_cast<int>(best_->size())) return;

        std::vector<EdgeId> candidates;
        for (EdgeId e = 1; e <= g_.num_edges(); ++e) {
            auto [u, v] = g_.edge(e);
            if (used_[static_cast<size_t>(u)] || used_[static_cast<size_t>(v)]) continue;
            if (g_.color(u) == branch_color || g_.color(v) == branch_color) candidates.push_back(e);
        }
        for (EdgeId e : candidates) {
            auto [u, v] = g_.edge(e);
            used_[static_cast<size_t>(u)] = used_[static_cast<size_t>(v)] = 1;
            chosen_.push_back(e);
            const int cu = g_.color(u);
            const int cv = g_.color(v);
            const char old_cu = covered_[static_cast<size_t>(cu)];
            const char old_cv = covered_[static_cast<size_t>(cv)];
            covered_[static_cast<size_t>(cu)] = covered_[static_cast<size_t>(cv)] = 1;
            explore();
            covered_[static_cast<size_t>(cu)] = old_cu;
            covered_[static_cast<size_t>(cv)] = old_cv;
            chosen_.pop_back();
            used_[static_cast<size_t>(u)] = used_[static_cast<size_t>(v)] = 0;
        }
    }

    const VertexColoredGraph& g_;
    std::vector<char> used_;
    std::vector<char> covered_;
    std::vector<EdgeId> chosen_;
    std::optional<std::vector<EdgeId>> best_;
};

}  // namespace

std::optional<Matching> solve_tropical(const TmInstance& inst) {
    const VertexColoredGraph& g = inst.graph();
    if (g.num_colors() == 0) return Matching{};

    if (auto shape = detect_reduction_shape(g)) {
        auto bl = cover_targets(g, shape->targets,
                                std::make_pair(shape->forced_low, shape->forced_other));
        if (!bl) return std::nullopt;
        Matching result = matching_from_mates(g, *bl);
        std::vector<int> cov = coverage_by_edges(g, result.edges);
        for (int count : cov)
            if (count < 1) throw ContractViolation("tropical dispatch produced an uncovered color");
        return result;
    }
    return TropicalSearch(g).run();
}

}  // namespace faircover
