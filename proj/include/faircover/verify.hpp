#pragma once

#include <cstdint>
#include <optional>

#include "faircover/graph.hpp"
#include "faircover/rational.hpp"

namespace faircover {

/// Exhaustive reference solvers. Each refuses (CapExceeded) beyond a hard
/// size cap so CI cannot silently run exponential jobs. All enumerate by
/// increasing solution size and return the lexicographically first optimum.

constexpr int kBruteForceVertexCap = 16;
constexpr int kBruteForceEdgeCap = 20;

std::optional<VertexSet> brute_force_cvc(const CvcInstance& inst,
                                         int vertex_cap = kBruteForceVertexCap);

std::optional<EdgeSet> brute_force_cec(const VertexColoredGraph& g,
                                       const CoverageRequirements& req,
                                       int edge_cap = kBruteForceEdgeCap);

std::optional<Matching> brute_force_bm(const VertexColoredGraph& g,
                                       const CoverageRequirements& req,
                                       int edge_cap = kBruteForceEdgeCap);

/// Maximum-cardinality matching covering at least one vertex of every color.
std::optional<Matching> brute_force_tm(const VertexColoredGraph& g,
                                       int edge_cap = kBruteForceEdgeCap);

/// Maximum-cardinality matching, by exhaustive enumeration.
Matching brute_force_max_matching(const VertexColoredGraph& g,
                                  int edge_cap = kBruteForceEdgeCap);

/// Maximum-cardinality matching covering every vertex of `must_cover`.
std::optional<Matching> brute_force_constrained_matching(const VertexColoredGraph& g,
                                                         const VertexSet& must_cover,
                                                         int edge_cap = kBruteForceEdgeCap);

enum class RequirementPolicy {
    RandomFeasible,  // targets drawn within the achievable maxima
    RandomAny,       // targets may exceed what any solution can reach
    Tight,           // targets equal to the achievable maxima
};

/// Deterministic random-instance recipe: identical config => identical
/// instance, bit for bit.
struct GeneratorConfig {
    std::uint64_t seed = 0;
    int min_vertices = 2;
    int max_vertices = 8;
    Rational edge_density = Rational(1, 2);  // in [0, 1]
    int num_colors = 2;
    RequirementPolicy policy = RequirementPolicy::RandomFeasible;
    int max_edges = 0;  // 0 = uncapped

    void validate() const;
};

CvcInstance gen_random_cvc(const GeneratorConfig& cfg);

std::pair<VertexColoredGraph, CoverageRequirements> gen_random_cec(const GeneratorConfig& cfg);

}  // namespace faircover
