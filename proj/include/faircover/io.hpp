#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "faircover/geometry.hpp"
#include "faircover/graph.hpp"

namespace faircover {

enum class ProblemKind { Cvc, Cec, Bm, Tm, CoverPoints, HitLines };

std::string problem_kind_name(ProblemKind kind);

/// Vertex-colored graph plus requirements (the cec/bm payload).
struct ColoredGraphData {
    VertexColoredGraph graph;
    CoverageRequirements requirements;
};

/// Vertex-colored graph only (the tm payload).
struct ColoredGraphOnly {
    VertexColoredGraph graph;
};

struct GeometricData {
    std::vector<AxisLine> lines;
    std::vector<ColoredPoint> points;
    CoverageRequirements requirements;
};

struct ParsedInstance {
    ProblemKind kind = ProblemKind::Cvc;
    std::variant<CvcInstance, ColoredGraphData, ColoredGraphOnly, GeometricData> payload;
};

/// Parses the line-oriented instance format ('#' starts a comment). Throws
/// InputError with a line number on malformed input.
ParsedInstance parse_instance(const std::string& text);

/// Canonical text form; parse(serialize(x)) == x, byte for byte reproducible.
std::string serialize_cvc(const CvcInstance& inst);
std::string serialize_cec(const VertexColoredGraph& g, const CoverageRequirements& req,
                          ProblemKind kind = ProblemKind::Cec);
std::string serialize_tm(const VertexColoredGraph& g);
std::string serialize_geometry(const GeometricData& data, ProblemKind kind);

}  // namespace faircover
