#pragma once

#include <optional>
#include <vector>

#include "faircover/graph.hpp"
#include "faircover/rational.hpp"

namespace faircover {

enum class Orientation { Horizontal, Vertical };

/// Axis-parallel line; the color is present only in the hit-lines variant.
struct AxisLine {
    Orientation orientation = Orientation::Horizontal;
    Rational coordinate;
    std::optional<ColorId> color;

    friend bool operator==(const AxisLine&, const AxisLine&) = default;
};

/// Planar point; the color is present only in the cover-points variant.
struct ColoredPoint {
    Rational x;
    Rational y;
    std::optional<ColorId> color;

    friend bool operator==(const ColoredPoint&, const ColoredPoint&) = default;
};

bool line_contains(const AxisLine& line, const ColoredPoint& p);

/// Covering colored points by lines, as a vertex-cover instance: one vertex
/// per line; a point on two lines becomes a 2-endpoint edge, a point on one
/// line a pendant edge, and points on no line are dropped and reported.
/// Duplicate points stay as parallel edges (each counts toward its target).
struct PointsToCvc {
    CvcInstance instance;
    std::vector<AxisLine> lines;       // vertex id - 1 -> line
    std::vector<int> edge_point;       // edge id - 1 -> input point index
    std::vector<int> dropped_points;   // input indices of uncoverable points
    bool requirements_attainable = true;
};

PointsToCvc points_lines_to_cvc(const std::vector<AxisLine>& lines,
                                const std::vector<ColoredPoint>& points,
                                const CoverageRequirements& req);

/// Hitting colored lines by points, as an edge-cover instance: one colored
/// vertex per line; a point on two lines becomes the edge between them, a
/// point on one line an edge to a private dummy vertex carrying a reserved
/// extra color with target 0. Duplicate point locations are deduplicated and
/// points on no line dropped.
struct LinesToCec {
    VertexColoredGraph graph;
    CoverageRequirements requirements;  // input targets plus 0 for the dummy color
    std::vector<ColoredPoint> points;   // the input points (edge_point refers here)
    std::vector<int> edge_point;        // edge id - 1 -> input point index
    std::vector<int> dropped_points;
    std::vector<int> duplicate_points;  // input indices merged into earlier ones
};

LinesToCec lines_points_to_cec(const std::vector<AxisLine>& lines,
                               const std::vector<ColoredPoint>& points,
                               const CoverageRequirements& req);

std::vector<AxisLine> lift_cvc_solution(const VertexSet& chosen, const PointsToCvc& map);

std::vector<ColoredPoint> lift_cec_solution(const EdgeSet& chosen, const LinesToCec& map);

}  // namespace faircover
