#include "faircover/geometry.hpp"

#include <algorithm>
#include <map>

namespace faircover {

bool line_contains(const AxisLine& line, const ColoredPoint& p) {
    return line.orientation == Orientation::Horizontal ? p.y == line.coordinate
                                                       : p.x == line.coordinate;
}

namespace {

void check_no_duplicate_lines(const std::vector<AxisLine>& lines) {
    for (size_t i = 0; i < lines.size(); ++i)
        for (size_t j = i + 1; j < lines.size(); ++j)
            if (lines[i].orientation == lines[j].orientation &&
                lines[i].coordinate == lines[j].coordinate)
                throw InputError("duplicate line in geometric instance");
}

/// Lines through p, ascending by line index; at most one per orientation.
std::vector<int> containing_lines(const std::vector<AxisLine>& lines, const ColoredPoint& p) {
    std::vector<int> hits;
    for (size_t i = 0; i < lines.size(); ++i)
        if (line_contains(lines[i], p)) hits.push_back(static_cast<int>(i));
    return hits;
}

}  // namespace

PointsToCvc points_lines_to_cvc(const std::vector<AxisLine>& lines,
                                const std::vector<ColoredPoint>& points,
                                const CoverageRequirements& req) {
    check_no_duplicate_lines(lines);
    const int w = req.num_colors();
    std::vector<ColoredEdge> edges;
    std::vector<int> edge_point;
    std::vector<int> dropped;
    std::vector<int> coverable(static_cast<size_t>(w), 0);
    for (size_t pi = 0; pi < points.size(); ++pi) {
        const ColoredPoint& p = points[pi];
        if (!p.color) throw InputError("cover-points instance: point without color");
        if (*p.color < 1 || *p.color > w) throw InputError("point color out of range");
        const std::vector<int> hits = containing_lines(lines, p);
        if (hits.empty()) {
            dropped.push_back(static_cast<int>(pi));
            continue;
        }
        if (hits.size() == 1) {
            edges.push_back(ColoredEdge::pendant(hits[0] + 1, *p.color));
        } else {
            edges.push_back(ColoredEdge::pair(hits[0] + 1, hits[1] + 1, *p.color));
        }
        edge_point.push_back(static_cast<int>(pi));
        ++coverable[static_cast<size_t>(*p.color - 1)];
    }
    bool attainable = true;
    for (ColorId c = 1; c <= w; ++c)
        if (req.target(c) > coverable[static_cast<size_t>(c - 1)]) attainable = false;
    return PointsToCvc{
        CvcInstance(static_cast<int>(lines.size()), std::move(edges), w, req),
        lines, std::move(edge_point), std::move(dropped), attainable};
}

LinesToCec lines_points_to_cec(const std::vector<AxisLine>& lines,
                               const std::vector<ColoredPoint>& points,
                               const CoverageRequirements& req) {
    check_no_duplicate_lines(lines);
    const int w = req.num_colors();
    const int num_lines = static_cast<int>(lines.size());
    std::vector<ColorId> colors(static_cast<size_t>(num_lines));
    for (int i = 0; i < num_lines; ++i) {
        if (!lines[static_cast<size_t>(i)].color)
            throw InputError("hit-lines instance: line without color");
        const ColorId c = *lines[static_cast<size_t>(i)].color;
        if (c < 1 || c > w) throw InputError("line color out of range");
        colors[static_cast<size_t>(i)] = c;
    }
    const ColorId dummy_color = w + 1;

    std::vector<std::pair<VertexId, VertexId>> edges;
    std::vector<int> edge_point;
    std::vector<int> dropped;
    std::vector<int> duplicates;
    std::map<std::pair<std::string, std::string>, int> seen_locations;
    int next_vertex = num_lines;
    for (size_t pi = 0; pi < points.size(); ++pi) {
        const ColoredPoint& p = points[pi];
        auto key = std::make_pair(p.x.str(), p.y.str());
        if (!seen_locations.emplace(key, static_cast<int>(pi)).second) {
            duplicates.push_back(static_cast<int>(pi));
            continue;
        }
        const std::vector<int> hits = containing_lines(lines, p);
        if (hits.empty()) {
            dropped.push_back(static_cast<int>(pi));
            continue;
        }
        if (hits.size() == 1) {
            colors.push_back(dummy_color);
            edges.emplace_back(hits[0] + 1, ++next_vertex);
        } else {
            edges.emplace_back(hits[0] + 1, hits[1] + 1);
        }
        edge_point.push_back(static_cast<int>(pi));
    }
    std::vector<int> targets = req.targets();
    targets.push_back(0);
    return LinesToCec{
        VertexColoredGraph(next_vertex, std::move(colors), std::move(edges), dummy_color),
        CoverageRequirements(std::move(targets)), points, std::move(edge_point),
        std::move(dropped), std::move(duplicates)};
}

std::vector<AxisLine> lift_cvc_solution(const VertexSet& chosen, const PointsToCvc& map) {
    std::vector<AxisLine> out;
    for (VertexId v : chosen) {
        if (v < 1 || v > static_cast<int>(map.lines.size()))
            throw InputError("lift_cvc_solution: unknown vertex id");
        out.push_back(map.lines[static_cast<size_t>(v - 1)]);
    }
    return out;
}

std::vector<ColoredPoint> lift_cec_solution(const EdgeSet& chosen, const LinesToCec& map) {
    std::vector<ColoredPoint> out;
    for (EdgeId e : chosen) {
        if (e < 1 || e > static_cast<int>(map.edge_point.size()))
            throw InputError("lift_cec_solution: unknown edge id");
        out.push_back(map.points.at(static_cast<size_t>(map.edge_point[static_cast<size_t>(e - 1)])));
    }
    return out;
}

}  // namespace faircover
