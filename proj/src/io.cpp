#include "faircover/io.hpp"

#include <map>
#include <sstream>

namespace faircover {

std::string problem_kind_name(ProblemKind kind) {
    switch (kind) {
        case ProblemKind::Cvc: return "cvc";
        case ProblemKind::Cec: return "cec";
        case ProblemKind::Bm: return "bm";
        case ProblemKind::Tm: return "tm";
        case ProblemKind::CoverPoints: return "cover-points";
        case ProblemKind::HitLines: return "hit-lines";
    }
    throw ContractViolation("unknown problem kind");
}

namespace {

struct Line {
    int number = 0;
    std::vector<std::string> tokens;
};

[[noreturn]] void fail(int line, const std::string& msg) {
    throw InputError("line " + std::to_string(line) + ": " + msg);
}

std::vector<Line> tokenize(const std::string& text) {
    std::vector<Line> lines;
    std::istringstream in(text);
    std::string raw;
    int number = 0;
    while (std::getline(in, raw)) {
        ++number;
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        std::istringstream ls(raw);
        Line line{number, {}};
        std::string tok;
        while (ls >> tok) line.tokens.push_back(tok);
        if (!line.tokens.empty()) lines.push_back(std::move(line));
    }
    return lines;
}

int parse_int(const Line& line, size_t idx, const char* what) {
    if (idx >= line.tokens.size()) fail(line.number, std::string("missing ") + what);
    try {
        size_t used = 0;
        int value = std::stoi(line.tokens[idx], &used);
        if (used != line.tokens[idx].size()) throw std::invalid_argument("");
        return value;
    } catch (const std::exception&) {
        fail(line.number, std::string("malformed ") + what + " '" + line.tokens[idx] + "'");
    }
}

Rational parse_rat(const Line& line, size_t idx, const char* what) {
    if (idx >= line.tokens.size()) fail(line.number, std::string("missing ") + what);
    try {
        return Rational::parse(line.tokens[idx]);
    } catch (const InputError&) {
        fail(line.number, std::string("malformed ") + what + " '" + line.tokens[idx] + "'");
    }
}

struct Header {
    int vertices = -1;
    int colors = -1;
    std::optional<std::vector<int>> require;
    int require_line = 0;
};

CoverageRequirements take_requirements(const Header& h, int expected_colors, int problem_line) {
    if (!h.require) fail(problem_line, "missing 'require' section");
    if (static_cast<int>(h.require->size()) != expected_colors)
        fail(h.require_line, "'require' arity " + std::to_string(h.require->size()) +
                                 " does not match color count " + std::to_string(expected_colors));
    return CoverageRequirements(*h.require);
}

ParsedInstance parse_graph_problem(ProblemKind kind, const std::vector<Line>& lines,
                                   int problem_line) {
    Header h;
    std::vector<Line> edge_lines;
    std::vector<Line> vcolor_lines;
    for (size_t i = 1; i < lines.size(); ++i) {
        const Line& line = lines[i];
        const std::string& head = line.tokens[0];
        if (head == "vertices") {
            h.vertices = parse_int(line, 1, "vertex count");
        } else if (head == "colors") {
            h.colors = parse_int(line, 1, "color count");
        } else if (head == "require") {
            std::vector<int> r;
            for (size_t t = 1; t < line.tokens.size(); ++t)
                r.push_back(parse_int(line, t, "requirement"));
            h.require = std::move(r);
            h.require_line = line.number;
        } else if (head == "edge") {
            edge_lines.push_back(line);
        } else if (head == "vcolor") {
            vcolor_lines.push_back(line);
        } else {
            fail(line.number, "unknown directive '" + head + "'");
        }
    }
    if (h.vertices < 0) fail(problem_line, "missing 'vertices' section");
    if (h.colors < 0) fail(problem_line, "missing 'colors' section");

    if (kind == ProblemKind::Cvc) {
        if (!vcolor_lines.empty()) fail(vcolor_lines[0].number, "'vcolor' not valid in a cvc instance");
        std::vector<ColoredEdge> edges;
        for (const Line& line : edge_lines) {
            if (line.tokens.size() != 4) fail(line.number, "expected 'edge <u> <v> <color>'");
            const int u = parse_int(line, 1, "endpoint");
            const ColorId c = parse_int(line, 3, "color");
            if (u < 1 || u > h.vertices) fail(line.number, "vertex id out of range");
            if (c < 1 || c > h.colors) fail(line.number, "color out of range");
            if (line.tokens[2] == "-") {
                edges.push_back(ColoredEdge::pendant(u, c));
            } else {
                const int v = parse_int(line, 2, "endpoint");
                if (v < 1 || v > h.vertices) fail(line.number, "vertex id out of range");
                if (v == u) fail(line.number, "edge endpoints must differ");
                edges.push_back(ColoredEdge::pair(u, v, c));
            }
        }
        CoverageRequirements req = take_requirements(h, h.colors, problem_line);
        return {kind, CvcInstance(h.vertices, std::move(edges), h.colors, std::move(req))};
    }

    // cec / bm / tm share the vertex-colored layout.
    std::vector<ColorId> colors(static_cast<size_t>(h.vertices), 0);
    for (const Line& line : vcolor_lines) {
        if (line.tokens.size() != 3) fail(line.number, "expected 'vcolor <v> <color>'");
        const int v = parse_int(line, 1, "vertex id");
        const ColorId c = parse_int(line, 2, "color");
        if (v < 1 || v > h.vertices) fail(line.number, "vertex id out of range");
        if (c < 1 || c > h.colors) fail(line.number, "color out of range");
        if (colors[static_cast<size_t>(v - 1)] != 0) fail(line.number, "duplicate vcolor for vertex");
        colors[static_cast<size_t>(v - 1)] = c;
    }
    for (int v = 1; v <= h.vertices; ++v)
        if (colors[static_cast<size_t>(v - 1)] == 0)
            fail(problem_line, "missing vcolor for vertex " + std::to_string(v));
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (const Line& line : edge_lines) {
        if (line.tokens.size() != 3) fail(line.number, "expected 'edge <u> <v>'");
        const int u = parse_int(line, 1, "endpoint");
        const int v = parse_int(line, 2, "endpoint");
        if (u < 1 || u > h.vertices || v < 1 || v > h.vertices)
            fail(line.number, "vertex id out of range");
        if (u == v) fail(line.number, "edge endpoints must differ");
        edges.emplace_back(u, v);
    }
    VertexColoredGraph g(h.vertices, std::move(colors), std::move(edges), h.colors);
    if (kind == ProblemKind::Tm) {
        if (h.require) fail(h.require_line, "'require' not valid in a tm instance");
        return {kind, ColoredGraphOnly{std::move(g)}};
    }
    CoverageRequirements req = take_requirements(h, h.colors, problem_line);
    return {kind, ColoredGraphData{std::move(g), std::move(req)}};
}

ParsedInstance parse_geometry_problem(ProblemKind kind, const std::vector<Line>& lines,
                                      int problem_line) {
    GeometricData data;
    std::optional<std::vector<int>> require;
    int require_line = 0;
    const bool lines_colored = kind == ProblemKind::HitLines;
    for (size_t i = 1; i < lines.size(); ++i) {
        const Line& line = lines[i];
        const std::string& head = line.tokens[0];
        if (head == "line") {
            if (line.tokens.size() != 3 + static_cast<size_t>(lines_colored))
                fail(line.number, lines_colored ? "expected 'line <h|v> <coord> <color>'"
                                                : "expected 'line <h|v> <coord>'");
            AxisLine l;
            if (line.tokens[1] == "h") l.orientation = Orientation::Horizontal;
            else if (line.tokens[1] == "v") l.orientation = Orientation::Vertical;
            else fail(line.number, "line orientation must be 'h' or 'v'");
            l.coordinate = parse_rat(line, 2, "coordinate");
            if (lines_colored) l.color = parse_int(line, 3, "color");
            data.lines.push_back(std::move(l));
        } else if (head == "point") {
            const bool colored = kind == ProblemKind::CoverPoints;
            if (line.tokens.size() != 3 + static_cast<size_t>(colored))
                fail(line.number, colored ? "expected 'point <x> <y> <color>'"
                                          : "expected 'point <x> <y>'");
            ColoredPoint p;
            p.x = parse_rat(line, 1, "x coordinate");
            p.y = parse_rat(line, 2, "y coordinate");
            if (colored) p.color = parse_int(line, 3, "color");
            data.points.push_back(std::move(p));
        } else if (head == "require") {
            std::vector<int> r;
            for (size_t t = 1; t < line.tokens.size(); ++t)
                r.push_back(parse_int(line, t, "requirement"));
            require = std::move(r);
            require_line = line.number;
        } else {
            fail(line.number, "unknown directive '" + head + "'");
        }
    }
    if (!require) fail(problem_line, "missing 'require' section");
    int num_colors = 0;
    if (kind == ProblemKind::CoverPoints) {
        for (const auto& p : data.points)
            num_colors = std::max(num_colors, p.color.value_or(0));
    } else {
        for (const auto& l : data.lines)
            num_colors = std::max(num_colors, l.color.value_or(0));
    }
    if (static_cast<int>(require->size()) < num_colors)
        fail(require_line, "'require' arity smaller than the largest color in use");
    data.requirements = CoverageRequirements(*require);
    return {kind, std::move(data)};
}

const std::map<std::string, ProblemKind>& kind_names() {
    static const std::map<std::string, ProblemKind> names = {
        {"cvc", ProblemKind::Cvc},   {"cec", ProblemKind::Cec},
        {"bm", ProblemKind::Bm},     {"tm", ProblemKind::Tm},
        {"cover-points", ProblemKind::CoverPoints},
        {"hit-lines", ProblemKind::HitLines},
    };
    return names;
}

}  // namespace

ParsedInstance parse_instance(const std::string& text) {
    const std::vector<Line> lines = tokenize(text);
    if (lines.empty()) throw InputError("missing 'problem' header (empty instance)");
    const Line& first = lines[0];
    if (first.tokens[0] != "problem" || first.tokens.size() != 2)
        fail(first.number, "expected 'problem <kind>' as the first directive");
    const auto it = kind_names().find(first.tokens[1]);
    if (it == kind_names().end()) fail(first.number, "unknown problem kind '" + first.tokens[1] + "'");
    const ProblemKind kind = it->second;
    if (kind == ProblemKind::CoverPoints || kind == ProblemKind::HitLines)
        return parse_geometry_problem(kind, lines, first.number);
    return parse_graph_problem(kind, lines, first.number);
}

std::string serialize_cvc(const CvcInstance& inst) {
    std::ostringstream os;
    os << "problem cvc\n";
    os << "vertices " << inst.num_vertices() << '\n';
    os << "colors " << inst.num_colors() << '\n';
    os << "require";
    for (int r : inst.requirements().targets()) os << ' ' << r;
    os << '\n';
    for (const ColoredEdge& e : inst.edges()) {
        os << "edge " << e.u << ' ';
        if (e.v) os << *e.v;
        else os << '-';
        os << ' ' << e.color << '\n';
    }
    return os.str();
}

std::string serialize_cec(const VertexColoredGraph& g, const CoverageRequirements& req,
                          ProblemKind kind) {
    std::ostringstream os;
    os << "problem " << problem_kind_name(kind) << '\n';
    os << "vertices " << g.num_vertices() << '\n';
    os << "colors " << g.num_colors() << '\n';
    os << "require";
    for (int r : req.targets()) os << ' ' << r;
    os << '\n';
    for (VertexId v = 1; v <= g.num_vertices(); ++v)
        os << "vcolor " << v << ' ' << g.color(v) << '\n';
    for (auto [u, v] : g.edges()) os << "edge " << u << ' ' << v << '\n';
    return os.str();
}

std::string serialize_tm(const VertexColoredGraph& g) {
    std::ostringstream os;
    os << "problem tm\n";
    os << "vertices " << g.num_vertices() << '\n';
    os << "colors " << g.num_colors() << '\n';
    for (VertexId v = 1; v <= g.num_vertices(); ++v)
        os << "vcolor " << v << ' ' << g.color(v) << '\n';
    for (auto [u, v] : g.edges()) os << "edge " << u << ' ' << v << '\n';
    return os.str();
}

std::string serialize_geometry(const GeometricData& data, ProblemKind kind) {
    std::ostringstream os;
    os << "problem " << problem_kind_name(kind) << '\n';
    os << "require";
    for (int r : data.requirements.targets()) os << ' ' << r;
    os << '\n';
    for (const AxisLine& l : data.lines) {
        os << "line " << (l.orientation == Orientation::Horizontal ? 'h' : 'v') << ' '
           << l.coordinate;
        if (l.color) os << ' ' << *l.color;
        os << '\n';
    }
    for (const ColoredPoint& p : data.points) {
        os << "point " << p.x << ' ' << p.y;
        if (p.color) os << ' ' << *p.color;
        os << '\n';
    }
    return os.str();
}

}  // namespace faircover
