#include "crosscount/graph_io.hpp"

#include <algorithm>
#include <charconv>
#include <iterator>
#include <istream>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "crosscount/error.hpp"

namespace crosscount {

namespace {

constexpr std::int64_t kMaxVertices = std::int64_t{1} << 24;

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\f' || c == '\v'; }

// Splits a line into integer tokens; throws ParseError on anything else.
std::vector<std::int64_t> integers(std::string_view line, std::size_t line_no) {
    std::vector<std::int64_t> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && is_space(line[i])) ++i;
        if (i == line.size()) break;
        std::size_t j = i;
        while (j < line.size() && !is_space(line[j])) ++j;
        std::int64_t value = 0;
        const char* first = line.data() + i;
        const char* last = line.data() + j;
        if (*first == '+') ++first;
        auto [ptr, ec] = std::from_chars(first, last, value);
        if (ec != std::errc{} || ptr != last) {
            throw ParseError(line_no, "expected an integer, got '" + std::string(line.substr(i, j - i)) + "'");
        }
        out.push_back(value);
        i = j;
    }
    return out;
}

struct Line {
    std::size_t number;
    std::string_view text;
};

// Non-blank, non-comment lines.
std::vector<Line> content_lines(std::string_view text) {
    std::vector<Line> out;
    std::size_t number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        ++number;
        std::string_view line = text.substr(pos, end - pos);
        std::size_t k = 0;
        while (k < line.size() && is_space(line[k])) ++k;
        if (k < line.size() && line[k] != '#') out.push_back({number, line});
        if (end == text.size()) break;
        pos = end + 1;
    }
    return out;
}

Point make_point(std::int64_t x, std::int64_t y, std::size_t line_no) {
    Point p{x, y};
    if (!in_bounds(p)) {
        throw Error(ErrorKind::CoordinateOverflow,
                    "line " + std::to_string(line_no) + ": coordinate exceeds +-2^26");
    }
    return p;
}

Edge make_edge(std::int64_t i, std::int64_t j, std::size_t n, std::size_t line_no) {
    const auto limit = static_cast<std::int64_t>(n);
    if (i < 0 || j < 0 || i >= limit || j >= limit) {
        throw Error(ErrorKind::IndexOutOfRange, "line " + std::to_string(line_no) + ": edge (" +
                                                    std::to_string(i) + ", " + std::to_string(j) +
                                                    ") with n = " + std::to_string(n));
    }
    return {static_cast<VertexId>(i), static_cast<VertexId>(j)};
}

GeometricGraph parse_text(std::string_view text) {
    const auto lines = content_lines(text);
    if (lines.empty()) throw ParseError(0, "empty input, missing header");

    const auto header = integers(lines[0].text, lines[0].number);
    if (header.size() != 2 || header[0] < 1 || header[0] > kMaxVertices || header[1] < 0) {
        throw ParseError(lines[0].number, "missing or invalid header, expected 'n m' with n >= 1");
    }
    const auto n = static_cast<std::size_t>(header[0]);
    const auto m = static_cast<std::size_t>(header[1]);
    if (lines.size() != 1 + n + m) {
        const std::size_t at = lines.size() < 1 + n + m ? 0 : lines[1 + n + m].number;
        throw ParseError(at, "expected " + std::to_string(n) + " point lines and " + std::to_string(m) +
                                 " edge lines, found " + std::to_string(lines.size() - 1));
    }

    std::vector<Point> points;
    points.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto& line = lines[1 + i];
        const auto v = integers(line.text, line.number);
        if (v.size() != 2) throw ParseError(line.number, "expected 'x y'");
        points.push_back(make_point(v[0], v[1], line.number));
    }

    std::vector<Edge> edges;
    edges.reserve(m);
    for (std::size_t k = 0; k < m; ++k) {
        const auto& line = lines[1 + n + k];
        const auto v = integers(line.text, line.number);
        if (v.size() != 2) throw ParseError(line.number, "expected 'i j'");
        edges.push_back(make_edge(v[0], v[1], n, line.number));
    }
    return GeometricGraph(std::move(points), std::move(edges));
}

std::size_t line_of_byte(std::string_view text, std::size_t byte) {
    byte = std::min(byte, text.size());
    return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(byte), '\n'));
}

GeometricGraph parse_json(std::string_view text) {
    using nlohmann::json;
    json doc;
    try {
        doc = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        throw ParseError(line_of_byte(text, e.byte), e.what());
    }
    try {
        if (!doc.is_object() || !doc.contains("points") || !doc.contains("edges")) {
            throw ParseError(1, "JSON graph needs 'points' and 'edges'");
        }
        std::vector<Point> points;
        for (const auto& p : doc.at("points")) {
            if (!p.is_array() || p.size() != 2) throw ParseError(1, "each point must be [x, y]");
            points.push_back(make_point(p[0].get<std::int64_t>(), p[1].get<std::int64_t>(), 1));
        }
        if (points.empty()) throw ParseError(1, "graph needs at least one vertex");
        std::vector<Edge> edges;
        for (const auto& e : doc.at("edges")) {
            if (!e.is_array() || e.size() != 2) throw ParseError(1, "each edge must be [i, j]");
            edges.push_back(make_edge(e[0].get<std::int64_t>(), e[1].get<std::int64_t>(), points.size(), 1));
        }
        std::optional<std::vector<std::uint32_t>> layers;
        if (doc.contains("layers") && !doc.at("layers").is_null()) {
            layers = doc.at("layers").get<std::vector<std::uint32_t>>();
        }
        return GeometricGraph(std::move(points), std::move(edges), std::move(layers));
    } catch (const json::exception& e) {
        throw ParseError(1, e.what());
    }
}

std::vector<Edge> sorted_edges(const GeometricGraph& g) {
    std::vector<Edge> edges(g.edges().begin(), g.edges().end());
    std::sort(edges.begin(), edges.end());
    return edges;
}

}  // namespace

GeometricGraph parse_graph(std::string_view text) {
    const auto first = std::find_if(text.begin(), text.end(), [](char c) { return !is_space(c) && c != '\n'; });
    if (first != text.end() && *first == '{') return parse_json(text);
    return parse_text(text);
}

GeometricGraph read_graph(std::istream& in) {
    std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    return parse_graph(text);
}

std::string serialize_graph(const GeometricGraph& g) {
    std::ostringstream os;
    os << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const auto& p : g.points()) os << p.x << ' ' << p.y << '\n';
    for (const auto& e : sorted_edges(g)) os << e.a << ' ' << e.b << '\n';
    return os.str();
}

std::string serialize_graph_json(const GeometricGraph& g) {
    nlohmann::json doc;
    doc["points"] = nlohmann::json::array();
    for (const auto& p : g.points()) doc["points"].push_back({p.x, p.y});
    doc["edges"] = nlohmann::json::array();
    for (const auto& e : sorted_edges(g)) doc["edges"].push_back({e.a, e.b});
    if (g.has_layers()) doc["layers"] = *g.layers();
    return doc.dump() + "\n";
}

}  // namespace crosscount
