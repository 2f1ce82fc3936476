#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "crosscount/error.hpp"
#include "crosscount/graph.hpp"
#include "crosscount/graph_io.hpp"
#include "crosscount/hull.hpp"
#include "crosscount/oracle.hpp"
#include "support.hpp"

using namespace crosscount;
using namespace crosscount::test;

namespace {

constexpr const char* kDiagonals = "4 2\n0 0\n10 1\n11 10\n1 11\n0 2\n1 3\n";

ErrorKind parse_failure(std::string_view text) {
    try {
        parse_graph(text);
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("input was accepted: " << text);
    return ErrorKind::InternalInconsistency;
}

std::size_t parse_error_line(std::string_view text) {
    try {
        parse_graph(text);
    } catch (const ParseError& e) {
        return e.line();
    }
    FAIL("expected a ParseError");
    return 0;
}

// Brute-force hull membership: p is a hull vertex iff no triangle of other
// points contains it (closed).
bool is_hull_vertex(std::span<const Point> pts, std::size_t p) {
    for (std::size_t i = 0; i < pts.size(); ++i) {
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            for (std::size_t k = j + 1; k < pts.size(); ++k) {
                if (i == p || j == p || k == p) continue;
                const int a = turn(pts[i], pts[j], pts[p]);
                const int b = turn(pts[j], pts[k], pts[p]);
                const int c = turn(pts[k], pts[i], pts[p]);
                if ((a >= 0 && b >= 0 && c >= 0) || (a <= 0 && b <= 0 && c <= 0)) return false;
            }
        }
    }
    return true;
}

}  // namespace

TEST_CASE("parse_graph text examples") {
    const auto g = parse_graph(kDiagonals);
    CHECK(g.vertex_count() == 4);
    CHECK(std::equal(g.points().begin(), g.points().end(), fixture_q().begin()));
    REQUIRE(g.edge_count() == 2);
    CHECK(g.edges()[0] == Edge{0, 2});
    CHECK(g.edges()[1] == Edge{1, 3});
    CHECK_FALSE(g.has_layers());

    CHECK(parse_failure("0 0\n") == ErrorKind::ParseError);
    CHECK(parse_failure("") == ErrorKind::ParseError);
}

TEST_CASE("parse_graph tolerates comments, blank lines and edge orientation") {
    const auto g = parse_graph("# quad\n\n4 2\n0 0\n  10 1\n11 10\n# mid\n1 11\n2 0\n3 1\n");
    CHECK(serialize_graph(g) == kDiagonals);
}

TEST_CASE("parse_graph errors") {
    CHECK(parse_failure("2 1\n0 0\n1 1\n0 2\n") == ErrorKind::IndexOutOfRange);
    CHECK(parse_failure("2 1\n0 0\n1 1\n1 1\n") == ErrorKind::IndexOutOfRange);
    CHECK(parse_failure("3 2\n0 0\n1 1\n2 5\n0 1\n1 0\n") == ErrorKind::DuplicateEdge);
    CHECK(parse_failure("1 0\n67108865 0\n") == ErrorKind::CoordinateOverflow);

    CHECK(parse_error_line("2 0\n0 0\n1 x\n") == 3);
    CHECK(parse_error_line("2 0\n0 0\n1 2 3\n") == 3);
    CHECK(parse_error_line("3 0\n0 0\n1 1\n") == 0);
    CHECK(parse_error_line("2 0\n0 0\n1 1\n5 5\n") == 4);
    CHECK(parse_error_line("-1 0\n") == 1);
}

TEST_CASE("parse_graph JSON form") {
    const auto g = parse_graph(R"({"points": [[0,0],[10,1],[11,10],[1,11]], "edges": [[0,2],[3,1]]})");
    CHECK(serialize_graph(g) == kDiagonals);

    const auto layered = parse_graph(R"({"points": [[0,0],[5,0],[1,9]], "edges": [[0,2],[1,2]], "layers": [0,0,1]})");
    REQUIRE(layered.has_layers());
    CHECK(*layered.layers() == std::vector<std::uint32_t>{0, 0, 1});

    CHECK(parse_failure(R"({"points": [[0,0]], "edges": [[0,1]]})") == ErrorKind::IndexOutOfRange);
    CHECK(parse_failure(R"({"points": [[0,0],[1,1]], "edges": [], "layers": [0]})") == ErrorKind::InvalidLayering);
    CHECK(parse_failure(R"({"points": [[0,"a"]], "edges": []})") == ErrorKind::ParseError);
    CHECK(parse_failure("{ not json") == ErrorKind::ParseError);
}

TEST_CASE("serialize_graph") {
    CHECK(serialize_graph(parse_graph(kDiagonals)) == kDiagonals);
    CHECK(serialize_graph(GeometricGraph({{7, -3}}, {})) == "1 0\n7 -3\n");
    // Edge order in the input does not affect the output.
    const GeometricGraph a(fixture_q(), {{1, 3}, {0, 2}});
    const GeometricGraph b(fixture_q(), {{2, 0}, {3, 1}});
    CHECK(a == b);
    CHECK(serialize_graph(a) == serialize_graph(b));
}

TEST_CASE("round trips") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const auto g = random_graph(4 + seed % 20, seed % 3 == 0 ? 0.2 : 0.6, seed);
        const auto text = serialize_graph(g);
        CHECK(parse_graph(text) == g);
        CHECK(serialize_graph(parse_graph(text)) == text);
        CHECK(parse_graph(serialize_graph_json(g)) == g);
        std::istringstream in(text);
        CHECK(read_graph(in) == g);
    }
    GeneratorSpec spec{Family::Layered, 0, {3, 4, 2}, 0.7, 32, 5};
    const auto layered = generate(spec);
    CHECK(parse_graph(serialize_graph_json(layered)) == layered);
}

TEST_CASE("GeometricGraph construction checks") {
    CHECK_THROWS_AS(GeometricGraph({{0, 0}, {1, 1}}, {{0, 0}}), Error);
    CHECK_THROWS_AS(GeometricGraph({{0, 0}, {1, 1}}, {{0, 1}, {1, 0}}), Error);
    CHECK_THROWS_AS(GeometricGraph({{0, kCoordLimit + 1}}, {}), Error);
    const GeometricGraph g({{0, 0}, {1, 1}, {2, 5}}, {{2, 0}});
    CHECK(g.edges()[0] == Edge{0, 2});
}

TEST_CASE("Adjacency") {
    const GeometricGraph g({{0, 0}, {1, 3}, {2, 1}, {3, 4}}, {{0, 1}, {0, 2}, {2, 3}});
    const Adjacency adj(g);
    CHECK(adj.degree(0) == 2);
    CHECK(adj.degree(3) == 1);
    CHECK(adj.adjacent(0, 1));
    CHECK(adj.adjacent(1, 0));
    CHECK_FALSE(adj.adjacent(1, 2));
    CHECK_FALSE(adj.adjacent(0, 0));
    auto nb = adj.neighbors(0);
    CHECK(std::vector<VertexId>(nb.begin(), nb.end()) == std::vector<VertexId>{1, 2});
}

TEST_CASE("generate examples") {
    CHECK(complete_graph(fixture_q()).edge_count() == 6);

    GeneratorSpec convex5{Family::ConvexComplete, 5, {}, 1.0, 1 << 20, 3};
    CHECK(oracle::crossings(generate(convex5)) == 5);

    // Complete 2x2 bilayer, re-placed canonically.
    GeneratorSpec bilayer{Family::Layered, 0, {2, 2}, 1.0, 16, 1};
    const auto g = generate(bilayer);
    CHECK(g.edge_count() == 4);
    const auto& layer = *g.layers();
    std::vector<Point> canon(4);
    Coord low = 0, high = 0;
    for (VertexId v = 0; v < 4; ++v) {
        const auto& row = layer[v] == 0 ? low : high;
        canon[v] = {row, layer[v] == 0 ? Coord{0} : Coord{7}};
        (layer[v] == 0 ? low : high) += 1;
    }
    CHECK(oracle::crossings(with_points(g, canon)) == 1);
}

TEST_CASE("generate is deterministic and valid") {
    for (auto family : {Family::Complete, Family::RandomEdges, Family::ConvexComplete}) {
        for (std::uint64_t seed = 0; seed < 10; ++seed) {
            GeneratorSpec spec{family, 3 + seed, {}, 0.5, 1 << 16, seed};
            const auto g = generate(spec);
            CHECK(g == generate(spec));
            CHECK(validate_general_position(g.points(), g.edges()).ok);
        }
    }
    GeneratorSpec a{Family::RandomEdges, 12, {}, 0.5, 1 << 16, 1};
    GeneratorSpec b = a;
    b.seed = 2;
    CHECK_FALSE(generate(a) == generate(b));
}

TEST_CASE("ConvexComplete: every point on the hull and C(n,4) crossings") {
    for (std::size_t n = 3; n <= 12; ++n) {
        GeneratorSpec spec{Family::ConvexComplete, n, {}, 1.0, 1 << 20, n};
        const auto g = generate(spec);
        for (std::size_t p = 0; p < n; ++p) CHECK(is_hull_vertex(g.points(), p));
        CHECK(oracle::crossings(g) == binomial(n, 4));
    }
}

TEST_CASE("layered generator output") {
    GeneratorSpec spec{Family::Layered, 0, {3, 5, 4}, 0.5, 20, 9};
    const auto g = generate(spec);
    const auto& layer = *g.layers();
    CHECK(g.vertex_count() == 12);
    for (const auto& e : g.edges()) CHECK(std::max(layer[e.a], layer[e.b]) - std::min(layer[e.a], layer[e.b]) == 1);
    for (VertexId u = 0; u < 12; ++u) {
        for (VertexId v = 0; v < 12; ++v) {
            if (layer[u] == layer[v]) CHECK(g.point(u).y == g.point(v).y);
            if (layer[u] == layer[v] && u != v) CHECK(std::abs(g.point(u).x - g.point(v).x) >= 2);
            if (layer[u] < layer[v]) CHECK(g.point(u).y < g.point(v).y);
        }
    }
}

TEST_CASE("generator spec errors") {
    auto kind_of = [](const GeneratorSpec& s) {
        try {
            generate(s);
        } catch (const Error& e) {
            return e.kind();
        }
        return ErrorKind::InternalInconsistency;
    };
    CHECK(kind_of({Family::Complete, 0, {}, 1.0, 100, 0}) == ErrorKind::InvalidSpec);
    CHECK(kind_of({Family::RandomEdges, 5, {}, 1.5, 100, 0}) == ErrorKind::InvalidSpec);
    CHECK(kind_of({Family::Layered, 0, {}, 1.0, 100, 0}) == ErrorKind::InvalidSpec);
    CHECK(kind_of({Family::Layered, 0, {2, 0}, 1.0, 100, 0}) == ErrorKind::InvalidSpec);
    CHECK(kind_of({Family::Complete, 5, {}, 1.0, kCoordLimit + 1, 0}) == ErrorKind::InvalidSpec);
    CHECK(family_from_string("layered") == Family::Layered);
    CHECK_THROWS_AS(family_from_string("grid"), Error);
}

TEST_CASE("convex_hull") {
    const std::vector<Point> pts{{0, 0}, {10, 1}, {5, 5}, {11, 10}, {1, 11}, {5, 0}};
    const auto hull = convex_hull(pts);
    CHECK(hull == std::vector<VertexId>{0, 5, 1, 3, 4});
    CHECK_FALSE(in_strictly_convex_position(pts));
    CHECK(in_strictly_convex_position(fixture_q()));
    CHECK_FALSE(in_strictly_convex_position(std::vector<Point>{{0, 0}, {2, 0}, {4, 0}, {2, 3}}));
}

TEST_CASE("convex_points") {
    const auto pts = convex_points(40, 1 << 20, 4);
    CHECK(pts.size() == 40);
    CHECK(in_strictly_convex_position(pts));
    CHECK(convex_points(40, 1 << 20, 4) == pts);
}
