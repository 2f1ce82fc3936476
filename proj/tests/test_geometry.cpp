#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <random>
#include <tuple>

#include "crosscount/error.hpp"
#include "crosscount/general_position.hpp"
#include "crosscount/geometry.hpp"
#include "support.hpp"

using namespace crosscount;
using namespace crosscount::test;

namespace {

Point random_point(std::mt19937_64& rng, Coord range) {
    return {static_cast<Coord>(rng() % (2 * range + 1)) - range, static_cast<Coord>(rng() % (2 * range + 1)) - range};
}

Point rotate90(const Point& p) { return {-p.y, p.x}; }

}  // namespace

TEST_CASE("orientation on fixture Q") {
    CHECK(orientation(q0, q1, q2) == Orientation::CCW);
    CHECK(orientation({0, 0}, {1, 1}, {2, 2}) == Orientation::Collinear);
    CHECK(orientation(q0, q2, q1) == Orientation::CW);
}

TEST_CASE("orientation matches a long-hand determinant at the coordinate bound") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 2000; ++i) {
        const Point a = random_point(rng, kCoordLimit), b = random_point(rng, kCoordLimit), c = random_point(rng, kCoordLimit);
        CHECK(static_cast<int>(orientation(a, b, c)) == turn(a, b, c));
    }
    const Point lo{-kCoordLimit, -kCoordLimit}, hi{kCoordLimit, kCoordLimit}, side{kCoordLimit, -kCoordLimit};
    CHECK(orientation(lo, side, hi) == Orientation::CCW);
}

TEST_CASE("orientation symmetries") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 1000; ++i) {
        const Point a = random_point(rng, 50), b = random_point(rng, 50), c = random_point(rng, 50);
        const Point t{static_cast<Coord>(rng() % 1000), -static_cast<Coord>(rng() % 1000)};
        const int o = static_cast<int>(orientation(a, b, c));
        CHECK(o == -static_cast<int>(orientation(a, c, b)));
        CHECK(o == static_cast<int>(orientation({a.x + t.x, a.y + t.y}, {b.x + t.x, b.y + t.y}, {c.x + t.x, c.y + t.y})));
        CHECK(o == static_cast<int>(orientation(rotate90(a), rotate90(b), rotate90(c))));
    }
}

TEST_CASE("segments_cross examples") {
    CHECK(segments_cross({q0, q2}, {q1, q3}));
    CHECK_FALSE(segments_cross({q0, q1}, {q1, q2}));
    CHECK_FALSE(segments_cross({q0, q1}, {q2, q3}));
}

TEST_CASE("segments_cross on touching and collinear configurations") {
    // T-junction: the open segments share no point.
    CHECK_FALSE(segments_cross({{0, 0}, {10, 0}}, {{5, 0}, {5, 5}}));
    // Collinear overlapping and collinear end-to-end.
    CHECK(segments_cross({{0, 0}, {4, 4}}, {{2, 2}, {6, 6}}));
    CHECK_FALSE(segments_cross({{0, 0}, {2, 2}}, {{3, 3}, {6, 6}}));
    CHECK_FALSE(segments_cross({{0, 0}, {0, 3}}, {{0, 4}, {0, 9}}));
}

TEST_CASE("segments_cross is symmetric") {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 3000; ++i) {
        const Segment s{random_point(rng, 8), random_point(rng, 8)};
        const Segment t{random_point(rng, 8), random_point(rng, 8)};
        CHECK(segments_cross(s, t) == segments_cross(t, s));
        CHECK(segments_cross(s, t) == segments_cross({s.q, s.p}, t));
    }
}

TEST_CASE("ray_hits_segment examples") {
    CHECK(ray_hits_segment({q0, {11, 10}}, {q1, q3}));
    CHECK_FALSE(ray_hits_segment({q0, {-11, -10}}, {q1, q3}));
    CHECK(ray_hits_segment({q1, {-1, 0}}, {q0, q2}));
}

TEST_CASE("ray_hits_segment boundary cases") {
    // Open at the apex: a segment through the apex only is not hit.
    CHECK_FALSE(ray_hits_segment({{0, 0}, {1, 0}}, {{0, -1}, {0, 1}}));
    // Closed segment: an endpoint on the ray counts.
    CHECK(ray_hits_segment({{0, 0}, {1, 0}}, {{3, 0}, {3, 5}}));
    // Segment on the supporting line, ahead and behind.
    CHECK(ray_hits_segment({{0, 0}, {1, 1}}, {{2, 2}, {3, 3}}));
    CHECK_FALSE(ray_hits_segment({{0, 0}, {1, 1}}, {{-2, -2}, {-3, -3}}));
    CHECK(ray_hits_segment({{0, 0}, {1, 1}}, {{-2, -2}, {3, 3}}));
}

TEST_CASE("ray_hits_segment ignores the length of the direction") {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 3000; ++i) {
        const Point apex = random_point(rng, 20);
        Direction d{static_cast<Coord>(rng() % 21) - 10, static_cast<Coord>(rng() % 21) - 10};
        if (d.dx == 0 && d.dy == 0) continue;
        const Segment s{random_point(rng, 20), random_point(rng, 20)};
        CHECK(ray_hits_segment({apex, d}, s) == ray_hits_segment({apex, {2 * d.dx, 2 * d.dy}}, s));
    }
}

TEST_CASE("crossing edges: each endpoint's forward ray hits, backward ray misses") {
    std::mt19937_64 rng(9);
    int crossing_pairs = 0;
    for (int i = 0; i < 4000; ++i) {
        const Point a = random_point(rng, 1000), b = random_point(rng, 1000);
        const Point c = random_point(rng, 1000), d = random_point(rng, 1000);
        if (!validate_general_position(std::vector<Point>{a, b, c, d}).ok) continue;
        if (!segments_cross({a, b}, {c, d})) continue;
        ++crossing_pairs;
        const Segment e{a, b}, f{c, d};
        for (auto [u, v, other] : {std::tuple{a, b, f}, std::tuple{b, a, f}, std::tuple{c, d, e}, std::tuple{d, c, e}}) {
            CHECK(ray_hits_segment({u, v - u}, other));
            CHECK_FALSE(ray_hits_segment({u, u - v}, other));
        }
    }
    CHECK(crossing_pairs > 100);
}

TEST_CASE("compare_angle orders by angle from +x") {
    CHECK(compare_angle({1, 0}, {1, 1}) < 0);
    CHECK(compare_angle({-1, 1}, {-1, -1}) < 0);
    CHECK(compare_angle({1, -1}, {1, 0}) > 0);
    CHECK(compare_angle({2, 2}, {1, 1}) == 0);
    CHECK(compare_angle({-1, 0}, {0, -1}) < 0);
}

TEST_CASE("validate_general_position examples") {
    const auto q = fixture_q();
    const auto k4 = complete_edges(4);
    CHECK(validate_general_position(q, k4).ok);

    const auto col = validate_general_position(std::vector<Point>{{0, 0}, {1, 1}, {2, 2}, {5, 9}});
    REQUIRE_FALSE(col.ok);
    CHECK(col.has(ViolationKind::CollinearTriple));
    const Violation expected{ViolationKind::CollinearTriple, {0, 1, 2}};
    CHECK(std::find(col.violations.begin(), col.violations.end(), expected) != col.violations.end());

    const auto dup = validate_general_position(std::vector<Point>{{0, 0}, {0, 5}, {3, 2}});
    REQUIRE_FALSE(dup.ok);
    CHECK(dup.violations.front() == Violation{ViolationKind::DuplicateX, {0, 1}});
}

TEST_CASE("validate_general_position reports each violation kind") {
    SUBCASE("duplicate y") {
        const auto r = validate_general_position(std::vector<Point>{{0, 3}, {5, 3}, {2, 9}});
        CHECK(r.has(ViolationKind::DuplicateY));
        CHECK_FALSE(r.has(ViolationKind::DuplicateX));
    }
    SUBCASE("parallel edges") {
        const std::vector<Point> pts{{0, 0}, {4, 1}, {1, 5}, {5, 6}};
        const std::vector<Edge> edges{{0, 1}, {2, 3}};
        const auto r = validate_general_position(pts, edges);
        CHECK(r.has(ViolationKind::ParallelEdges));
        CHECK(r.violations.size() == 1);
        CHECK(r.violations[0].witnesses == std::vector<std::size_t>{0, 1});
    }
    SUBCASE("ok iff no violations") {
        const auto r = validate_general_position(std::vector<Point>{{0, 0}, {3, 1}, {1, 4}});
        CHECK(r.ok);
        CHECK(r.violations.empty());
        CHECK(r.summary() == "ok");
    }
}

TEST_CASE("validate agrees with a triple-loop check on small random sets") {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 300; ++trial) {
        std::vector<Point> pts(6);
        for (auto& p : pts) p = random_point(rng, 4);
        bool collinear = false, dup_x = false, dup_y = false;
        for (std::size_t i = 0; i < pts.size(); ++i) {
            for (std::size_t j = i + 1; j < pts.size(); ++j) {
                dup_x |= pts[i].x == pts[j].x;
                dup_y |= pts[i].y == pts[j].y;
                for (std::size_t k = j + 1; k < pts.size(); ++k) collinear |= turn(pts[i], pts[j], pts[k]) == 0;
            }
        }
        const auto r = validate_general_position(pts);
        CHECK(r.has(ViolationKind::DuplicateX) == dup_x);
        CHECK(r.has(ViolationKind::DuplicateY) == dup_y);
        CHECK(r.has(ViolationKind::CollinearTriple) == collinear);
        CHECK(r.ok == !(dup_x || dup_y || collinear));
    }
}

TEST_CASE("perturb") {
    const auto q = fixture_q();
    const auto k4 = complete_edges(4);

    SUBCASE("valid input with exponent 0 is returned unchanged") {
        CHECK(perturb(q, k4, 1, 0) == q);
    }
    SUBCASE("valid input is only scaled") {
        const auto out = perturb(q, k4, 1, 3);
        for (std::size_t i = 0; i < q.size(); ++i) CHECK(out[i] == Point{q[i].x * 8, q[i].y * 8});
    }
    SUBCASE("layered input with shared y becomes valid") {
        const std::vector<Point> pts{{0, 0}, {3, 0}, {7, 0}, {1, 50}, {5, 50}, {6, 50}};
        const std::vector<Edge> edges{{0, 3}, {0, 4}, {1, 5}, {2, 3}, {2, 5}};
        const auto out = perturb(pts, edges, 42, 4);
        CHECK(validate_general_position(out, edges).ok);
        for (std::size_t i = 0; i < pts.size(); ++i) {
            CHECK(std::abs(out[i].x - 16 * pts[i].x) < 8);
            CHECK(std::abs(out[i].y - 16 * pts[i].y) < 8);
        }
        CHECK(perturb(pts, edges, 42, 4) == out);
    }
    SUBCASE("errors") {
        CHECK_THROWS_AS(perturb(std::vector<Point>{{kCoordLimit, 0}}, {}, 0, 1), Error);
        CHECK_THROWS_AS(perturb(q, k4, 0, 27), Error);
        // All points equal: exponent 1 admits only the zero offset.
        const std::vector<Point> same{{1, 1}, {1, 1}, {1, 1}};
        try {
            perturb(same, {}, 0, 1);
            FAIL("expected PerturbationFailed");
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::PerturbationFailed);
        }
    }
}

TEST_CASE("perturb preserves crossings of valid drawings") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto g = random_graph(12, 0.5, seed, 1000);
        const auto moved = perturb(g.points(), g.edges(), seed, 2);
        for (std::size_t i = 0; i < g.edge_count(); ++i) {
            for (std::size_t j = i + 1; j < g.edge_count(); ++j) {
                const auto e = g.edges()[i], f = g.edges()[j];
                CHECK(segments_cross(g.segment(e), g.segment(f)) ==
                      segments_cross({moved[e.a], moved[e.b]}, {moved[f.a], moved[f.b]}));
            }
        }
    }
}
