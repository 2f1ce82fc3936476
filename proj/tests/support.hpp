#ifndef CROSSCOUNT_TESTS_SUPPORT_HPP
#define CROSSCOUNT_TESTS_SUPPORT_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "crosscount/general_position.hpp"
#include "crosscount/generate.hpp"
#include "crosscount/graph.hpp"

namespace crosscount::test {

// Fixture Q: a convex quadrilateral.
inline const Point q0{0, 0}, q1{10, 1}, q2{11, 10}, q3{1, 11};

inline std::vector<Point> fixture_q() { return {q0, q1, q2, q3}; }

inline GeometricGraph k4q() { return complete_graph(fixture_q()); }

// Fixture L: segment ab and segment cd, where the line through c and d meets ab
// but the segment cd stops short of it.
inline GeometricGraph fixture_l() {
    return GeometricGraph({{0, 0}, {10, 1}, {5, 7}, {6, 3}}, {{0, 1}, {2, 3}});
}

inline GeometricGraph random_graph(std::size_t n, double density, std::uint64_t seed, Coord range = 1 << 20) {
    GeneratorSpec spec;
    spec.family = density >= 1.0 ? Family::Complete : Family::RandomEdges;
    spec.n = n;
    spec.density = density;
    spec.range = range;
    spec.seed = seed;
    return generate(spec);
}

inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// Test-side sign of the cross product, written out long-hand.
inline int turn(const Point& a, const Point& b, const Point& c) {
    const long double v = static_cast<long double>(b.x - a.x) * static_cast<long double>(c.y - a.y) -
                          static_cast<long double>(b.y - a.y) * static_cast<long double>(c.x - a.x);
    return (v > 0) - (v < 0);
}

}  // namespace crosscount::test

#endif  // CROSSCOUNT_TESTS_SUPPORT_HPP
