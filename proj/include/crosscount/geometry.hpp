#ifndef CROSSCOUNT_GEOMETRY_HPP
#define CROSSCOUNT_GEOMETRY_HPP

#include <cstdint>
#include <compare>

namespace crosscount {

using Coord = std::int64_t;
using VertexId = std::uint32_t;

// |x|, |y| <= kCoordLimit keeps every orientation determinant inside int64.
inline constexpr Coord kCoordLimit = Coord{1} << 26;

struct Point {
    Coord x = 0;
    Coord y = 0;

    friend constexpr bool operator==(const Point&, const Point&) = default;
};

struct Direction {
    Coord dx = 0;
    Coord dy = 0;

    friend constexpr bool operator==(const Direction&, const Direction&) = default;
};

constexpr Direction operator-(const Point& a, const Point& b) { return {a.x - b.x, a.y - b.y}; }
constexpr Direction operator-(const Direction& d) { return {-d.dx, -d.dy}; }

constexpr bool in_bounds(const Point& p) {
    return p.x >= -kCoordLimit && p.x <= kCoordLimit && p.y >= -kCoordLimit && p.y <= kCoordLimit;
}

// Exact for differences of in-bounds points.
constexpr Coord cross(const Direction& a, const Direction& b) { return a.dx * b.dy - a.dy * b.dx; }

// Vertex index pair; the graph model keeps a < b.
struct Edge {
    VertexId a = 0;
    VertexId b = 0;

    friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

struct Segment {
    Point p;
    Point q;
};

// Open at the apex.
struct Ray {
    Point apex;
    Direction dir;
};

enum class Orientation : int { CW = -1, Collinear = 0, CCW = 1 };

constexpr Orientation orientation(const Point& p, const Point& q, const Point& r) {
    const Coord det = cross(q - p, r - p);
    return det > 0 ? Orientation::CCW : (det < 0 ? Orientation::CW : Orientation::Collinear);
}

// True iff the open segments share a point. Segments with a common endpoint never cross.
bool segments_cross(const Segment& s1, const Segment& s2);

// True iff the open ray meets the closed segment.
bool ray_hits_segment(const Ray& r, const Segment& s);

// Angular comparison of two nonzero directions by angle in [0, 2*pi) measured from +x.
// Returns <0, 0 or >0. Zero means same angle.
int compare_angle(const Direction& a, const Direction& b);

}  // namespace crosscount

#endif  // CROSSCOUNT_GEOMETRY_HPP
