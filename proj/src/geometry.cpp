#include "crosscount/geometry.hpp"

#include <algorithm>

namespace crosscount {

namespace {

__extension__ typedef __int128 Wide;

int sign(Wide v) { return (v > 0) - (v < 0); }

Wide wide_cross(const Direction& a, const Direction& b) {
    return Wide{a.dx} * b.dy - Wide{a.dy} * b.dx;
}

Wide wide_dot(const Direction& a, const Direction& b) {
    return Wide{a.dx} * b.dx + Wide{a.dy} * b.dy;
}

}  // namespace

bool segments_cross(const Segment& s1, const Segment& s2) {
    if (s1.p == s2.p || s1.p == s2.q || s1.q == s2.p || s1.q == s2.q) return false;

    const int o1 = static_cast<int>(orientation(s1.p, s1.q, s2.p));
    const int o2 = static_cast<int>(orientation(s1.p, s1.q, s2.q));
    const int o3 = static_cast<int>(orientation(s2.p, s2.q, s1.p));
    const int o4 = static_cast<int>(orientation(s2.p, s2.q, s1.q));

    if (o1 * o2 < 0 && o3 * o4 < 0) return true;
    if (o1 != 0 || o2 != 0) return false;

    // All four points on one line: the open segments share a point iff their
    // projections overlap with positive length.
    const bool use_x = s1.p.x != s1.q.x;
    auto key = [use_x](const Point& p) { return use_x ? p.x : p.y; };
    const Coord lo1 = std::min(key(s1.p), key(s1.q));
    const Coord hi1 = std::max(key(s1.p), key(s1.q));
    const Coord lo2 = std::min(key(s2.p), key(s2.q));
    const Coord hi2 = std::max(key(s2.p), key(s2.q));
    return std::max(lo1, lo2) < std::min(hi1, hi2);
}

bool ray_hits_segment(const Ray& r, const Segment& s) {
    const Direction to_p = s.p - r.apex;
    const Direction to_q = s.q - r.apex;
    const int sp = sign(wide_cross(r.dir, to_p));
    const int sq = sign(wide_cross(r.dir, to_q));

    if (sp * sq > 0) return false;

    if (sp == 0 && sq == 0) {
        // Segment lies on the ray's supporting line.
        return wide_dot(r.dir, to_p) > 0 || wide_dot(r.dir, to_q) > 0;
    }

    // The supporting line of the ray meets the segment at apex + t * dir with
    // t = cross(q - p, p - apex) / cross(q - p, dir); the hit needs t > 0.
    const Direction along = s.q - s.p;
    const int num = sign(wide_cross(along, to_p));
    const int den = sign(wide_cross(along, r.dir));
    return num != 0 && num == den;
}

int compare_angle(const Direction& a, const Direction& b) {
    auto half = [](const Direction& d) { return (d.dy > 0 || (d.dy == 0 && d.dx > 0)) ? 0 : 1; };
    const int ha = half(a);
    const int hb = half(b);
    if (ha != hb) return ha - hb;
    return -sign(wide_cross(a, b));
}

}  // namespace crosscount
