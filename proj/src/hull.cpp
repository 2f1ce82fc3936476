#include "crosscount/hull.hpp"

#include <algorithm>
#include <numeric>

namespace crosscount {

std::vector<VertexId> convex_hull(std::span<const Point> points) {
    const std::size_t n = points.size();
    std::vector<VertexId> idx(n);
    std::iota(idx.begin(), idx.end(), VertexId{0});
    std::sort(idx.begin(), idx.end(), [&](VertexId a, VertexId b) {
        const Point& p = points[a];
        const Point& q = points[b];
        return p.x != q.x ? p.x < q.x : p.y < q.y;
    });
    idx.erase(std::unique(idx.begin(), idx.end(), [&](VertexId a, VertexId b) { return points[a] == points[b]; }),
              idx.end());
    if (idx.size() < 3) return idx;

    std::vector<VertexId> hull(2 * idx.size());
    std::size_t k = 0;
    auto turns_left = [&](VertexId a, VertexId b, VertexId c) {
        return orientation(points[a], points[b], points[c]) == Orientation::CCW;
    };
    for (VertexId v : idx) {
        while (k >= 2 && !turns_left(hull[k - 2], hull[k - 1], v)) --k;
        hull[k++] = v;
    }
    const std::size_t lower = k + 1;
    for (auto it = idx.rbegin() + 1; it != idx.rend(); ++it) {
        while (k >= lower && !turns_left(hull[k - 2], hull[k - 1], *it)) --k;
        hull[k++] = *it;
    }
    hull.resize(k - 1);
    return hull;
}

bool in_strictly_convex_position(std::span<const Point> points) {
    if (points.size() <= 2) {
        return points.size() < 2 || points[0] != points[1];
    }
    return convex_hull(points).size() == points.size();
}

}  // namespace crosscount
