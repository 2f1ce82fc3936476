#include "crosscount/convex.hpp"

#include <algorithm>

#include "crosscount/error.hpp"
#include "crosscount/hull.hpp"
#include "crosscount/neighbor_splits.hpp"
#include "crosscount/parallel.hpp"
#include "crosscount/rotation.hpp"

namespace crosscount {

ConvexOrder convex_order(const GeometricGraph& g) {
    const auto pts = g.points();
    const std::size_t n = pts.size();
    if (!in_strictly_convex_position(pts)) {
        throw Error(ErrorKind::NotConvexPosition, "some vertex is interior to, or collinear on, the convex hull");
    }

    ConvexOrder out;
    if (n <= 2) {
        for (VertexId v = 0; v < n; ++v) out.hull_cyclic.push_back(v);
    } else {
        out.hull_cyclic = convex_hull(pts);
        std::rotate(out.hull_cyclic.begin(), std::min_element(out.hull_cyclic.begin(), out.hull_cyclic.end()),
                    out.hull_cyclic.end());
    }

    out.support.resize(n, Direction{1, 0});
    if (n == 2) {
        // Perpendicular to the single chord, other vertex on the left.
        for (VertexId u = 0; u < 2; ++u) {
            const Direction d = pts[1 - u] - pts[u];
            out.support[u] = {d.dy, -d.dx};
        }
    } else if (n > 2) {
        for (std::size_t i = 0; i < n; ++i) {
            const VertexId prev = out.hull_cyclic[(i + n - 1) % n];
            const VertexId next = out.hull_cyclic[(i + 1) % n];
            out.support[out.hull_cyclic[i]] = pts[next] - pts[prev];
        }
    }
    return out;
}

VertexRows hull_rotation_rows(const ConvexOrder& order) {
    const std::size_t n = order.hull_cyclic.size();
    VertexRows rows(n);
    for (std::size_t i = 0; i < n; ++i) {
        auto row = rows.row(order.hull_cyclic[i]);
        for (std::size_t j = 1; j < n; ++j) row[j - 1] = order.hull_cyclic[(i + j) % n];
    }
    return rows;
}

PatternTotals count_crossings_convex(const GeometricGraph& g, unsigned jobs) {
    const auto pts = g.points();
    const std::size_t n = pts.size();
    const ConvexOrder order = convex_order(g);
    const VertexRows rows = hull_rotation_rows(order);
    const Adjacency adj(g);
    const NeighborSplit split = neighbor_splits(pts, adj, rows, jobs);

    const unsigned workers = effective_jobs(n, jobs);
    std::vector<std::uint64_t> a_sum(workers, 0);
    std::vector<std::uint64_t> b_sum(workers, 0);
    parallel_chunks(n, workers, [&](unsigned w, std::size_t begin, std::size_t end) {
        for (std::size_t ui = begin; ui < end; ++ui) {
            const auto u = static_cast<VertexId>(ui);
            // All other vertices lie in the open half-plane left of the
            // supporting line, so the rotation order is the hull order itself.
            const RotationFrame frame{rows.row(u), order.support[u], 0, 0};
            rotate_around(u, pts, frame, split, [&](VertexId v, std::int64_t a, std::int64_t b) {
                if (adj.adjacent(u, v)) {
                    a_sum[w] += static_cast<std::uint64_t>(a);
                    b_sum[w] += static_cast<std::uint64_t>(b);
                }
            });
        }
    });
    std::uint64_t a_total = 0;
    std::uint64_t b_total = 0;
    for (unsigned w = 0; w < workers; ++w) {
        a_total += a_sum[w];
        b_total += b_sum[w];
    }
    return totals_from_patterns(a_total, b_total);
}

}  // namespace crosscount
