#include "crosscount/neighbor_splits.hpp"

#include <string>

#include "crosscount/error.hpp"
#include "crosscount/parallel.hpp"

namespace crosscount {

NeighborSplit neighbor_splits(std::span<const Point> points, const Adjacency& adj, const VertexRows& ccw,
                              unsigned jobs) {
    const std::size_t n = points.size();
    NeighborSplit split(n);
    if (n < 2) return split;
    const std::size_t k = n - 1;

    parallel_chunks(n, jobs, [&](unsigned, std::size_t begin, std::size_t end) {
        std::vector<Direction> dir(k);
        // prefix[i] = neighbours among positions [0, i) of the doubled row.
        std::vector<std::uint32_t> prefix(2 * k + 1);
        for (std::size_t vi = begin; vi < end; ++vi) {
            const auto v = static_cast<VertexId>(vi);
            const auto row = ccw.row(v);
            const Point pv = points[v];
            for (std::size_t i = 0; i < k; ++i) dir[i] = points[row[i]] - pv;
            prefix[0] = 0;
            for (std::size_t i = 0; i < 2 * k; ++i) prefix[i + 1] = prefix[i] + (adj.adjacent(v, row[i % k]) ? 1 : 0);
            auto d = [&](std::size_t i) -> const Direction& { return dir[i % k]; };

            // w is right of u->v iff w is less than a half-turn counterclockwise
            // from u around v; left iff less than a half-turn clockwise.
            std::size_t ahead_end = 0;
            std::size_t behind_begin = 1;
            for (std::size_t i = 0; i < k; ++i) {
                if (ahead_end < i) ahead_end = i;
                while (ahead_end + 1 < i + k && cross(d(i), d(ahead_end + 1)) > 0) ++ahead_end;
                const std::uint32_t right = prefix[ahead_end + 1] - prefix[i + 1];

                const std::size_t at = i + k;
                if (behind_begin < at - k + 1) behind_begin = at - k + 1;
                while (behind_begin < at && cross(d(behind_begin), d(at)) <= 0) ++behind_begin;
                const std::uint32_t left = prefix[at] - prefix[behind_begin];

                const VertexId u = row[i];
                const std::size_t expected = adj.degree(v) - (adj.adjacent(v, u) ? 1 : 0);
                if (left + right != expected) {
                    throw Error(ErrorKind::GeneralPositionViolation,
                                "a neighbour of vertex " + std::to_string(v) + " lies on the line through " +
                                    std::to_string(u) + " and " + std::to_string(v));
                }
                split.set(u, v, left, right);
            }
        }
    });
    return split;
}

}  // namespace crosscount
