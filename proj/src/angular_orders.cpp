#include "crosscount/angular_orders.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "crosscount/error.hpp"
#include "crosscount/parallel.hpp"

namespace crosscount {

namespace {

struct Spoke {
    Direction dir;
    VertexId v;
};

[[noreturn]] void collinear(VertexId u, VertexId a, VertexId b) {
    throw Error(ErrorKind::GeneralPositionViolation, "vertices " + std::to_string(u) + ", " + std::to_string(a) +
                                                         ", " + std::to_string(b) + " are collinear");
}

}  // namespace

AngularTables angular_orders(const GeometricGraph& g, unsigned jobs) {
    const std::size_t n = g.vertex_count();
    const auto pts = g.points();

    AngularTables t;
    t.by_y_desc_.resize(n);
    std::iota(t.by_y_desc_.begin(), t.by_y_desc_.end(), VertexId{0});
    std::sort(t.by_y_desc_.begin(), t.by_y_desc_.end(), [&](VertexId a, VertexId b) { return pts[a].y > pts[b].y; });
    t.y_rank_.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (i > 0 && pts[t.by_y_desc_[i - 1]].y == pts[t.by_y_desc_[i]].y) {
            throw Error(ErrorKind::GeneralPositionViolation, "vertices " + std::to_string(t.by_y_desc_[i - 1]) +
                                                                 " and " + std::to_string(t.by_y_desc_[i]) +
                                                                 " share a y-coordinate");
        }
        t.y_rank_[t.by_y_desc_[i]] = i;
    }

    t.ccw_ = VertexRows(n);
    t.rotation_ = VertexRows(n);
    t.above_count_.assign(n, 0);
    if (n < 2) return t;

    parallel_chunks(n, jobs, [&](unsigned, std::size_t begin, std::size_t end) {
        std::vector<Spoke> spokes(n - 1);
        for (std::size_t ui = begin; ui < end; ++ui) {
            const auto u = static_cast<VertexId>(ui);
            std::size_t k = 0;
            for (VertexId v = 0; v < n; ++v) {
                if (v != u) spokes[k++] = {pts[v] - pts[u], v};
            }
            // Upper half plane first (dy > 0), then lower; by orientation within a half.
            std::sort(spokes.begin(), spokes.end(), [](const Spoke& a, const Spoke& b) {
                const bool lower_a = a.dir.dy < 0;
                const bool lower_b = b.dir.dy < 0;
                if (lower_a != lower_b) return lower_b;
                return cross(a.dir, b.dir) > 0;
            });
            std::size_t above = 0;
            while (above < spokes.size() && spokes[above].dir.dy > 0) ++above;
            for (std::size_t i = 1; i < spokes.size(); ++i) {
                if (i != above && cross(spokes[i - 1].dir, spokes[i].dir) == 0) collinear(u, spokes[i - 1].v, spokes[i].v);
            }

            auto ccw = t.ccw_.row(u);
            for (std::size_t i = 0; i < spokes.size(); ++i) ccw[i] = spokes[i].v;
            t.above_count_[u] = above;

            // Fold the lower half onto the upper one and merge by angle mod pi.
            auto rot = t.rotation_.row(u);
            std::size_t i = 0;
            std::size_t j = above;
            std::size_t out = 0;
            while (i < above && j < spokes.size()) {
                const Coord c = cross(spokes[i].dir, -spokes[j].dir);
                if (c == 0) collinear(u, spokes[i].v, spokes[j].v);
                rot[out++] = c > 0 ? spokes[i++].v : spokes[j++].v;
            }
            while (i < above) rot[out++] = spokes[i++].v;
            while (j < spokes.size()) rot[out++] = spokes[j++].v;
        }
    });
    return t;
}

}  // namespace crosscount
