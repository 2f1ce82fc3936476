#include "crosscount/rotation.hpp"

#include "crosscount/parallel.hpp"

namespace crosscount {

namespace {

RotationFrame horizontal_frame(const AngularTables& ang, const RayCounts& rays, VertexId u) {
    return {ang.rotation_order(u), Direction{1, 0}, rays.right[u], rays.left[u]};
}

struct Sums {
    std::uint64_t a = 0;
    std::uint64_t b = 0;
};

template <typename PerPair>
PatternTotals run(std::span<const Point> points, const Adjacency& adj, const AngularTables& ang,
                  const NeighborSplit& split, const RayCounts& rays, unsigned jobs, PerPair&& per_pair) {
    const std::size_t n = points.size();
    const unsigned workers = effective_jobs(n, jobs);
    std::vector<Sums> sums(workers);
    parallel_chunks(n, workers, [&](unsigned w, std::size_t begin, std::size_t end) {
        for (std::size_t ui = begin; ui < end; ++ui) {
            const auto u = static_cast<VertexId>(ui);
            rotate_around(u, points, horizontal_frame(ang, rays, u), split,
                          [&](VertexId v, std::int64_t a, std::int64_t b) {
                              per_pair(u, v, a, b);
                              if (adj.adjacent(u, v)) {
                                  sums[w].a += static_cast<std::uint64_t>(a);
                                  sums[w].b += static_cast<std::uint64_t>(b);
                              }
                          });
        }
    });
    Sums total;
    for (const auto& s : sums) {
        total.a += s.a;
        total.b += s.b;
    }
    return totals_from_patterns(total.a, total.b);
}

}  // namespace

ABTable rotational_AB(std::span<const Point> points, const Adjacency& adj, const AngularTables& ang,
                      const NeighborSplit& split, const RayCounts& rays, unsigned jobs) {
    const std::size_t n = points.size();
    ABTable table(n);
    table.totals_ = run(points, adj, ang, split, rays, jobs, [&](VertexId u, VertexId v, std::int64_t a, std::int64_t b) {
        table.a_[std::size_t{u} * n + v] = static_cast<std::uint32_t>(a);
        table.b_[std::size_t{u} * n + v] = static_cast<std::uint32_t>(b);
    });
    return table;
}

PatternTotals rotational_totals(std::span<const Point> points, const Adjacency& adj, const AngularTables& ang,
                                const NeighborSplit& split, const RayCounts& rays, unsigned jobs) {
    return run(points, adj, ang, split, rays, jobs, [](VertexId, VertexId, std::int64_t, std::int64_t) {});
}

}  // namespace crosscount
