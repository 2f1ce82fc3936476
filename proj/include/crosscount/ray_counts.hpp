#ifndef CROSSCOUNT_RAY_COUNTS_HPP
#define CROSSCOUNT_RAY_COUNTS_HPP

#include <cstdint>
#include <vector>

#include "crosscount/angular_orders.hpp"
#include "crosscount/graph.hpp"
#include "crosscount/marked_tree.hpp"

namespace crosscount {

enum class RaySide { Left, Right };

// Per vertex v: edges crossing the open horizontal rays from v.
struct RayCounts {
    std::vector<std::uint64_t> left;
    std::vector<std::uint64_t> right;
};

// HorizontalRayCrossings(u): for each v below u, in below_by_y(u) order, the
// number of edges incident to u that cross the horizontal ray from v on `side`.
// O(n log n).
std::vector<std::uint64_t> horizontal_ray_pass(const Adjacency& adj, const AngularTables& ang, VertexId u,
                                               RaySide side);

// Step 3: sums the per-apex passes over every u above v. O(n^2 log n).
RayCounts horizontal_ray_counts(const Adjacency& adj, const AngularTables& ang, unsigned jobs = 1);

}  // namespace crosscount

#endif  // CROSSCOUNT_RAY_COUNTS_HPP
