#ifndef CROSSCOUNT_COUNT_HPP
#define CROSSCOUNT_COUNT_HPP

#include "crosscount/graph.hpp"
#include "crosscount/patterns.hpp"

namespace crosscount {

struct CountOptions {
    // Worker threads for the per-vertex loops; results do not depend on it.
    unsigned jobs = 1;
};

// Exact cr(G) in O(n^2 log n): validates general position, then
//   1. angular orders around every vertex
//   2. neighbour splits for every ordered pair
//   3. horizontal ray crossing totals via the marked tree
//   4. rotational recurrence for A(u, v), B(u, v)
// and returns A(G), B(G), (A(G) - B(G)) / 4.
// Throws GeneralPositionViolation or InternalInconsistency.
PatternTotals count_crossings(const GeometricGraph& g, const CountOptions& options = {});

}  // namespace crosscount

#endif  // CROSSCOUNT_COUNT_HPP
