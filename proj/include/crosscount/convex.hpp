#ifndef CROSSCOUNT_CONVEX_HPP
#define CROSSCOUNT_CONVEX_HPP

#include <vector>

#include "crosscount/angular_orders.hpp"
#include "crosscount/graph.hpp"
#include "crosscount/patterns.hpp"

namespace crosscount {

struct ConvexOrder {
    // Counterclockwise hull order, starting at vertex index min.
    std::vector<VertexId> hull_cyclic;
    // Indexed by vertex id: next(u) - prev(u). The line through u with this
    // direction has every other vertex strictly on its left.
    std::vector<Direction> support;
};

// O(n log n). Throws NotConvexPosition unless every vertex is a strict hull vertex.
ConvexOrder convex_order(const GeometricGraph& g);

// Counterclockwise order around each vertex read off the hull: the hull cycle
// starting after u. O(n) per vertex.
VertexRows hull_rotation_rows(const ConvexOrder& order);

// Steps 2 and 4 only. Both rays along each vertex's supporting line miss the
// hull, so their crossing totals are zero and Step 3 disappears. O(n^2) after
// the hull. Throws NotConvexPosition.
PatternTotals count_crossings_convex(const GeometricGraph& g, unsigned jobs = 1);

}  // namespace crosscount

#endif  // CROSSCOUNT_CONVEX_HPP
