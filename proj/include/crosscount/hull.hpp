#ifndef CROSSCOUNT_HULL_HPP
#define CROSSCOUNT_HULL_HPP

#include <span>
#include <vector>

#include "crosscount/geometry.hpp"

namespace crosscount {

// Indices of the strict convex hull vertices (collinear boundary points
// dropped), counterclockwise, starting at the lexicographically smallest point.
// Monotone chain, O(n log n).
std::vector<VertexId> convex_hull(std::span<const Point> points);

// Every point is a hull vertex, no duplicates, no three collinear.
bool in_strictly_convex_position(std::span<const Point> points);

}  // namespace crosscount

#endif  // CROSSCOUNT_HULL_HPP
