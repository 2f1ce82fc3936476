#ifndef CROSSCOUNT_SVG_HPP
#define CROSSCOUNT_SVG_HPP

#include <cstddef>
#include <string>

#include "crosscount/graph.hpp"

namespace crosscount {

// Crossing markers are drawn only up to this many edges (the oracle is quadratic).
inline constexpr std::size_t kMaxMarkedEdges = 2000;

// Static SVG: one <line> per edge, one <circle> per vertex and a small red
// <circle> at every crossing found by the oracle.
std::string render_svg(const GeometricGraph& g);

}  // namespace crosscount

#endif  // CROSSCOUNT_SVG_HPP
