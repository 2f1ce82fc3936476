#ifndef CROSSCOUNT_GENERATE_HPP
#define CROSSCOUNT_GENERATE_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "crosscount/graph.hpp"

namespace crosscount {

enum class Family { Complete, RandomEdges, ConvexComplete, Layered };

const char* to_string(Family family) noexcept;
Family family_from_string(std::string_view name);

struct GeneratorSpec {
    Family family = Family::Complete;
    // Vertex count for every family but Layered.
    std::size_t n = 0;
    // Layered only, bottom layer first.
    std::vector<std::size_t> layer_sizes;
    // Edge probability for RandomEdges and Layered.
    double density = 1.0;
    // Coordinates are drawn from [0, range). For Layered this is the x range,
    // which only even values use; layers are stacked kLayerGapFactor * range apart.
    Coord range = Coord{1} << 24;
    std::uint64_t seed = 0;
};

// Layered x-coordinates are even, so after scaling by S = 2^k and offsetting by
// less than S/2 two vertices of one layer remain more than S apart. Layers are
// kLayerGapFactor * range apart, so inside the band of height S that the
// offsets sweep around a layer an edge moves by less than S/2 in x. No edge
// can pass another's endpoint, and perturb() keeps every crossing of a
// generated layered drawing for any exponent.
inline constexpr Coord kLayerGapFactor = 4;

// Perturbation exponent the layered family leaves coordinate room for. Large
// scales make distinct y-coordinates within a wide layer likely.
inline constexpr int kLayeredPerturbExponent = 14;
inline constexpr int kGeneratorRetries = 64;

// Deterministic in `spec`. Every family except Layered returns a graph that
// passes validate_general_position; Layered output carries layer metadata and
// shares y within each layer. Throws InvalidSpec or GenerationFailed.
GeometricGraph generate(const GeneratorSpec& spec);

GeometricGraph complete_graph(std::vector<Point> points);
std::vector<Edge> complete_edges(std::size_t n);

// n integer points in strictly convex position, counterclockwise, near the
// circle of the given radius centred at (radius, radius). Strict convexity is
// checked; general position is not.
std::vector<Point> convex_points(std::size_t n, Coord radius, std::uint64_t seed);

}  // namespace crosscount

#endif  // CROSSCOUNT_GENERATE_HPP
