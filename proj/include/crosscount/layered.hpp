#ifndef CROSSCOUNT_LAYERED_HPP
#define CROSSCOUNT_LAYERED_HPP

#include <cstdint>
#include <vector>

#include "crosscount/graph.hpp"
#include "crosscount/patterns.hpp"

namespace crosscount {

// The subgraph induced by two consecutive layers. Only the left-to-right order
// within each layer matters for its crossings.
struct BilayerView {
    std::vector<VertexId> top;     // upper layer, increasing x
    std::vector<VertexId> bottom;  // lower layer, increasing x
    struct Link {
        std::uint32_t top = 0;     // position in `top`
        std::uint32_t bottom = 0;  // position in `bottom`
    };
    std::vector<Link> edges;
};

// Throws InvalidLayering unless layers are present, numbered 0..r-1 without
// gaps, each layer shares one y, y grows with the layer index, x is distinct
// within a layer, and every edge joins consecutive layers.
void check_layering(const GeometricGraph& g);

// One view per consecutive layer pair, bottom pair first. Checks the layering.
std::vector<BilayerView> bilayer_views(const GeometricGraph& g);

inline constexpr int kEmbedRetries = 32;

// Places the top layer left to right, then the bottom layer right to left,
// around an integer convex curve. Two links cross in the bilayer iff their
// endpoints interleave on the cycle, so crossings are preserved pair for pair.
// Vertex i < top.size() is top[i]; vertex top.size() + j is bottom[j].
// Throws EmbeddingFailed if no placement in general position is found.
GeometricGraph bilayer_embed(const BilayerView& view, std::uint64_t seed = 0);

// Sum over consecutive layer pairs of the convex count of each embedded
// bilayer. A and B are those of the embeddings. Throws InvalidLayering.
PatternTotals count_crossings_layered(const GeometricGraph& g, unsigned jobs = 1);

}  // namespace crosscount

#endif  // CROSSCOUNT_LAYERED_HPP
