#ifndef CROSSCOUNT_GRAPH_HPP
#define CROSSCOUNT_GRAPH_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "crosscount/geometry.hpp"

namespace crosscount {

// A straight-line drawing: vertex i sits at points()[i], edges are index pairs
// stored with a < b. Immutable after construction.
//
// The constructor enforces the structural invariants (indices in range, no
// loops, no duplicate edges, coordinates in bounds, one layer index per
// vertex). General position and layer geometry are checked separately.
class GeometricGraph {
public:
    GeometricGraph() = default;
    GeometricGraph(std::vector<Point> points, std::vector<Edge> edges,
                   std::optional<std::vector<std::uint32_t>> layers = std::nullopt);

    std::size_t vertex_count() const noexcept { return points_.size(); }
    std::size_t edge_count() const noexcept { return edges_.size(); }

    std::span<const Point> points() const noexcept { return points_; }
    std::span<const Edge> edges() const noexcept { return edges_; }
    const Point& point(VertexId v) const { return points_[v]; }
    Segment segment(const Edge& e) const { return {points_[e.a], points_[e.b]}; }

    bool has_layers() const noexcept { return layers_.has_value(); }
    const std::optional<std::vector<std::uint32_t>>& layers() const noexcept { return layers_; }

    // Same vertices and layers, same edge set (order-insensitive).
    friend bool operator==(const GeometricGraph& lhs, const GeometricGraph& rhs);

private:
    std::vector<Point> points_;
    std::vector<Edge> edges_;
    std::optional<std::vector<std::uint32_t>> layers_;
};

GeometricGraph with_points(const GeometricGraph& g, std::vector<Point> points);
GeometricGraph without_layers(const GeometricGraph& g);

// CSR neighbour lists plus a dense adjacency matrix.
class Adjacency {
public:
    explicit Adjacency(const GeometricGraph& g);

    std::size_t vertex_count() const noexcept { return n_; }
    std::size_t degree(VertexId v) const { return offsets_[v + 1] - offsets_[v]; }
    std::span<const VertexId> neighbors(VertexId v) const {
        return {targets_.data() + offsets_[v], degree(v)};
    }
    bool adjacent(VertexId u, VertexId v) const { return matrix_[std::size_t{u} * n_ + v] != 0; }

private:
    std::size_t n_ = 0;
    std::vector<std::size_t> offsets_;
    std::vector<VertexId> targets_;
    std::vector<std::uint8_t> matrix_;
};

}  // namespace crosscount

#endif  // CROSSCOUNT_GRAPH_HPP
