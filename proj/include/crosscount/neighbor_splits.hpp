#ifndef CROSSCOUNT_NEIGHBOR_SPLITS_HPP
#define CROSSCOUNT_NEIGHBOR_SPLITS_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "crosscount/angular_orders.hpp"
#include "crosscount/graph.hpp"

namespace crosscount {

// For every ordered pair (u, v): how many neighbours of v lie strictly left and
// strictly right of the directed line from u to v.
class NeighborSplit {
public:
    NeighborSplit() = default;
    explicit NeighborSplit(std::size_t n) : n_(n), left_(n * n, 0), right_(n * n, 0) {}

    std::size_t vertex_count() const noexcept { return n_; }
    std::uint32_t left(VertexId u, VertexId v) const { return left_[index(u, v)]; }
    std::uint32_t right(VertexId u, VertexId v) const { return right_[index(u, v)]; }

    void set(VertexId u, VertexId v, std::uint32_t left, std::uint32_t right) {
        left_[index(u, v)] = left;
        right_[index(u, v)] = right;
    }

private:
    std::size_t index(VertexId u, VertexId v) const { return std::size_t{u} * n_ + v; }

    std::size_t n_ = 0;
    std::vector<std::uint32_t> left_;
    std::vector<std::uint32_t> right_;
};

// Step 2. `ccw` holds, for every v, the other vertices in counterclockwise
// order around v from any starting cut. Two monotone pointers per v sweep the
// half-turns after and before each u: O(n + deg v) per v, O(n^2) in total.
// Throws GeneralPositionViolation if a neighbour of v lies on a line uv.
NeighborSplit neighbor_splits(std::span<const Point> points, const Adjacency& adj, const VertexRows& ccw,
                              unsigned jobs = 1);

}  // namespace crosscount

#endif  // CROSSCOUNT_NEIGHBOR_SPLITS_HPP
