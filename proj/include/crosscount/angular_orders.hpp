#ifndef CROSSCOUNT_ANGULAR_ORDERS_HPP
#define CROSSCOUNT_ANGULAR_ORDERS_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "crosscount/graph.hpp"

namespace crosscount {

// One row of n - 1 vertex ids per vertex, stored flat.
class VertexRows {
public:
    VertexRows() = default;
    explicit VertexRows(std::size_t n) : n_(n), flat_(n > 0 ? n * (n - 1) : 0) {}

    std::size_t vertex_count() const noexcept { return n_; }
    std::span<const VertexId> row(VertexId u) const { return {flat_.data() + std::size_t{u} * (n_ - 1), n_ - 1}; }
    std::span<VertexId> row(VertexId u) { return {flat_.data() + std::size_t{u} * (n_ - 1), n_ - 1}; }

private:
    std::size_t n_ = 0;
    std::vector<VertexId> flat_;
};

// Step 1 output. For every vertex u:
//   ccw_order(u)      V \ {u} counterclockwise, starting just after angle 0
//   rotation_order(u) V \ {u} by angle modulo pi, the order in which a line
//                     through u rotating counterclockwise from horizontal meets them
//   below_order(u)    vertices below u, counterclockwise starting after angle pi
//                     (a suffix of ccw_order)
//   below_by_y(u)     vertices below u by decreasing y
class AngularTables {
public:
    std::size_t vertex_count() const noexcept { return ccw_.vertex_count(); }

    std::span<const VertexId> ccw_order(VertexId u) const { return ccw_.row(u); }
    std::span<const VertexId> rotation_order(VertexId u) const { return rotation_.row(u); }
    std::span<const VertexId> below_order(VertexId u) const { return ccw_.row(u).subspan(above_count_[u]); }
    std::span<const VertexId> below_by_y(VertexId u) const {
        return std::span<const VertexId>(by_y_desc_).subspan(y_rank_[u] + 1);
    }
    std::size_t above_count(VertexId u) const { return above_count_[u]; }

    const VertexRows& ccw_rows() const noexcept { return ccw_; }

private:
    friend AngularTables angular_orders(const GeometricGraph& g, unsigned jobs);

    VertexRows ccw_;
    VertexRows rotation_;
    std::vector<std::size_t> above_count_;
    std::vector<VertexId> by_y_desc_;
    std::vector<std::size_t> y_rank_;
};

// Exact per-vertex angular sort, O(n^2 log n). Throws GeneralPositionViolation
// on equal y-coordinates or on collinear triples through any vertex.
AngularTables angular_orders(const GeometricGraph& g, unsigned jobs = 1);

}  // namespace crosscount

#endif  // CROSSCOUNT_ANGULAR_ORDERS_HPP
