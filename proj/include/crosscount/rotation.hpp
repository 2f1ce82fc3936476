#ifndef CROSSCOUNT_ROTATION_HPP
#define CROSSCOUNT_ROTATION_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "crosscount/angular_orders.hpp"
#include "crosscount/error.hpp"
#include "crosscount/graph.hpp"
#include "crosscount/neighbor_splits.hpp"
#include "crosscount/patterns.hpp"
#include "crosscount/ray_counts.hpp"

namespace crosscount {

// A(u, v) and B(u, v) for every ordered pair, plus A(G), B(G), cr(G) summed
// over adjacent pairs only.
class ABTable {
public:
    ABTable() = default;
    explicit ABTable(std::size_t n) : n_(n), a_(n * n, 0), b_(n * n, 0) {}

    std::size_t vertex_count() const noexcept { return n_; }
    std::uint32_t a(VertexId u, VertexId v) const { return a_[std::size_t{u} * n_ + v]; }
    std::uint32_t b(VertexId u, VertexId v) const { return b_[std::size_t{u} * n_ + v]; }
    const PatternTotals& totals() const noexcept { return totals_; }

private:
    friend ABTable rotational_AB(std::span<const Point>, const Adjacency&, const AngularTables&, const NeighborSplit&,
                                 const RayCounts&, unsigned);

    std::size_t n_ = 0;
    std::vector<std::uint32_t> a_;
    std::vector<std::uint32_t> b_;
    PatternTotals totals_;
};

// Where the rotation around one apex starts. The reference ray points along
// `reference`; its opposite ray along -reference. `order` lists V \ {apex} by
// angle modulo pi measured from `reference`.
struct RotationFrame {
    std::span<const VertexId> order;
    Direction reference;
    std::uint64_t forward_total = 0;   // edges met by the reference ray
    std::uint64_t backward_total = 0;  // edges met by the opposite ray
};

// Walks the rotation around `apex`, calling emit(v, A(apex, v), B(apex, v)) in
// order. Base case and recurrence:
//   v_1 on the reference side:  A = forward - R(v_1),  B = backward
//   v_1 on the other side:      A = backward - R(v_1), B = forward
//   v_{i-1}, v_i on one side:   A_i = A_{i-1} + L(v_{i-1}) - R(v_i),  B_i = B_{i-1}
//   sides differ:               A_i = B_{i-1} - R(v_i),  B_i = A_{i-1} + L(v_{i-1})
// with L(v) = |N_Left(v, apex v)| and R(v) = |N_Right(v, apex v)|.
// Throws InternalInconsistency if a count goes negative.
template <typename Emit>
void rotate_around(VertexId apex, std::span<const Point> points, const RotationFrame& frame,
                   const NeighborSplit& split, Emit&& emit) {
    if (frame.order.empty()) return;
    const Point pu = points[apex];
    auto on_reference_side = [&](VertexId v) { return cross(frame.reference, points[v] - pu) > 0; };
    auto fail = [&](VertexId v) {
        throw Error(ErrorKind::InternalInconsistency,
                    "negative pattern count at (" + std::to_string(apex) + ", " + std::to_string(v) + ")");
    };

    const auto forward = static_cast<std::int64_t>(frame.forward_total);
    const auto backward = static_cast<std::int64_t>(frame.backward_total);

    VertexId prev = frame.order[0];
    bool prev_side = on_reference_side(prev);
    std::int64_t a = (prev_side ? forward : backward) - split.right(apex, prev);
    std::int64_t b = prev_side ? backward : forward;
    if (a < 0) fail(prev);
    emit(prev, a, b);

    for (std::size_t i = 1; i < frame.order.size(); ++i) {
        const VertexId v = frame.order[i];
        const bool side = on_reference_side(v);
        const std::int64_t carried = a + split.left(apex, prev);
        if (side == prev_side) {
            a = carried - split.right(apex, v);
        } else {
            a = b - split.right(apex, v);
            b = carried;
        }
        if (a < 0 || b < 0) fail(v);
        emit(v, a, b);
        prev = v;
        prev_side = side;
    }
}

// Step 4 over the horizontal frame: reference (1, 0), rotation_order(u), and
// the Step 3 totals. Materializes the full n x n table.
ABTable rotational_AB(std::span<const Point> points, const Adjacency& adj, const AngularTables& ang,
                      const NeighborSplit& split, const RayCounts& rays, unsigned jobs = 1);

// Same recurrence without the table; only adjacent pairs are accumulated.
PatternTotals rotational_totals(std::span<const Point> points, const Adjacency& adj, const AngularTables& ang,
                                const NeighborSplit& split, const RayCounts& rays, unsigned jobs = 1);

}  // namespace crosscount

#endif  // CROSSCOUNT_ROTATION_HPP
