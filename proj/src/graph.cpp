#include "crosscount/graph.hpp"

#include <algorithm>
#include <string>

#include "crosscount/error.hpp"

namespace crosscount {

GeometricGraph::GeometricGraph(std::vector<Point> points, std::vector<Edge> edges,
                               std::optional<std::vector<std::uint32_t>> layers)
    : points_(std::move(points)), edges_(std::move(edges)), layers_(std::move(layers)) {
    const std::size_t n = points_.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (!in_bounds(points_[i])) {
            throw Error(ErrorKind::CoordinateOverflow, "vertex " + std::to_string(i) + " exceeds the coordinate bound");
        }
    }
    for (auto& e : edges_) {
        if (e.a >= n || e.b >= n) {
            throw Error(ErrorKind::IndexOutOfRange,
                        "edge (" + std::to_string(e.a) + ", " + std::to_string(e.b) + ") with n = " + std::to_string(n));
        }
        if (e.a == e.b) throw Error(ErrorKind::IndexOutOfRange, "loop at vertex " + std::to_string(e.a));
        if (e.a > e.b) std::swap(e.a, e.b);
    }
    std::vector<Edge> sorted = edges_;
    std::sort(sorted.begin(), sorted.end());
    if (auto it = std::adjacent_find(sorted.begin(), sorted.end()); it != sorted.end()) {
        throw Error(ErrorKind::DuplicateEdge, "edge (" + std::to_string(it->a) + ", " + std::to_string(it->b) + ")");
    }
    if (layers_ && layers_->size() != n) {
        throw Error(ErrorKind::InvalidLayering, "layer assignment has " + std::to_string(layers_->size()) +
                                                    " entries for " + std::to_string(n) + " vertices");
    }
}

bool operator==(const GeometricGraph& lhs, const GeometricGraph& rhs) {
    if (lhs.points_ != rhs.points_ || lhs.layers_ != rhs.layers_ || lhs.edges_.size() != rhs.edges_.size()) {
        return false;
    }
    std::vector<Edge> a = lhs.edges_;
    std::vector<Edge> b = rhs.edges_;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
}

GeometricGraph with_points(const GeometricGraph& g, std::vector<Point> points) {
    return GeometricGraph(std::move(points), {g.edges().begin(), g.edges().end()}, g.layers());
}

GeometricGraph without_layers(const GeometricGraph& g) {
    return GeometricGraph({g.points().begin(), g.points().end()}, {g.edges().begin(), g.edges().end()});
}

Adjacency::Adjacency(const GeometricGraph& g) : n_(g.vertex_count()), offsets_(n_ + 1, 0), matrix_(n_ * n_, 0) {
    for (const auto& e : g.edges()) {
        ++offsets_[e.a + 1];
        ++offsets_[e.b + 1];
    }
    for (std::size_t v = 0; v < n_; ++v) offsets_[v + 1] += offsets_[v];
    targets_.resize(offsets_[n_]);
    std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
    for (const auto& e : g.edges()) {
        targets_[fill[e.a]++] = e.b;
        targets_[fill[e.b]++] = e.a;
        matrix_[std::size_t{e.a} * n_ + e.b] = 1;
        matrix_[std::size_t{e.b} * n_ + e.a] = 1;
    }
}

}  // namespace crosscount
