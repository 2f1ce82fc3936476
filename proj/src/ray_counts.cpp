#include "crosscount/ray_counts.hpp"

#include "crosscount/parallel.hpp"

namespace crosscount {

namespace {

// Reusable buffers for one worker.
struct PassWorkspace {
    MarkedTree tree;
    std::vector<std::uint8_t> marks;
    std::vector<std::uint32_t> leaf_of;
};

// Runs the procedure for apex u; emit(v, left, right) is called for each v
// below u by decreasing y. Left and right come from a single walk: a marked
// leaf right of v's leaf in the counterclockwise order around u is an edge
// uv_j crossing the horizontal line through v to the right of v.
template <typename Emit>
void ray_pass(const Adjacency& adj, const AngularTables& ang, VertexId u, PassWorkspace& ws, Emit&& emit) {
    const auto leaves = ang.below_order(u);
    if (leaves.empty()) return;
    ws.marks.resize(leaves.size());
    if (ws.leaf_of.size() < ang.vertex_count()) ws.leaf_of.resize(ang.vertex_count());
    for (std::size_t i = 0; i < leaves.size(); ++i) {
        ws.marks[i] = adj.adjacent(u, leaves[i]) ? 1 : 0;
        ws.leaf_of[leaves[i]] = static_cast<std::uint32_t>(i);
    }
    ws.tree.reset(ws.marks);
    for (VertexId v : ang.below_by_y(u)) {
        const auto c = ws.tree.unmark_and_count(ws.leaf_of[v]);
        emit(v, c.left, c.right);
    }
}

}  // namespace

std::vector<std::uint64_t> horizontal_ray_pass(const Adjacency& adj, const AngularTables& ang, VertexId u,
                                               RaySide side) {
    PassWorkspace ws;
    std::vector<std::uint64_t> out;
    out.reserve(ang.below_by_y(u).size());
    ray_pass(adj, ang, u, ws, [&](VertexId, std::uint32_t left, std::uint32_t right) {
        out.push_back(side == RaySide::Left ? left : right);
    });
    return out;
}

RayCounts horizontal_ray_counts(const Adjacency& adj, const AngularTables& ang, unsigned jobs) {
    const std::size_t n = ang.vertex_count();
    const unsigned workers = effective_jobs(n, jobs);
    std::vector<RayCounts> partial(workers, RayCounts{std::vector<std::uint64_t>(n, 0), std::vector<std::uint64_t>(n, 0)});

    parallel_chunks(n, workers, [&](unsigned w, std::size_t begin, std::size_t end) {
        PassWorkspace ws;
        auto& acc = partial[w];
        for (std::size_t u = begin; u < end; ++u) {
            ray_pass(adj, ang, static_cast<VertexId>(u), ws, [&](VertexId v, std::uint32_t left, std::uint32_t right) {
                acc.left[v] += left;
                acc.right[v] += right;
            });
        }
    });

    RayCounts total = std::move(partial[0]);
    for (unsigned w = 1; w < workers; ++w) {
        for (std::size_t v = 0; v < n; ++v) {
            total.left[v] += partial[w].left[v];
            total.right[v] += partial[w].right[v];
        }
    }
    return total;
}

}  // namespace crosscount
