#include "crosscount/layered.hpp"

#include <algorithm>
#include <string>

#include "crosscount/convex.hpp"
#include "crosscount/error.hpp"
#include "crosscount/general_position.hpp"
#include "crosscount/generate.hpp"
#include "crosscount/parallel.hpp"

namespace crosscount {

namespace {

constexpr Coord kEmbedRadius = Coord{1} << 23;

[[noreturn]] void bad_layering(const std::string& what) { throw Error(ErrorKind::InvalidLayering, what); }

// Members of each layer sorted by x.
std::vector<std::vector<VertexId>> layer_members(const GeometricGraph& g) {
    if (!g.has_layers()) bad_layering("graph has no layer assignment");
    const auto& layer = *g.layers();
    const auto pts = g.points();
    const std::uint32_t count = layer.empty() ? 0 : *std::max_element(layer.begin(), layer.end()) + 1;
    std::vector<std::vector<VertexId>> members(count);
    for (VertexId v = 0; v < layer.size(); ++v) members[layer[v]].push_back(v);

    for (std::uint32_t i = 0; i < count; ++i) {
        auto& m = members[i];
        if (m.empty()) bad_layering("layer " + std::to_string(i) + " is empty");
        std::sort(m.begin(), m.end(), [&](VertexId a, VertexId b) { return pts[a].x < pts[b].x; });
        for (std::size_t k = 0; k < m.size(); ++k) {
            if (pts[m[k]].y != pts[m[0]].y) bad_layering("layer " + std::to_string(i) + " is not horizontal");
            if (k > 0 && pts[m[k]].x == pts[m[k - 1]].x) {
                bad_layering("vertices " + std::to_string(m[k - 1]) + " and " + std::to_string(m[k]) + " coincide");
            }
        }
        if (i > 0 && pts[m[0]].y <= pts[members[i - 1][0]].y) {
            bad_layering("layer " + std::to_string(i) + " is not above layer " + std::to_string(i - 1));
        }
    }
    for (const auto& e : g.edges()) {
        const auto la = layer[e.a];
        const auto lb = layer[e.b];
        if (la + 1 != lb && lb + 1 != la) {
            bad_layering("edge (" + std::to_string(e.a) + ", " + std::to_string(e.b) + ") skips or stays in a layer");
        }
    }
    return members;
}

}  // namespace

void check_layering(const GeometricGraph& g) { (void)layer_members(g); }

std::vector<BilayerView> bilayer_views(const GeometricGraph& g) {
    const auto members = layer_members(g);
    const auto& layer = *g.layers();
    std::vector<std::uint32_t> position(g.vertex_count());
    for (const auto& m : members) {
        for (std::size_t k = 0; k < m.size(); ++k) position[m[k]] = static_cast<std::uint32_t>(k);
    }

    std::vector<BilayerView> views;
    for (std::size_t i = 0; i + 1 < members.size(); ++i) views.push_back({members[i + 1], members[i], {}});
    for (const auto& e : g.edges()) {
        const VertexId lo = layer[e.a] < layer[e.b] ? e.a : e.b;
        const VertexId hi = lo == e.a ? e.b : e.a;
        views[layer[lo]].edges.push_back({position[hi], position[lo]});
    }
    return views;
}

GeometricGraph bilayer_embed(const BilayerView& view, std::uint64_t seed) {
    const std::size_t p = view.top.size();
    const std::size_t q = view.bottom.size();
    std::vector<Edge> edges;
    edges.reserve(view.edges.size());
    for (const auto& link : view.edges) {
        edges.push_back({link.top, static_cast<VertexId>(p + link.bottom)});
    }

    for (int attempt = 0; attempt < kEmbedRetries; ++attempt) {
        std::vector<Point> cycle;
        try {
            cycle = convex_points(p + q, kEmbedRadius, seed + static_cast<std::uint64_t>(attempt));
        } catch (const Error&) {
            continue;
        }
        // Cycle positions: top left to right, then bottom right to left.
        std::vector<Point> pts(p + q);
        for (std::size_t j = 0; j < p; ++j) pts[j] = cycle[j];
        for (std::size_t j = 0; j < q; ++j) pts[p + j] = cycle[p + (q - 1 - j)];
        if (validate_general_position(pts, edges).ok) return GeometricGraph(std::move(pts), edges);
    }
    throw Error(ErrorKind::EmbeddingFailed, "no convex placement in general position within the retry budget");
}

PatternTotals count_crossings_layered(const GeometricGraph& g, unsigned jobs) {
    const auto views = bilayer_views(g);
    const unsigned workers = effective_jobs(views.size(), jobs);
    std::vector<PatternTotals> partial(workers);
    parallel_chunks(views.size(), workers, [&](unsigned w, std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            if (views[i].edges.size() < 2) continue;
            const auto t = count_crossings_convex(bilayer_embed(views[i], i));
            partial[w].a_total += t.a_total;
            partial[w].b_total += t.b_total;
            partial[w].crossings += t.crossings;
        }
    });
    PatternTotals total;
    for (const auto& t : partial) {
        total.a_total += t.a_total;
        total.b_total += t.b_total;
        total.crossings += t.crossings;
    }
    return total;
}

}  // namespace crosscount
