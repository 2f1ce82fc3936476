#include "crosscount/generate.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <string>
#include <unordered_set>

#include "crosscount/error.hpp"
#include "crosscount/general_position.hpp"
#include "crosscount/hull.hpp"

namespace crosscount {

const char* to_string(Family family) noexcept {
    switch (family) {
        case Family::Complete: return "complete";
        case Family::RandomEdges: return "random";
        case Family::ConvexComplete: return "convex";
        case Family::Layered: return "layered";
    }
    return "?";
}

Family family_from_string(std::string_view name) {
    if (name == "complete") return Family::Complete;
    if (name == "random") return Family::RandomEdges;
    if (name == "convex") return Family::ConvexComplete;
    if (name == "layered") return Family::Layered;
    throw Error(ErrorKind::InvalidSpec, "unknown family '" + std::string(name) + "'");
}

namespace {

// Portable draws: std::uniform_*_distribution differs between standard libraries.
Coord draw_below(std::mt19937_64& rng, Coord bound) {
    return static_cast<Coord>(rng() % static_cast<std::uint64_t>(bound));
}

double draw_unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

std::vector<Coord> distinct_values(std::mt19937_64& rng, std::size_t count, Coord range) {
    std::unordered_set<Coord> seen;
    std::vector<Coord> out;
    out.reserve(count);
    while (out.size() < count) {
        const Coord v = draw_below(rng, range);
        if (seen.insert(v).second) out.push_back(v);
    }
    return out;
}

// Uniform points with pairwise distinct x and distinct y.
std::vector<Point> random_points(std::mt19937_64& rng, std::size_t n, Coord range) {
    const auto xs = distinct_values(rng, n, range);
    const auto ys = distinct_values(rng, n, range);
    std::vector<Point> pts(n);
    for (std::size_t i = 0; i < n; ++i) pts[i] = {xs[i], ys[i]};
    return pts;
}

std::vector<Edge> random_edges(std::mt19937_64& rng, std::size_t n, double density) {
    std::vector<Edge> edges;
    for (VertexId i = 0; i < n; ++i) {
        for (VertexId j = i + 1; j < n; ++j) {
            if (density >= 1.0 || draw_unit(rng) < density) edges.push_back({i, j});
        }
    }
    return edges;
}

void check_common(const GeneratorSpec& spec) {
    if (!(spec.density >= 0.0 && spec.density <= 1.0)) throw Error(ErrorKind::InvalidSpec, "density outside [0, 1]");
    if (spec.range < 1 || spec.range > kCoordLimit) throw Error(ErrorKind::InvalidSpec, "range outside [1, 2^26]");
}

GeometricGraph random_family(const GeneratorSpec& spec, bool complete) {
    if (spec.n == 0) throw Error(ErrorKind::InvalidSpec, "n must be positive");
    if (static_cast<Coord>(spec.n) > spec.range) throw Error(ErrorKind::InvalidSpec, "range too small for n distinct coordinates");
    std::mt19937_64 rng(spec.seed);
    for (int attempt = 0; attempt < kGeneratorRetries; ++attempt) {
        auto points = random_points(rng, spec.n, spec.range);
        auto edges = complete ? complete_edges(spec.n) : random_edges(rng, spec.n, spec.density);
        if (validate_general_position(points, edges).ok) return GeometricGraph(std::move(points), std::move(edges));
    }
    throw Error(ErrorKind::GenerationFailed, "no general-position sample within the retry budget");
}

GeometricGraph convex_family(const GeneratorSpec& spec) {
    if (spec.n == 0) throw Error(ErrorKind::InvalidSpec, "n must be positive");
    const auto edges = complete_edges(spec.n);
    for (int attempt = 0; attempt < kGeneratorRetries; ++attempt) {
        std::vector<Point> points;
        try {
            points = convex_points(spec.n, spec.range / 2, spec.seed + static_cast<std::uint64_t>(attempt));
        } catch (const Error&) {
            continue;
        }
        if (validate_general_position(points, edges).ok) return GeometricGraph(std::move(points), edges);
    }
    throw Error(ErrorKind::GenerationFailed, "no strictly convex sample within the retry budget");
}

GeometricGraph layered_family(const GeneratorSpec& spec) {
    if (spec.layer_sizes.empty()) throw Error(ErrorKind::InvalidSpec, "layered family needs layer sizes");
    const std::size_t widest = *std::max_element(spec.layer_sizes.begin(), spec.layer_sizes.end());
    if (std::find(spec.layer_sizes.begin(), spec.layer_sizes.end(), 0) != spec.layer_sizes.end()) {
        throw Error(ErrorKind::InvalidSpec, "layer sizes must be positive");
    }
    const Coord slots = (spec.range + 1) / 2;
    if (static_cast<Coord>(widest) > slots) throw Error(ErrorKind::InvalidSpec, "range below twice the widest layer");
    const Coord gap = kLayerGapFactor * spec.range;
    // Leave room for the perturbation scale on top of the stacked layers.
    if (gap * static_cast<Coord>(spec.layer_sizes.size()) > (kCoordLimit >> kLayeredPerturbExponent)) {
        throw Error(ErrorKind::InvalidSpec, "layer stack exceeds the coordinate bound");
    }

    std::mt19937_64 rng(spec.seed);
    std::vector<Point> points;
    std::vector<std::uint32_t> layers;
    std::vector<std::vector<VertexId>> members(spec.layer_sizes.size());
    for (std::size_t layer = 0; layer < spec.layer_sizes.size(); ++layer) {
        auto xs = distinct_values(rng, spec.layer_sizes[layer], slots);
        std::sort(xs.begin(), xs.end());
        for (Coord slot : xs) {
            const Coord x = 2 * slot;
            members[layer].push_back(static_cast<VertexId>(points.size()));
            points.push_back({x, static_cast<Coord>(layer) * gap});
            layers.push_back(static_cast<std::uint32_t>(layer));
        }
    }
    std::vector<Edge> edges;
    for (std::size_t layer = 0; layer + 1 < members.size(); ++layer) {
        for (VertexId lo : members[layer]) {
            for (VertexId hi : members[layer + 1]) {
                if (spec.density >= 1.0 || draw_unit(rng) < spec.density) edges.push_back({lo, hi});
            }
        }
    }
    return GeometricGraph(std::move(points), std::move(edges), std::move(layers));
}

}  // namespace

std::vector<Edge> complete_edges(std::size_t n) {
    std::vector<Edge> edges;
    if (n < 2) return edges;
    edges.reserve(n * (n - 1) / 2);
    for (VertexId i = 0; i < n; ++i) {
        for (VertexId j = i + 1; j < n; ++j) edges.push_back({i, j});
    }
    return edges;
}

GeometricGraph complete_graph(std::vector<Point> points) {
    auto edges = complete_edges(points.size());
    return GeometricGraph(std::move(points), std::move(edges));
}

std::vector<Point> convex_points(std::size_t n, Coord radius, std::uint64_t seed) {
    if (radius < 1 || 2 * radius > kCoordLimit) throw Error(ErrorKind::InvalidSpec, "radius outside the coordinate bound");
    std::mt19937_64 rng(seed);
    const double phase = draw_unit(rng) * 2.0 * std::numbers::pi;
    const double step = 2.0 * std::numbers::pi / static_cast<double>(n);
    std::vector<Point> pts(n);
    for (std::size_t i = 0; i < n; ++i) {
        // Jitter stays inside [0.25, 0.75) of each slot so slots never swap.
        const double angle = phase + step * (static_cast<double>(i) + 0.25 + 0.5 * draw_unit(rng));
        pts[i] = {radius + static_cast<Coord>(std::llround(static_cast<double>(radius) * std::cos(angle))),
                  radius + static_cast<Coord>(std::llround(static_cast<double>(radius) * std::sin(angle)))};
    }
    if (!in_strictly_convex_position(pts)) throw Error(ErrorKind::GenerationFailed, "rounding broke convexity");
    return pts;
}

GeometricGraph generate(const GeneratorSpec& spec) {
    check_common(spec);
    switch (spec.family) {
        case Family::Complete: return random_family(spec, true);
        case Family::RandomEdges: return random_family(spec, false);
        case Family::ConvexComplete: return convex_family(spec);
        case Family::Layered: return layered_family(spec);
    }
    throw Error(ErrorKind::InvalidSpec, "unknown family");
}

}  // namespace crosscount
