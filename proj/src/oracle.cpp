#include "crosscount/oracle.hpp"

#include "crosscount/error.hpp"

namespace crosscount {

PatternTotals totals_from_patterns(std::uint64_t a_total, std::uint64_t b_total) {
    if (a_total < b_total || (a_total - b_total) % 4 != 0) {
        throw Error(ErrorKind::InternalInconsistency, "A(G) = " + std::to_string(a_total) +
                                                          ", B(G) = " + std::to_string(b_total) +
                                                          " violate A - B = 4 cr");
    }
    return {a_total, b_total, (a_total - b_total) / 4};
}

namespace oracle {

const char* to_string(PairKind kind) noexcept {
    switch (kind) {
        case PairKind::Crossing: return "Crossing";
        case PairKind::LineTouch: return "LineTouch";
        case PairKind::Disjoint: return "Disjoint";
        case PairKind::Incident: return "Incident";
    }
    return "?";
}

namespace {

bool incident(const Edge& e, VertexId v) { return e.a == v || e.b == v; }

bool share_endpoint(const Edge& e, const Edge& f) { return incident(f, e.a) || incident(f, e.b); }

// The supporting line of `line` meets the interior of `seg`.
bool line_meets_interior(const Segment& line, const Segment& seg) {
    const auto s1 = static_cast<int>(orientation(line.p, line.q, seg.p));
    const auto s2 = static_cast<int>(orientation(line.p, line.q, seg.q));
    return s1 * s2 < 0;
}

}  // namespace

std::uint64_t crossings(const GeometricGraph& g) {
    const auto edges = g.edges();
    std::uint64_t count = 0;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        for (std::size_t j = i + 1; j < edges.size(); ++j) {
            if (segments_cross(g.segment(edges[i]), g.segment(edges[j]))) ++count;
        }
    }
    return count;
}

PairClass classify_pair(const GeometricGraph& g, const Edge& e, const Edge& f) {
    if (share_endpoint(e, f)) return {PairKind::Incident, std::nullopt};
    const Segment se = g.segment(e);
    const Segment sf = g.segment(f);
    if (segments_cross(se, sf)) return {PairKind::Crossing, PatternCount{4, 0}};
    if (line_meets_interior(se, sf) || line_meets_interior(sf, se)) {
        return {PairKind::LineTouch, PatternCount{1, 1}};
    }
    return {PairKind::Disjoint, PatternCount{0, 0}};
}

PatternTotals patterns(const GeometricGraph& g) {
    std::uint64_t a = 0;
    std::uint64_t b = 0;
    for (const auto& uv : g.edges()) {
        // Both orientations of the adjacent pair: (u, v) and (v, u).
        for (const auto& [u, v] : {std::pair{uv.a, uv.b}, std::pair{uv.b, uv.a}}) {
            const Direction dir = g.point(v) - g.point(u);
            const Ray forward{g.point(u), dir};
            const Ray backward{g.point(u), -dir};
            for (const auto& e : g.edges()) {
                if (incident(e, u) || incident(e, v)) continue;
                const Segment s = g.segment(e);
                if (ray_hits_segment(forward, s)) ++a;
                if (ray_hits_segment(backward, s)) ++b;
            }
        }
    }
    return {a, b, crossings(g)};
}

std::uint64_t ray_count(const GeometricGraph& g, VertexId v, Side side) {
    const Ray ray{g.point(v), side == Side::Right ? Direction{1, 0} : Direction{-1, 0}};
    std::uint64_t count = 0;
    for (const auto& e : g.edges()) {
        if (ray_hits_segment(ray, g.segment(e))) ++count;
    }
    return count;
}

PatternCount ab(const GeometricGraph& g, VertexId u, VertexId v) {
    const Direction dir = g.point(v) - g.point(u);
    const Ray forward{g.point(u), dir};
    const Ray backward{g.point(u), -dir};
    PatternCount out;
    for (const auto& e : g.edges()) {
        if (incident(e, u) || incident(e, v)) continue;
        const Segment s = g.segment(e);
        if (ray_hits_segment(forward, s)) ++out.a;
        if (ray_hits_segment(backward, s)) ++out.b;
    }
    return out;
}

}  // namespace oracle
}  // namespace crosscount
