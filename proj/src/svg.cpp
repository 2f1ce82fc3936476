#include "crosscount/svg.hpp"

#include <algorithm>
#include <sstream>

namespace crosscount {

namespace {

constexpr double kCanvas = 800.0;
constexpr double kMargin = 20.0;

struct Frame {
    double min_x = 0, min_y = 0, scale = 1;

    double x(double v) const { return kMargin + (v - min_x) * scale; }
    // SVG y grows downwards.
    double y(double v) const { return kCanvas - kMargin - (v - min_y) * scale; }
};

Frame fit(const GeometricGraph& g) {
    Frame f;
    if (g.vertex_count() == 0) return f;
    Coord lo_x = g.points()[0].x, hi_x = lo_x, lo_y = g.points()[0].y, hi_y = lo_y;
    for (const auto& p : g.points()) {
        lo_x = std::min(lo_x, p.x);
        hi_x = std::max(hi_x, p.x);
        lo_y = std::min(lo_y, p.y);
        hi_y = std::max(hi_y, p.y);
    }
    const double span = static_cast<double>(std::max<Coord>({hi_x - lo_x, hi_y - lo_y, 1}));
    f.min_x = static_cast<double>(lo_x);
    f.min_y = static_cast<double>(lo_y);
    f.scale = (kCanvas - 2 * kMargin) / span;
    return f;
}

}  // namespace

std::string render_svg(const GeometricGraph& g) {
    const Frame f = fit(g);
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kCanvas << "\" height=\"" << kCanvas
       << "\" viewBox=\"0 0 " << kCanvas << ' ' << kCanvas << "\">\n";
    os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    for (const auto& e : g.edges()) {
        const Point& a = g.point(e.a);
        const Point& b = g.point(e.b);
        os << "<line x1=\"" << f.x(static_cast<double>(a.x)) << "\" y1=\"" << f.y(static_cast<double>(a.y))
           << "\" x2=\"" << f.x(static_cast<double>(b.x)) << "\" y2=\"" << f.y(static_cast<double>(b.y))
           << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    }
    for (const auto& p : g.points()) {
        os << "<circle cx=\"" << f.x(static_cast<double>(p.x)) << "\" cy=\"" << f.y(static_cast<double>(p.y))
           << "\" r=\"3\" fill=\"steelblue\"/>\n";
    }
    if (g.edge_count() <= kMaxMarkedEdges) {
        const auto edges = g.edges();
        for (std::size_t i = 0; i < edges.size(); ++i) {
            for (std::size_t j = i + 1; j < edges.size(); ++j) {
                const Segment s = g.segment(edges[i]);
                const Segment t = g.segment(edges[j]);
                if (!segments_cross(s, t)) continue;
                // Marker position only; the decision above is exact.
                const double d1x = static_cast<double>(s.q.x - s.p.x), d1y = static_cast<double>(s.q.y - s.p.y);
                const double d2x = static_cast<double>(t.q.x - t.p.x), d2y = static_cast<double>(t.q.y - t.p.y);
                const double den = d1x * d2y - d1y * d2x;
                if (den == 0) continue;
                const double ox = static_cast<double>(t.p.x - s.p.x), oy = static_cast<double>(t.p.y - s.p.y);
                const double k = (ox * d2y - oy * d2x) / den;
                os << "<circle cx=\"" << f.x(static_cast<double>(s.p.x) + k * d1x) << "\" cy=\""
                   << f.y(static_cast<double>(s.p.y) + k * d1y) << "\" r=\"2\" fill=\"red\"/>\n";
            }
        }
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace crosscount
