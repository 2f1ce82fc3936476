#include "crosscount/general_position.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "crosscount/error.hpp"

namespace crosscount {

const char* to_string(ViolationKind kind) noexcept {
    switch (kind) {
        case ViolationKind::DuplicateX: return "DuplicateX";
        case ViolationKind::DuplicateY: return "DuplicateY";
        case ViolationKind::CollinearTriple: return "CollinearTriple";
        case ViolationKind::ParallelEdges: return "ParallelEdges";
    }
    return "?";
}

bool GeneralPositionReport::has(ViolationKind kind) const {
    return std::any_of(violations.begin(), violations.end(),
                       [kind](const Violation& v) { return v.kind == kind; });
}

std::string GeneralPositionReport::summary() const {
    if (ok) return "ok";
    std::ostringstream os;
    for (std::size_t i = 0; i < violations.size(); ++i) {
        if (i > 0) os << "; ";
        os << to_string(violations[i].kind) << '(';
        for (std::size_t j = 0; j < violations[i].witnesses.size(); ++j) {
            if (j > 0) os << ',';
            os << violations[i].witnesses[j];
        }
        os << ')';
    }
    return os.str();
}

namespace {

// Maps a nonzero direction onto the half-open upper half plane, so that
// parallel directions become equal.
Direction fold(Direction d) {
    if (d.dy < 0 || (d.dy == 0 && d.dx < 0)) return -d;
    return d;
}

// Strict order on folded directions by angle in [0, pi).
bool folded_less(const Direction& a, const Direction& b) { return cross(a, b) > 0; }

void find_duplicates(std::span<const Point> points, bool by_x, ViolationKind kind,
                     std::vector<Violation>& out) {
    std::vector<std::size_t> idx(points.size());
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    auto key = [&](std::size_t i) { return by_x ? points[i].x : points[i].y; };
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return key(a) < key(b); });
    std::size_t found = 0;
    for (std::size_t i = 1; i < idx.size() && found < kMaxWitnessesPerKind; ++i) {
        if (key(idx[i - 1]) == key(idx[i])) {
            out.push_back({kind, {std::min(idx[i - 1], idx[i]), std::max(idx[i - 1], idx[i])}});
            ++found;
        }
    }
}

void find_collinear(std::span<const Point> points, std::vector<Violation>& out) {
    const std::size_t n = points.size();
    std::set<std::array<std::size_t, 3>> triples;
    std::vector<std::size_t> others;
    others.reserve(n);
    for (std::size_t u = 0; u < n && triples.size() < kMaxWitnessesPerKind; ++u) {
        others.clear();
        for (std::size_t v = 0; v < n; ++v) {
            // Coincident points are reported as duplicate coordinates.
            if (v != u && points[v] != points[u]) others.push_back(v);
        }
        auto dir = [&](std::size_t v) { return fold(points[v] - points[u]); };
        std::sort(others.begin(), others.end(),
                  [&](std::size_t a, std::size_t b) { return folded_less(dir(a), dir(b)); });
        for (std::size_t i = 1; i < others.size(); ++i) {
            if (cross(dir(others[i - 1]), dir(others[i])) == 0) {
                std::array<std::size_t, 3> t{u, others[i - 1], others[i]};
                std::sort(t.begin(), t.end());
                triples.insert(t);
                if (triples.size() >= kMaxWitnessesPerKind) break;
            }
        }
    }
    for (const auto& t : triples) {
        out.push_back({ViolationKind::CollinearTriple, {t[0], t[1], t[2]}});
    }
}

void find_parallel(std::span<const Point> points, std::span<const Edge> edges,
                   std::vector<Violation>& out) {
    std::vector<std::size_t> idx;
    idx.reserve(edges.size());
    for (std::size_t e = 0; e < edges.size(); ++e) {
        if (points[edges[e].a] != points[edges[e].b]) idx.push_back(e);
    }
    auto dir = [&](std::size_t e) { return fold(points[edges[e].b] - points[edges[e].a]); };
    std::sort(idx.begin(), idx.end(),
              [&](std::size_t a, std::size_t b) { return folded_less(dir(a), dir(b)); });
    std::size_t found = 0;
    for (std::size_t i = 1; i < idx.size() && found < kMaxWitnessesPerKind; ++i) {
        if (cross(dir(idx[i - 1]), dir(idx[i])) == 0) {
            out.push_back({ViolationKind::ParallelEdges,
                           {std::min(idx[i - 1], idx[i]), std::max(idx[i - 1], idx[i])}});
            ++found;
        }
    }
}

}  // namespace

GeneralPositionReport validate_general_position(std::span<const Point> points,
                                                std::span<const Edge> edges) {
    GeneralPositionReport report;
    find_duplicates(points, true, ViolationKind::DuplicateX, report.violations);
    find_duplicates(points, false, ViolationKind::DuplicateY, report.violations);
    find_collinear(points, report.violations);
    find_parallel(points, edges, report.violations);
    report.ok = report.violations.empty();
    return report;
}

std::vector<Point> perturb(std::span<const Point> points, std::span<const Edge> edges,
                           std::uint64_t seed, int scale_exponent) {
    if (scale_exponent < 0 || scale_exponent > 26) {
        throw Error(ErrorKind::CoordinateOverflow, "scale exponent out of range");
    }
    const Coord scale = Coord{1} << scale_exponent;
    // Offsets lie in the open interval (-half, half).
    const Coord half = scale / 2;
    const Coord spread = half > 0 ? 2 * half - 1 : 0;

    auto check_bounds = [](const std::vector<Point>& pts) {
        for (const auto& p : pts) {
            if (!in_bounds(p)) throw Error(ErrorKind::CoordinateOverflow, "perturbed coordinate exceeds the bound");
        }
    };

    // In-bounds inputs times 2^26 still fit comfortably in int64.
    std::vector<Point> scaled(points.begin(), points.end());
    for (auto& p : scaled) p = {p.x * scale, p.y * scale};
    check_bounds(scaled);

    if (validate_general_position(scaled, edges).ok) return scaled;

    for (int attempt = 0; attempt < kPerturbRetries; ++attempt) {
        std::mt19937_64 rng(seed + static_cast<std::uint64_t>(attempt));
        auto offset = [&]() -> Coord {
            if (spread == 0) return 0;
            return static_cast<Coord>(rng() % static_cast<std::uint64_t>(spread)) - (half - 1);
        };
        std::vector<Point> out = scaled;
        for (auto& p : out) {
            p.x += offset();
            p.y += offset();
        }
        check_bounds(out);
        if (validate_general_position(out, edges).ok) return out;
    }
    throw Error(ErrorKind::PerturbationFailed,
                "no valid perturbation after " + std::to_string(kPerturbRetries) + " attempts");
}

}  // namespace crosscount
