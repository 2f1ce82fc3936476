#ifndef CROSSCOUNT_GENERAL_POSITION_HPP
#define CROSSCOUNT_GENERAL_POSITION_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "crosscount/geometry.hpp"

namespace crosscount {

enum class ViolationKind { DuplicateX, DuplicateY, CollinearTriple, ParallelEdges };

const char* to_string(ViolationKind kind) noexcept;

// Witnesses are vertex indices, except for ParallelEdges where they are edge indices.
struct Violation {
    ViolationKind kind;
    std::vector<std::size_t> witnesses;

    friend bool operator==(const Violation&, const Violation&) = default;
};

struct GeneralPositionReport {
    bool ok = true;
    std::vector<Violation> violations;

    bool has(ViolationKind kind) const;
    std::string summary() const;
};

// At most this many witnesses are recorded per violation kind; `ok` is exact regardless.
inline constexpr std::size_t kMaxWitnessesPerKind = 16;

// Checks distinct x, distinct y, no three collinear vertices (over all triples)
// and no two parallel edges, exactly. O(n^2 log n + m log m).
GeneralPositionReport validate_general_position(std::span<const Point> points,
                                                std::span<const Edge> edges = {});

inline constexpr int kPerturbRetries = 256;

// Scales every coordinate by 2^scale_exponent. Inputs that already validate are
// only scaled; otherwise each coordinate also receives a seeded offset in
// (-2^(e-1), 2^(e-1)) and the draw is repeated with seed+1, seed+2, ... until
// the result validates.
// Throws CoordinateOverflow or PerturbationFailed.
std::vector<Point> perturb(std::span<const Point> points, std::span<const Edge> edges,
                           std::uint64_t seed, int scale_exponent);

}  // namespace crosscount

#endif  // CROSSCOUNT_GENERAL_POSITION_HPP
