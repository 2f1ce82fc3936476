#ifndef CROSSCOUNT_ORACLE_HPP
#define CROSSCOUNT_ORACLE_HPP

#include <cstdint>
#include <optional>
#include <utility>

#include "crosscount/graph.hpp"
#include "crosscount/patterns.hpp"

// Brute-force reference computations. Everything here is deliberately the
// most direct enumeration of the definitions; the fast pipeline is tested
// against these.
namespace crosscount::oracle {

enum class PairKind { Crossing, LineTouch, Disjoint, Incident };

const char* to_string(PairKind kind) noexcept;

struct PatternCount {
    std::uint64_t a = 0;
    std::uint64_t b = 0;

    friend bool operator==(const PatternCount&, const PatternCount&) = default;
};

struct PairClass {
    PairKind kind;
    // Type-A and type-B patterns the pair contributes; empty for Incident.
    std::optional<PatternCount> contribution;
};

enum class Side { Left, Right };

// Number of unordered edge pairs whose segments cross. O(m^2).
std::uint64_t crossings(const GeometricGraph& g);

PairClass classify_pair(const GeometricGraph& g, const Edge& e, const Edge& f);

// Enumerates every triple (u, v adjacent to u, e not incident to u or v). O(m^2).
PatternTotals patterns(const GeometricGraph& g);

// Edges met by the open horizontal ray from v.
std::uint64_t ray_count(const GeometricGraph& g, VertexId v, Side side);

// (A(u, v), B(u, v)): edges not incident to u or v met by the ray from u
// through v, and by the opposite ray from u. Defined for any u != v.
PatternCount ab(const GeometricGraph& g, VertexId u, VertexId v);

}  // namespace crosscount::oracle

#endif  // CROSSCOUNT_ORACLE_HPP
