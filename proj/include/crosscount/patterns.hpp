#ifndef CROSSCOUNT_PATTERNS_HPP
#define CROSSCOUNT_PATTERNS_HPP

#include <cstdint>

namespace crosscount {

// A(G), B(G) and cr(G); a_total - b_total == 4 * crossings.
struct PatternTotals {
    std::uint64_t a_total = 0;
    std::uint64_t b_total = 0;
    std::uint64_t crossings = 0;

    friend bool operator==(const PatternTotals&, const PatternTotals&) = default;
};

// Applies cr = (A - B) / 4, throwing InternalInconsistency when A < B or the
// difference is not a multiple of four.
PatternTotals totals_from_patterns(std::uint64_t a_total, std::uint64_t b_total);

}  // namespace crosscount

#endif  // CROSSCOUNT_PATTERNS_HPP
