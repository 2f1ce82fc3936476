#ifndef CROSSCOUNT_MARKED_TREE_HPP
#define CROSSCOUNT_MARKED_TREE_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace crosscount {

// Minimum-height binary tree over an ordered sequence of leaves, some marked.
// Every internal node w keeps MarkedLeft(w) and MarkedRight(w), the number of
// marked leaves in its left and right subtree.
//
// Layout is the implicit heap: root 1, children 2w and 2w + 1, leaf i at
// capacity + i where capacity = bit_ceil(leaf count). Height is
// ceil(log2(leaf count)).
class MarkedTree {
public:
    struct Counts {
        std::uint32_t left = 0;
        std::uint32_t right = 0;
    };

    MarkedTree() = default;
    explicit MarkedTree(std::span<const std::uint8_t> marks) { reset(marks); }

    // Rebuilds over marks.size() leaves in O(leaf count); reuses storage.
    void reset(std::span<const std::uint8_t> marks);

    // Unmarks `leaf` (if marked) and walks to the root, returning how many
    // marked leaves lie left and right of it. O(height).
    Counts unmark_and_count(std::size_t leaf);

    std::size_t leaf_count() const noexcept { return leaves_; }
    std::size_t height() const noexcept;
    bool marked(std::size_t leaf) const { return leaf_marked_[leaf] != 0; }
    std::uint32_t marked_left(std::size_t node) const { return marked_left_[node]; }
    std::uint32_t marked_right(std::size_t node) const { return marked_right_[node]; }
    std::size_t capacity() const noexcept { return capacity_; }

    // Recounts every node from the leaf flags and compares with the stored fields.
    bool consistent() const;

private:
    std::size_t leaves_ = 0;
    std::size_t capacity_ = 1;
    std::vector<std::uint8_t> leaf_marked_;
    std::vector<std::uint32_t> marked_left_;
    std::vector<std::uint32_t> marked_right_;
    std::vector<std::uint32_t> scratch_;
};

}  // namespace crosscount

#endif  // CROSSCOUNT_MARKED_TREE_HPP
