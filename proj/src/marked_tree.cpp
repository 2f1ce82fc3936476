#include "crosscount/marked_tree.hpp"

#include <algorithm>
#include <bit>

namespace crosscount {

namespace {

// Fills subtree[w] with the number of marked leaves below node w.
void count_subtrees(std::span<const std::uint8_t> leaf_marked, std::size_t capacity,
                    std::vector<std::uint32_t>& subtree) {
    subtree.assign(2 * capacity, 0);
    for (std::size_t i = 0; i < leaf_marked.size(); ++i) subtree[capacity + i] = leaf_marked[i];
    for (std::size_t w = capacity - 1; w >= 1; --w) subtree[w] = subtree[2 * w] + subtree[2 * w + 1];
}

}  // namespace

void MarkedTree::reset(std::span<const std::uint8_t> marks) {
    leaves_ = marks.size();
    capacity_ = std::bit_ceil(std::max<std::size_t>(leaves_, 1));
    leaf_marked_.assign(capacity_, 0);
    for (std::size_t i = 0; i < leaves_; ++i) leaf_marked_[i] = marks[i] ? 1 : 0;

    count_subtrees(leaf_marked_, capacity_, scratch_);
    marked_left_.resize(capacity_);
    marked_right_.resize(capacity_);
    for (std::size_t w = 1; w < capacity_; ++w) {
        marked_left_[w] = scratch_[2 * w];
        marked_right_[w] = scratch_[2 * w + 1];
    }
}

MarkedTree::Counts MarkedTree::unmark_and_count(std::size_t leaf) {
    const bool was_marked = leaf_marked_[leaf] != 0;
    leaf_marked_[leaf] = 0;
    Counts c;
    for (std::size_t w = capacity_ + leaf; w > 1; w >>= 1) {
        const std::size_t parent = w >> 1;
        if ((w & 1) == 0) {
            c.right += marked_right_[parent];
            if (was_marked) --marked_left_[parent];
        } else {
            c.left += marked_left_[parent];
            if (was_marked) --marked_right_[parent];
        }
    }
    return c;
}

std::size_t MarkedTree::height() const noexcept { return static_cast<std::size_t>(std::countr_zero(capacity_)); }

bool MarkedTree::consistent() const {
    std::vector<std::uint32_t> subtree;
    count_subtrees(leaf_marked_, capacity_, subtree);
    for (std::size_t w = 1; w < capacity_; ++w) {
        if (marked_left_[w] != subtree[2 * w] || marked_right_[w] != subtree[2 * w + 1]) return false;
    }
    return true;
}

}  // namespace crosscount
