#pragma once

#include "qstirling/multiset.hpp"

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace qstir {

inline constexpr Value kRootLabel = 0;
// Label of the south endpoint of a half-edge (an unlabeled leaf).
inline constexpr Value kUnlabeled = -1;

// Rooted ordered tree with integer labels. A tree is its root vertex; every
// subtree is again an OrderedLabeledTree. The root sits at level 0 (even).
struct OrderedLabeledTree {
    Value label = kRootLabel;
    std::vector<OrderedLabeledTree> children;
    // Sizes of the consecutive blocks the children are split into. Only block
    // trees fill this, and only at even-level vertices with children.
    std::vector<std::size_t> blocks;

    bool is_leaf() const noexcept { return children.empty(); }
    bool is_unlabeled() const noexcept { return label == kUnlabeled; }
    // Number of vertices.
    std::size_t size() const noexcept;

    bool operator==(const OrderedLabeledTree&) const = default;
};

// "0(2,7(7(1)),5(5(6,3(3)),5(4)))": label, then the ordered children in parentheses.
// "*" is an unlabeled leaf; "|" separates blocks inside a child list.
OrderedLabeledTree parse_tree(std::string_view text);
std::string format_tree(const OrderedLabeledTree& tree);

} // namespace qstir
