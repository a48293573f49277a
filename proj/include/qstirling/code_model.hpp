#pragma once

#include "qstirling/bigint.hpp"
#include "qstirling/multiset.hpp"
#include "qstirling/tree.hpp"

#include <compare>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qstir {

// A member of T*_{M,m}: a tree of T_M with m unlabeled leaves ("half-edges")
// hung below even-level vertices. At each even vertex u the half-edges cut the
// children into compartments that increase left to right; a half-edge sits
// somewhere right of the last labeled child if that child exceeds u, and
// somewhere left of the first labeled child if that child is below u.
struct HalfEdgeTree {
    OrderedLabeledTree tree;

    std::size_t half_edge_count() const;
    bool operator==(const HalfEdgeTree&) const = default;
};

// A member of BT_{M,m}: odd-level leaves may be unlabeled, and the children of
// every even-level internal vertex are split into consecutive blocks, each
// either one unlabeled leaf or an increasing run of labeled vertices. m is the
// total number of blocks. Block sizes live in OrderedLabeledTree::blocks.
struct BlockTree {
    OrderedLabeledTree tree;

    std::size_t block_count() const;
    bool operator==(const BlockTree&) const = default;
};

// Attachment point for odd vertices: the root (value 0), or x_j, the j-th
// (1-based, left to right) child of the odd vertex labeled x.
struct Slot {
    Value value = kRootLabel;
    std::size_t index = 0;

    static constexpr Slot root() { return Slot{}; }
    constexpr bool is_root() const { return value == kRootLabel; }
    // "0" or "5_1"
    std::string to_string() const;

    constexpr bool operator==(const Slot&) const = default;
    constexpr auto operator<=>(const Slot&) const = default;
};

// (a_i, b_i): the i-th pruned odd vertex hangs in block b_i (1-based) of slot a_i.
struct Insertion {
    Slot slot;
    std::size_t block = 1;

    bool operator==(const Insertion&) const = default;
};

// The pair (P, S). `pool` is the multiset P as slot -> multiplicity (no zero
// entries); `trace` is S, one insertion per value, ending at the root.
struct CodePair {
    std::map<Slot, std::size_t> pool;
    std::vector<Insertion> trace;

    // |P|, the m of P_{M,m}.
    std::size_t size() const;
    bool operator==(const CodePair&) const = default;
};

// P as "0^2,3_1,5_1^2,5_2^3,7_1" and S as "(5_1,1)(5_2,3)(0,1)".
std::string format_pool(const CodePair& c);
std::string format_trace(const CodePair& c);
CodePair parse_code_pair(std::string_view pool_text, std::string_view trace_text);

HalfEdgeTree parse_half_edge_tree(std::string_view text);
// Even-level vertices with children and no "|" get a single block.
BlockTree parse_block_tree(std::string_view text);

// Multiset read off the labels of a tree (0 and unlabeled vertices ignored).
// Throws ValidationError unless the labels present are exactly 1..n.
MultisetSpec multiset_of(const OrderedLabeledTree& tree);

std::optional<std::string> half_edge_tree_violation(const MultisetSpec& M, const HalfEdgeTree& T);
std::optional<std::string> block_tree_violation(const MultisetSpec& M, const BlockTree& T);
std::optional<std::string> code_pair_violation(const MultisetSpec& M, const CodePair& c);

void for_each_half_edge_tree(const MultisetSpec& M, std::size_t m,
                             const std::function<void(const HalfEdgeTree&)>& visit,
                             std::size_t size_cap = kDefaultSizeCap);
std::vector<HalfEdgeTree> enumerate_half_edge_trees(const MultisetSpec& M, std::size_t m,
                                                    std::size_t size_cap = kDefaultSizeCap);

void for_each_block_tree(const MultisetSpec& M, std::size_t m,
                         const std::function<void(const BlockTree&)>& visit,
                         std::size_t size_cap = kDefaultSizeCap);
std::vector<BlockTree> enumerate_block_trees(const MultisetSpec& M, std::size_t m,
                                             std::size_t size_cap = kDefaultSizeCap);

void for_each_code_pair(const MultisetSpec& M, std::size_t m,
                        const std::function<void(const CodePair&)>& visit,
                        std::size_t size_cap = kDefaultSizeCap);
std::vector<CodePair> enumerate_code_pairs(const MultisetSpec& M, std::size_t m,
                                           std::size_t size_cap = kDefaultSizeCap);

// |P_{M,m}| = m^(n-1) * C(K - n + m, K - n + 1).
BigInt count_code_pairs(const MultisetSpec& M, std::size_t m);

// BT_{M,m} -> T*_{M,m}. Each non-trivial block gets a half-edge right after its
// last vertex; then the members of the leftmost block smaller than their parent
// move, in increasing order, to the end of the child list.
HalfEdgeTree psi(const BlockTree& T);
HalfEdgeTree psi(const MultisetSpec& M, const BlockTree& T);

// Inverse of psi: the children after the last half-edge move to the front, each
// non-empty compartment becomes a block (its closing half-edge is dropped), and
// every remaining half-edge is a trivial block.
BlockTree psi_inverse(const HalfEdgeTree& T);
BlockTree psi_inverse(const MultisetSpec& M, const HalfEdgeTree& T);

// Pruning order l_1..l_n: repeatedly remove the largest odd vertex with no odd
// vertex below it.
std::vector<Value> pruning_order(const BlockTree& T);

// BT_{M,m} -> P_{M,m}. P counts the blocks of every slot, S records where each
// pruned vertex hung.
CodePair theta(const BlockTree& T);
CodePair theta(const MultisetSpec& M, const BlockTree& T);

// Inverse of theta. Throws ValidationError on a pair outside P_{M,m}.
BlockTree theta_inverse(const CodePair& c, const MultisetSpec& M);

} // namespace qstir
