#pragma once

#include "qstirling/multiset.hpp"
#include "qstirling/polynomial.hpp"
#include "qstirling/tree.hpp"
#include "qstirling/word.hpp"

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace qstir {

// Members of T_M: root labeled 0, every value i labels exactly one odd-level
// vertex, and that vertex has exactly k_i - 1 children, all labeled i.

// First violated property, or nullopt when T is a member of T_M.
std::optional<std::string> tree_violation(const MultisetSpec& M, const OrderedLabeledTree& T);
bool validate_tree(const MultisetSpec& M, const OrderedLabeledTree& T);

// Same shape rules, with the multiset read off the tree itself. Values need not
// be 1..n; this is the class the recursive pieces of phi live in.
std::optional<std::string> tree_shape_violation(const OrderedLabeledTree& T);

// Every member of T_M exactly once, in a fixed order.
void for_each_tree(const MultisetSpec& M, const std::function<void(const OrderedLabeledTree&)>& visit,
                   std::size_t size_cap = kDefaultSizeCap);
std::vector<OrderedLabeledTree> enumerate_trees(const MultisetSpec& M,
                                                std::size_t size_cap = kDefaultSizeCap);

// Cyclic descents of (label(u), labels of u's children left to right); 0 for a leaf.
std::size_t cdes_vertex(const OrderedLabeledTree& u);
// Sum of cdes_vertex over all vertices; 1 for the one-vertex tree.
std::size_t cdes_tree(const OrderedLabeledTree& T);
// Labels of the leftmost and rightmost root children; (+inf, -inf) for one vertex.
Ends tree_ends(const OrderedLabeledTree& T);

// The bijection T_M -> quasi-Stirling words of M, carrying (cdes, first, last)
// to (des, first, last). Throws ValidationError on a malformed tree.
Word phi(const OrderedLabeledTree& T);

// Inverse of phi. The multiset is read from the word. Throws PatternError if w
// contains an abab crossing.
OrderedLabeledTree phi_inverse(const Word& w);

// Sum over T_M of t^cdes(T).
IntPolynomial tree_polynomial(const MultisetSpec& M, std::size_t size_cap = kDefaultSizeCap);

} // namespace qstir
