#include "qstirling/tree_model.hpp"

#include "qstirling/errors.hpp"

#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>

namespace qstir {

namespace {

struct ShapeCheck {
    // value -> number of children of its odd vertex
    std::map<Value, std::size_t> odd_children;
    std::optional<std::string> error;

    void fail(std::string why) {
        if (!error) error = std::move(why);
    }

    void visit(const OrderedLabeledTree& node, std::size_t level) {
        if (error) return;
        if (node.is_unlabeled()) return fail("unlabeled vertex present");
        if (!node.blocks.empty()) return fail("block structure present on a plain tree");
        if (level % 2 == 1) {
            if (node.label < 1) {
                return fail("(i) odd vertex carries label " + std::to_string(node.label));
            }
            if (!odd_children.emplace(node.label, node.children.size()).second) {
                return fail("(i) value " + std::to_string(node.label) +
                            " labels more than one odd vertex");
            }
            for (const auto& child : node.children) {
                if (child.label != node.label) {
                    return fail("(iii) odd vertex " + std::to_string(node.label) +
                                " has a child labeled " + std::to_string(child.label));
                }
            }
        }
        for (const auto& child : node.children) visit(child, level + 1);
    }
};

ShapeCheck check_shape(const OrderedLabeledTree& T) {
    ShapeCheck check;
    if (T.label != kRootLabel) {
        check.fail("(ii) root is labeled " + std::to_string(T.label) + ", expected 0");
        return check;
    }
    check.visit(T, 0);
    return check;
}

using Forest = std::vector<OrderedLabeledTree>;
using ForestSink = std::function<void(const Forest&)>;

std::uint32_t bit(Value v) { return std::uint32_t{1} << (v - 1); }

// Generates the ordered forests of odd-level subtrees hanging below one even
// vertex, using exactly the values in `mask`.
class TreeGenerator {
public:
    explicit TreeGenerator(const MultisetSpec& M) : M_(M) {}

    void forests(std::uint32_t mask, const ForestSink& emit) const {
        if (mask == 0) {
            emit(Forest{});
            return;
        }
        for (Value x = 1; static_cast<std::size_t>(x) <= M_.n(); ++x) {
            if (!(mask & bit(x))) continue;
            const std::uint32_t rest = mask & ~bit(x);
            const std::size_t slots = M_.multiplicity(x) - 1;
            // Every subset of `rest` may go below x when x has children.
            for (std::uint32_t below = rest;; below = (below - 1) & rest) {
                if (slots > 0 || below == 0) {
                    std::vector<std::uint32_t> parts;
                    split(below, slots, parts, [&](const std::vector<std::uint32_t>& assignment) {
                        OrderedLabeledTree odd{x, {}, {}};
                        expand_slots(assignment, 0, odd, [&](const OrderedLabeledTree& filled) {
                            forests(rest & ~below, [&](const Forest& tail) {
                                Forest f;
                                f.reserve(tail.size() + 1);
                                f.push_back(filled);
                                f.insert(f.end(), tail.begin(), tail.end());
                                emit(f);
                            });
                        });
                    });
                }
                if (below == 0) break;
            }
        }
    }

private:
    // Ordered assignments of the values in `mask` to `slots` slots (empty slots allowed).
    void split(std::uint32_t mask, std::size_t slots, std::vector<std::uint32_t>& parts,
               const std::function<void(const std::vector<std::uint32_t>&)>& emit) const {
        if (slots == 0) {
            if (mask == 0) emit(parts);
            return;
        }
        if (slots == 1) {
            parts.push_back(mask);
            emit(parts);
            parts.pop_back();
            return;
        }
        for (std::uint32_t head = mask;; head = (head - 1) & mask) {
            parts.push_back(head);
            split(mask & ~head, slots - 1, parts, emit);
            parts.pop_back();
            if (head == 0) break;
        }
    }

    // Fills the even children of `odd` one slot at a time.
    void expand_slots(const std::vector<std::uint32_t>& assignment, std::size_t index,
                      OrderedLabeledTree& odd,
                      const std::function<void(const OrderedLabeledTree&)>& emit) const {
        if (index == assignment.size()) {
            emit(odd);
            return;
        }
        forests(assignment[index], [&](const Forest& children) {
            odd.children.push_back(OrderedLabeledTree{odd.label, children, {}});
            expand_slots(assignment, index + 1, odd, emit);
            odd.children.pop_back();
        });
    }

    const MultisetSpec& M_;
};

void phi_into(const OrderedLabeledTree& T, std::vector<Value>& out) {
    if (T.children.empty()) return;
    const OrderedLabeledTree& leftmost = T.children.front();
    const Value r = leftmost.label;
    out.push_back(r);
    for (const auto& even : leftmost.children) {
        OrderedLabeledTree relabeled = even;
        relabeled.label = kRootLabel;
        phi_into(relabeled, out);
        out.push_back(r);
    }
    OrderedLabeledTree rest{kRootLabel, {}, {}};
    rest.children.assign(T.children.begin() + 1, T.children.end());
    phi_into(rest, out);
}

OrderedLabeledTree phi_inverse_of(std::span<const Value> w) {
    OrderedLabeledTree T{kRootLabel, {}, {}};
    if (w.empty()) return T;
    const Value r = w.front();
    OrderedLabeledTree odd{r, {}, {}};
    std::size_t segment_start = 1;
    for (std::size_t i = 1; i < w.size(); ++i) {
        if (w[i] != r) continue;
        OrderedLabeledTree sub = phi_inverse_of(w.subspan(segment_start, i - segment_start));
        sub.label = r;
        odd.children.push_back(std::move(sub));
        segment_start = i + 1;
    }
    OrderedLabeledTree rest = phi_inverse_of(w.subspan(segment_start));
    T.children.reserve(rest.children.size() + 1);
    T.children.push_back(std::move(odd));
    for (auto& child : rest.children) T.children.push_back(std::move(child));
    return T;
}

} // namespace

std::optional<std::string> tree_shape_violation(const OrderedLabeledTree& T) {
    return check_shape(T).error;
}

std::optional<std::string> tree_violation(const MultisetSpec& M, const OrderedLabeledTree& T) {
    ShapeCheck check = check_shape(T);
    if (check.error) return check.error;
    for (const auto& [value, children] : check.odd_children) {
        const std::size_t k = M.multiplicity(value);
        if (k == 0) return "(i) label " + std::to_string(value) + " is not in the multiset";
        if (children != k - 1) {
            return "(iii) odd vertex " + std::to_string(value) + " has " + std::to_string(children) +
                   " children, expected " + std::to_string(k - 1);
        }
    }
    for (Value v = 1; static_cast<std::size_t>(v) <= M.n(); ++v) {
        if (!check.odd_children.count(v)) {
            return "(i) value " + std::to_string(v) + " labels no odd vertex";
        }
    }
    return std::nullopt;
}

bool validate_tree(const MultisetSpec& M, const OrderedLabeledTree& T) {
    return !tree_violation(M, T).has_value();
}

void for_each_tree(const MultisetSpec& M, const std::function<void(const OrderedLabeledTree&)>& visit,
                   std::size_t size_cap) {
    require_within_cap(M, size_cap, "tree enumeration");
    if (M.n() > 31) throw SizeLimitError("tree enumeration (distinct values)", M.n(), 31);
    const std::uint32_t all = M.n() == 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << M.n()) - 1;
    TreeGenerator(M).forests(all, [&](const Forest& children) {
        visit(OrderedLabeledTree{kRootLabel, children, {}});
    });
}

std::vector<OrderedLabeledTree> enumerate_trees(const MultisetSpec& M, std::size_t size_cap) {
    std::vector<OrderedLabeledTree> out;
    for_each_tree(M, [&](const OrderedLabeledTree& T) { out.push_back(T); }, size_cap);
    return out;
}

std::size_t cdes_vertex(const OrderedLabeledTree& u) {
    std::size_t count = 0;
    Value previous = u.label;
    for (const auto& child : u.children) {
        if (previous > child.label) ++count;
        previous = child.label;
    }
    if (previous > u.label) ++count;
    return count;
}

std::size_t cdes_tree(const OrderedLabeledTree& T) {
    if (T.is_leaf()) return 1;
    std::size_t total = 0;
    const std::function<void(const OrderedLabeledTree&)> walk = [&](const OrderedLabeledTree& u) {
        total += cdes_vertex(u);
        for (const auto& child : u.children) walk(child);
    };
    walk(T);
    return total;
}

Ends tree_ends(const OrderedLabeledTree& T) {
    if (T.is_leaf()) return {ExtendedValue::pos_infinity(), ExtendedValue::neg_infinity()};
    return {ExtendedValue::finite(T.children.front().label),
            ExtendedValue::finite(T.children.back().label)};
}

Word phi(const OrderedLabeledTree& T) {
    if (const auto why = tree_shape_violation(T)) {
        throw ValidationError("phi: not an ordered labeled tree of the required class: " + *why);
    }
    Word w;
    phi_into(T, w.values);
    return w;
}

OrderedLabeledTree phi_inverse(const Word& w) {
    for (Value v : w.values) {
        if (v < 1) throw ValidationError("phi_inverse: letters must be positive");
    }
    if (!is_quasi_stirling(w)) {
        throw PatternError("phi_inverse: \"" + format_word(w) + "\" contains an abab crossing");
    }
    OrderedLabeledTree T = phi_inverse_of(w.values);
    // Segments between consecutive copies of the leading letter have disjoint
    // supports in a quasi-Stirling word, so every value ends up on one odd vertex.
    if (const auto why = tree_shape_violation(T)) {
        throw std::logic_error("phi_inverse produced a malformed tree: " + *why);
    }
    return T;
}

IntPolynomial tree_polynomial(const MultisetSpec& M, std::size_t size_cap) {
    std::vector<BigInt> coeffs(M.K() + 2);
    for_each_tree(M, [&](const OrderedLabeledTree& T) { ++coeffs[cdes_tree(T)]; }, size_cap);
    return IntPolynomial(std::move(coeffs));
}

} // namespace qstir
