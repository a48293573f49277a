#include "qstirling/code_model.hpp"

#include "qstirling/errors.hpp"
#include "qstirling/generating.hpp"
#include "qstirling/tree_model.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdint>
#include <set>

namespace qstir {

namespace {

std::size_t count_unlabeled(const OrderedLabeledTree& t) {
    std::size_t total = t.is_unlabeled() ? 1 : 0;
    for (const auto& child : t.children) total += count_unlabeled(child);
    return total;
}

std::size_t count_blocks(const OrderedLabeledTree& t) {
    std::size_t total = t.blocks.size();
    for (const auto& child : t.children) total += count_blocks(child);
    return total;
}

OrderedLabeledTree unlabeled_leaf() { return OrderedLabeledTree{kUnlabeled, {}, {}}; }

std::vector<Slot> all_slots(const MultisetSpec& M) {
    std::vector<Slot> slots{Slot::root()};
    for (Value x = 1; static_cast<std::size_t>(x) <= M.n(); ++x) {
        for (std::size_t j = 1; j < M.multiplicity(x); ++j) slots.push_back(Slot{x, j});
    }
    return slots;
}

bool slot_exists(const MultisetSpec& M, const Slot& s) {
    if (s.is_root()) return s.index == 0;
    const std::size_t k = M.multiplicity(s.value);
    return k > 1 && s.index >= 1 && s.index < k;
}

// Block contents per slot; an empty block is an unlabeled leaf.
using SlotLayout = std::map<Slot, std::vector<std::vector<Value>>>;

OrderedLabeledTree build_slot(const MultisetSpec& M, const SlotLayout& layout, const Slot& slot,
                              Value label) {
    OrderedLabeledTree node{label, {}, {}};
    const auto it = layout.find(slot);
    if (it == layout.end()) return node;
    for (const auto& block : it->second) {
        if (block.empty()) {
            node.children.push_back(unlabeled_leaf());
            node.blocks.push_back(1);
            continue;
        }
        for (Value x : block) {
            OrderedLabeledTree odd{x, {}, {}};
            for (std::size_t j = 1; j < M.multiplicity(x); ++j) {
                odd.children.push_back(build_slot(M, layout, Slot{x, j}, x));
            }
            node.children.push_back(std::move(odd));
        }
        node.blocks.push_back(block.size());
    }
    return node;
}

OrderedLabeledTree strip_unlabeled(const OrderedLabeledTree& t) {
    OrderedLabeledTree out{t.label, {}, {}};
    for (const auto& child : t.children) {
        if (!child.is_unlabeled()) out.children.push_back(strip_unlabeled(child));
    }
    return out;
}

struct Placement {
    Slot slot;
    std::size_t block = 0;
};

// parent slot and block of every labeled odd vertex, plus block counts per slot
struct BlockLayout {
    std::map<Value, Placement> placement;
    std::map<Slot, std::size_t> block_counts;
};

void collect_layout(const OrderedLabeledTree& even, const Slot& slot, BlockLayout& out) {
    if (!even.blocks.empty()) out.block_counts[slot] = even.blocks.size();
    std::size_t index = 0;
    for (std::size_t b = 0; b < even.blocks.size(); ++b) {
        for (std::size_t i = 0; i < even.blocks[b]; ++i, ++index) {
            const OrderedLabeledTree& odd = even.children[index];
            if (odd.is_unlabeled()) continue;
            out.placement[odd.label] = Placement{slot, b + 1};
            for (std::size_t j = 0; j < odd.children.size(); ++j) {
                collect_layout(odd.children[j], Slot{odd.label, j + 1}, out);
            }
        }
    }
}

std::vector<Value> prune(const std::map<Value, Placement>& placement) {
    std::set<Value> remaining;
    for (const auto& [v, p] : placement) remaining.insert(v);
    std::vector<Value> order;
    while (!remaining.empty()) {
        Value pick = 0;
        for (auto it = remaining.rbegin(); it != remaining.rend(); ++it) {
            const Value x = *it;
            const bool has_odd_below = std::any_of(remaining.begin(), remaining.end(), [&](Value y) {
                return placement.at(y).slot.value == x;
            });
            if (!has_odd_below) {
                pick = x;
                break;
            }
        }
        if (pick == 0) throw std::logic_error("pruning stalled: parent relation has a cycle");
        order.push_back(pick);
        remaining.erase(pick);
    }
    return order;
}

template <class Visitor>
void weak_compositions(std::size_t total, std::size_t parts, std::vector<std::size_t>& current,
                       Visitor&& visit) {
    if (parts == 0) {
        if (total == 0) visit(current);
        return;
    }
    if (parts == 1) {
        current.push_back(total);
        visit(current);
        current.pop_back();
        return;
    }
    for (std::size_t first = 0; first <= total; ++first) {
        current.push_back(first);
        weak_compositions(total - first, parts - 1, current, visit);
        current.pop_back();
    }
}

// Gaps around the children of each even vertex, in preorder. Gap g of vertex u
// sits between s_g and s_{g+1} of the cyclic sequence s = (u, v_1, ..., v_l) and
// needs a half-edge exactly when s_g > s_{g+1}.
void collect_gaps(const OrderedLabeledTree& node, std::size_t level, std::vector<std::size_t>& minimum) {
    if (level % 2 == 0) {
        std::vector<Value> cyclic{node.label};
        for (const auto& child : node.children) cyclic.push_back(child.label);
        for (std::size_t g = 0; g < cyclic.size(); ++g) {
            minimum.push_back(cyclic[g] > cyclic[(g + 1) % cyclic.size()] ? 1 : 0);
        }
    }
    for (const auto& child : node.children) collect_gaps(child, level + 1, minimum);
}

OrderedLabeledTree insert_walls(const OrderedLabeledTree& node, std::size_t level,
                                const std::vector<std::size_t>& walls, std::size_t& cursor) {
    OrderedLabeledTree out{node.label, {}, {}};
    if (level % 2 == 1) {
        for (const auto& child : node.children) out.children.push_back(insert_walls(child, level + 1, walls, cursor));
        return out;
    }
    const std::size_t base = cursor;
    cursor += node.children.size() + 1;
    std::vector<OrderedLabeledTree> built;
    for (const auto& child : node.children) built.push_back(insert_walls(child, level + 1, walls, cursor));
    for (std::size_t g = 0; g <= built.size(); ++g) {
        out.children.insert(out.children.end(), walls[base + g], unlabeled_leaf());
        if (g < built.size()) out.children.push_back(std::move(built[g]));
    }
    return out;
}

OrderedLabeledTree psi_node(const OrderedLabeledTree& node, std::size_t level) {
    OrderedLabeledTree out{node.label, {}, {}};
    if (level % 2 == 1 || node.children.empty()) {
        for (const auto& child : node.children) out.children.push_back(psi_node(child, level + 1));
        return out;
    }
    std::vector<OrderedLabeledTree> moved;
    std::size_t index = 0;
    for (std::size_t b = 0; b < node.blocks.size(); ++b) {
        const std::size_t size = node.blocks[b];
        if (size == 1 && node.children[index].is_unlabeled()) {
            out.children.push_back(unlabeled_leaf());
            ++index;
            continue;
        }
        for (std::size_t i = 0; i < size; ++i, ++index) {
            const OrderedLabeledTree& child = node.children[index];
            if (b == 0 && child.label < node.label) moved.push_back(psi_node(child, level + 1));
            else out.children.push_back(psi_node(child, level + 1));
        }
        out.children.push_back(unlabeled_leaf());
    }
    for (auto& child : moved) out.children.push_back(std::move(child));
    return out;
}

OrderedLabeledTree psi_inverse_node(const OrderedLabeledTree& node, std::size_t level) {
    OrderedLabeledTree out{node.label, {}, {}};
    std::vector<OrderedLabeledTree> children;
    for (const auto& child : node.children) children.push_back(psi_inverse_node(child, level + 1));
    if (level % 2 == 1 || children.empty()) {
        out.children = std::move(children);
        return out;
    }
    const auto last_wall = std::find_if(children.rbegin(), children.rend(),
                                        [](const OrderedLabeledTree& c) { return c.is_unlabeled(); });
    if (last_wall == children.rend()) {
        throw ValidationError("psi_inverse: even vertex " + std::to_string(node.label) +
                              " has children but no half-edge");
    }
    std::rotate(children.begin(), last_wall.base(), children.end());
    std::size_t compartment = 0;
    for (auto& child : children) {
        if (!child.is_unlabeled()) {
            out.children.push_back(std::move(child));
            ++compartment;
        } else if (compartment > 0) {
            out.blocks.push_back(compartment);
            compartment = 0;
        } else {
            out.children.push_back(unlabeled_leaf());
            out.blocks.push_back(1);
        }
    }
    if (compartment > 0) out.blocks.push_back(compartment);
    return out;
}

void require_valid(const std::optional<std::string>& why, const char* what) {
    if (why) throw ValidationError(std::string(what) + ": " + *why);
}

} // namespace

std::size_t HalfEdgeTree::half_edge_count() const { return count_unlabeled(tree); }

std::size_t BlockTree::block_count() const { return count_blocks(tree); }

std::string Slot::to_string() const {
    if (is_root()) return "0";
    return std::to_string(value) + "_" + std::to_string(index);
}

std::size_t CodePair::size() const {
    std::size_t total = 0;
    for (const auto& [slot, count] : pool) total += count;
    return total;
}

std::string format_pool(const CodePair& c) {
    std::string out;
    for (const auto& [slot, count] : c.pool) {
        if (!out.empty()) out += ',';
        out += slot.to_string();
        if (count > 1) out += "^" + std::to_string(count);
    }
    return out;
}

std::string format_trace(const CodePair& c) {
    std::string out;
    for (const auto& step : c.trace) {
        out += "(" + step.slot.to_string() + "," + std::to_string(step.block) + ")";
    }
    return out;
}

namespace {

std::size_t parse_count(std::string_view token, std::string_view context) {
    std::size_t value = 0;
    const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc{} || end != token.data() + token.size()) {
        throw ParseError("invalid number \"" + std::string(token) + "\" in \"" + std::string(context) + "\"");
    }
    return value;
}

Slot parse_slot(std::string_view token, std::string_view context) {
    const std::size_t underscore = token.find('_');
    if (underscore == std::string_view::npos) {
        if (parse_count(token, context) != 0) {
            throw ParseError("slot \"" + std::string(token) + "\" must be 0 or x_j");
        }
        return Slot::root();
    }
    const std::size_t value = parse_count(token.substr(0, underscore), context);
    const std::size_t index = parse_count(token.substr(underscore + 1), context);
    if (value == 0 || index == 0) throw ParseError("slot \"" + std::string(token) + "\" must be 0 or x_j");
    return Slot{static_cast<Value>(value), index};
}

std::string strip_spaces(std::string_view text) {
    std::string out;
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) out += c;
    }
    return out;
}

} // namespace

CodePair parse_code_pair(std::string_view pool_text, std::string_view trace_text) {
    CodePair c;
    const std::string pool = strip_spaces(pool_text);
    std::size_t pos = 0;
    while (pos < pool.size()) {
        std::size_t comma = pool.find(',', pos);
        if (comma == std::string::npos) comma = pool.size();
        const std::string_view token(pool.data() + pos, comma - pos);
        const std::size_t caret = token.find('^');
        const Slot slot = parse_slot(token.substr(0, caret), pool);
        const std::size_t count =
            caret == std::string_view::npos ? 1 : parse_count(token.substr(caret + 1), pool);
        if (count == 0) throw ParseError("zero multiplicity in \"" + pool + "\"");
        c.pool[slot] += count;
        pos = comma + 1;
    }
    const std::string trace = strip_spaces(trace_text);
    pos = 0;
    while (pos < trace.size()) {
        if (trace[pos] != '(') throw ParseError("expected '(' in \"" + trace + "\"");
        const std::size_t close = trace.find(')', pos);
        const std::size_t comma = trace.find(',', pos);
        if (close == std::string::npos || comma == std::string::npos || comma > close) {
            throw ParseError("malformed insertion in \"" + trace + "\"");
        }
        const std::string_view body(trace.data() + pos + 1, close - pos - 1);
        const std::size_t split = comma - pos - 1;
        c.trace.push_back(Insertion{parse_slot(body.substr(0, split), trace),
                                    parse_count(body.substr(split + 1), trace)});
        pos = close + 1;
    }
    return c;
}

HalfEdgeTree parse_half_edge_tree(std::string_view text) {
    HalfEdgeTree T{parse_tree(text)};
    if (count_blocks(T.tree)) throw ParseError("half-edge trees carry no block separators");
    return T;
}

BlockTree parse_block_tree(std::string_view text) {
    BlockTree T{parse_tree(text)};
    const std::function<void(OrderedLabeledTree&, std::size_t)> normalize =
        [&](OrderedLabeledTree& node, std::size_t level) {
            if (level % 2 == 0 && !node.children.empty() && node.blocks.empty()) {
                node.blocks.push_back(node.children.size());
            }
            for (auto& child : node.children) normalize(child, level + 1);
        };
    normalize(T.tree, 0);
    return T;
}

MultisetSpec multiset_of(const OrderedLabeledTree& tree) {
    std::map<Value, std::size_t> counts;
    const std::function<void(const OrderedLabeledTree&)> walk = [&](const OrderedLabeledTree& node) {
        if (node.label > 0) ++counts[node.label];
        for (const auto& child : node.children) walk(child);
    };
    walk(tree);
    if (counts.empty()) throw ValidationError("tree carries no values");
    std::vector<std::size_t> mult;
    for (const auto& [value, count] : counts) {
        if (static_cast<std::size_t>(value) != mult.size() + 1) {
            throw ValidationError("tree labels are not exactly 1..n (value " +
                                  std::to_string(mult.size() + 1) + " missing)");
        }
        mult.push_back(count);
    }
    return MultisetSpec(std::move(mult));
}

std::optional<std::string> half_edge_tree_violation(const MultisetSpec& M, const HalfEdgeTree& T) {
    std::optional<std::string> error;
    const std::function<void(const OrderedLabeledTree&, std::size_t)> visit =
        [&](const OrderedLabeledTree& u, std::size_t level) {
            if (error) return;
            if (!u.blocks.empty()) {
                error = "block separators in a half-edge tree";
                return;
            }
            if (u.is_unlabeled()) {
                if (level % 2 == 0) error = "unlabeled vertex at even level";
                else if (!u.is_leaf()) error = "unlabeled vertex with children";
                return;
            }
            if (level % 2 == 0 && !u.children.empty()) {
                bool wall_before_first = false;
                bool wall_after_last = false;
                std::optional<Value> first;
                std::optional<Value> last;
                Value previous = 0;  // children of an even vertex are labeled >= 1
                for (const auto& child : u.children) {
                    if (child.is_unlabeled()) {
                        if (!first) wall_before_first = true;
                        wall_after_last = true;
                        previous = 0;
                        continue;
                    }
                    if (previous >= child.label) {
                        error = "compartment below " + std::to_string(u.label) + " is not increasing";
                        return;
                    }
                    previous = child.label;
                    if (!first) first = child.label;
                    last = child.label;
                    wall_after_last = false;
                }
                if (first && *first < u.label && !wall_before_first) {
                    error = "no half-edge left of first child " + std::to_string(*first) + " of " +
                            std::to_string(u.label);
                    return;
                }
                if (last && *last > u.label && !wall_after_last) {
                    error = "no half-edge right of last child " + std::to_string(*last) + " of " +
                            std::to_string(u.label);
                    return;
                }
            }
            for (const auto& child : u.children) visit(child, level + 1);
        };
    visit(T.tree, 0);
    if (error) return error;
    return tree_violation(M, strip_unlabeled(T.tree));
}

std::optional<std::string> block_tree_violation(const MultisetSpec& M, const BlockTree& T) {
    if (T.tree.label != kRootLabel) return "(ii) root must be labeled 0";
    std::optional<std::string> error;
    std::set<Value> odd_labels;
    const std::function<void(const OrderedLabeledTree&, std::size_t)> visit =
        [&](const OrderedLabeledTree& u, std::size_t level) {
            if (error) return;
            if (level % 2 == 1) {
                if (!u.blocks.empty()) {
                    error = "blocks on an odd-level vertex";
                    return;
                }
                if (u.is_unlabeled()) {
                    if (!u.is_leaf()) error = "(i) unlabeled odd vertex must be a leaf";
                    return;
                }
                const std::size_t k = M.multiplicity(u.label);
                if (k == 0) {
                    error = "(i) label " + std::to_string(u.label) + " is not in the multiset";
                    return;
                }
                if (!odd_labels.insert(u.label).second) {
                    error = "(i) value " + std::to_string(u.label) + " labels two odd vertices";
                    return;
                }
                if (u.children.size() != k - 1) {
                    error = "(iii) odd vertex " + std::to_string(u.label) + " has " +
                            std::to_string(u.children.size()) + " children, expected " +
                            std::to_string(k - 1);
                    return;
                }
                for (const auto& child : u.children) {
                    if (child.label != u.label) {
                        error = "(iii) child of odd vertex " + std::to_string(u.label) + " is labeled " +
                                std::to_string(child.label);
                        return;
                    }
                }
            } else if (u.children.empty()) {
                if (!u.blocks.empty()) error = "blocks on a childless vertex";
                return;
            } else {
                std::size_t total = 0;
                for (std::size_t size : u.blocks) {
                    if (size == 0) {
                        error = "empty block below " + std::to_string(u.label);
                        return;
                    }
                    total += size;
                }
                if (u.blocks.empty() || total != u.children.size()) {
                    error = "(iv) children of " + std::to_string(u.label) + " are not split into blocks";
                    return;
                }
                std::size_t index = 0;
                for (std::size_t size : u.blocks) {
                    for (std::size_t i = 0; i < size; ++i, ++index) {
                        const auto& child = u.children[index];
                        if (child.is_unlabeled() && size != 1) {
                            error = "(iv) unlabeled leaf shares a block";
                            return;
                        }
                        if (i > 0 && u.children[index - 1].label >= child.label) {
                            error = "(iv) block below " + std::to_string(u.label) + " is not increasing";
                            return;
                        }
                    }
                }
            }
            for (const auto& child : u.children) visit(child, level + 1);
        };
    visit(T.tree, 0);
    if (error) return error;
    for (Value v = 1; static_cast<std::size_t>(v) <= M.n(); ++v) {
        if (!odd_labels.count(v)) return "(i) value " + std::to_string(v) + " labels no odd vertex";
    }
    return std::nullopt;
}

std::optional<std::string> code_pair_violation(const MultisetSpec& M, const CodePair& c) {
    for (const auto& [slot, count] : c.pool) {
        if (!slot_exists(M, slot)) return "slot " + slot.to_string() + " does not exist for this multiset";
        if (count == 0) return "slot " + slot.to_string() + " has multiplicity 0";
    }
    if (c.trace.size() != M.n()) {
        return "trace has " + std::to_string(c.trace.size()) + " insertions, expected " +
               std::to_string(M.n());
    }
    if (!c.trace.back().slot.is_root()) return "last insertion must be at slot 0";
    for (const auto& step : c.trace) {
        const auto it = c.pool.find(step.slot);
        if (it == c.pool.end()) return "slot " + step.slot.to_string() + " is not in P";
        if (step.block < 1 || step.block > it->second) {
            return "block " + std::to_string(step.block) + " out of range for slot " + step.slot.to_string();
        }
    }
    return std::nullopt;
}

void for_each_half_edge_tree(const MultisetSpec& M, std::size_t m,
                             const std::function<void(const HalfEdgeTree&)>& visit, std::size_t size_cap) {
    for_each_tree(M, [&](const OrderedLabeledTree& base) {
        std::vector<std::size_t> minimum;
        collect_gaps(base, 0, minimum);
        std::size_t required = 0;
        for (std::size_t x : minimum) required += x;
        if (required > m) return;
        std::vector<std::size_t> extra;
        weak_compositions(m - required, minimum.size(), extra, [&](const std::vector<std::size_t>& add) {
            std::vector<std::size_t> walls(minimum.size());
            for (std::size_t g = 0; g < walls.size(); ++g) walls[g] = minimum[g] + add[g];
            std::size_t cursor = 0;
            visit(HalfEdgeTree{insert_walls(base, 0, walls, cursor)});
        });
    }, size_cap);
}

std::vector<HalfEdgeTree> enumerate_half_edge_trees(const MultisetSpec& M, std::size_t m,
                                                    std::size_t size_cap) {
    std::vector<HalfEdgeTree> out;
    for_each_half_edge_tree(M, m, [&](const HalfEdgeTree& T) { out.push_back(T); }, size_cap);
    return out;
}

namespace {

// Enumerates BT_{M,m} from the parent slot of every value and the block
// sequence at every slot; shares nothing with theta.
class BlockTreeGenerator {
public:
    BlockTreeGenerator(const MultisetSpec& M, std::size_t m,
                       const std::function<void(const BlockTree&)>& visit)
        : M_(M), m_(m), visit_(visit), slots_(all_slots(M)), parent_(M.n() + 1, 0) {}

    void run() { assign_parent(1); }

private:
    void assign_parent(Value x) {
        if (static_cast<std::size_t>(x) > M_.n()) {
            if (acyclic()) distribute();
            return;
        }
        for (std::size_t s = 0; s < slots_.size(); ++s) {
            if (slots_[s].value == x) continue;
            parent_[static_cast<std::size_t>(x)] = s;
            assign_parent(x + 1);
        }
    }

    bool acyclic() const {
        for (Value x = 1; static_cast<std::size_t>(x) <= M_.n(); ++x) {
            Value y = x;
            for (std::size_t steps = 0; !slots_[parent_[static_cast<std::size_t>(y)]].is_root(); ++steps) {
                if (steps > M_.n()) return false;
                y = slots_[parent_[static_cast<std::size_t>(y)]].value;
            }
        }
        return true;
    }

    void distribute() {
        members_.assign(slots_.size(), 0);
        for (Value x = 1; static_cast<std::size_t>(x) <= M_.n(); ++x) {
            members_[parent_[static_cast<std::size_t>(x)]] |= std::uint32_t{1} << (x - 1);
        }
        layout_.clear();
        fill_slot(0, m_);
    }

    void fill_slot(std::size_t s, std::size_t blocks_left) {
        if (s == slots_.size()) {
            if (blocks_left == 0) {
                visit_(BlockTree{build_slot(M_, layout_, Slot::root(), kRootLabel)});
            }
            return;
        }
        const std::size_t least = members_[s] ? 1 : 0;
        for (std::size_t b = least; b <= blocks_left; ++b) {
            std::vector<std::vector<Value>> sequence;
            block_sequences(members_[s], b, sequence, [&] {
                if (b) layout_[slots_[s]] = sequence;
                fill_slot(s + 1, blocks_left - b);
                layout_.erase(slots_[s]);
            });
        }
    }

    template <class Emit>
    void block_sequences(std::uint32_t remaining, std::size_t blocks_left,
                         std::vector<std::vector<Value>>& sequence, Emit&& emit) {
        if (blocks_left == 0) {
            if (remaining == 0) emit();
            return;
        }
        if (blocks_left - 1 >= (remaining ? 1u : 0u)) {
            sequence.emplace_back();
            block_sequences(remaining, blocks_left - 1, sequence, emit);
            sequence.pop_back();
        }
        for (std::uint32_t part = remaining; part; part = (part - 1) & remaining) {
            std::vector<Value> block;
            for (Value x = 1; static_cast<std::size_t>(x) <= M_.n(); ++x) {
                if (part & (std::uint32_t{1} << (x - 1))) block.push_back(x);
            }
            sequence.push_back(std::move(block));
            block_sequences(remaining & ~part, blocks_left - 1, sequence, emit);
            sequence.pop_back();
        }
    }

    const MultisetSpec& M_;
    std::size_t m_;
    const std::function<void(const BlockTree&)>& visit_;
    std::vector<Slot> slots_;
    std::vector<std::size_t> parent_;
    std::vector<std::uint32_t> members_;
    SlotLayout layout_;
};

} // namespace

void for_each_block_tree(const MultisetSpec& M, std::size_t m,
                         const std::function<void(const BlockTree&)>& visit, std::size_t size_cap) {
    require_within_cap(M, size_cap, "block tree enumeration");
    BlockTreeGenerator(M, m, visit).run();
}

std::vector<BlockTree> enumerate_block_trees(const MultisetSpec& M, std::size_t m, std::size_t size_cap) {
    std::vector<BlockTree> out;
    for_each_block_tree(M, m, [&](const BlockTree& T) { out.push_back(T); }, size_cap);
    return out;
}

void for_each_code_pair(const MultisetSpec& M, std::size_t m,
                        const std::function<void(const CodePair&)>& visit, std::size_t size_cap) {
    require_within_cap(M, size_cap, "code pair enumeration");
    const std::vector<Slot> slots = all_slots(M);
    CodePair c;
    c.trace.resize(M.n());

    const std::function<void(std::size_t)> choose_trace = [&](std::size_t i) {
        if (i == M.n()) {
            visit(c);
            return;
        }
        for (const auto& [slot, count] : c.pool) {
            if (i + 1 == M.n() && !slot.is_root()) continue;
            for (std::size_t b = 1; b <= count; ++b) {
                c.trace[i] = Insertion{slot, b};
                choose_trace(i + 1);
            }
        }
    };
    // The root slot holds at least one copy, since the last insertion goes there.
    const std::function<void(std::size_t, std::size_t)> choose_pool = [&](std::size_t s, std::size_t left) {
        if (s == slots.size()) {
            if (left == 0) choose_trace(0);
            return;
        }
        const std::size_t least = s + 1 == slots.size() ? left : (s == 0 ? 1 : 0);
        for (std::size_t count = least; count <= left; ++count) {
            if (count) c.pool[slots[s]] = count;
            choose_pool(s + 1, left - count);
            c.pool.erase(slots[s]);
        }
    };
    if (m == 0) return;
    choose_pool(0, m);
}

std::vector<CodePair> enumerate_code_pairs(const MultisetSpec& M, std::size_t m, std::size_t size_cap) {
    std::vector<CodePair> out;
    for_each_code_pair(M, m, [&](const CodePair& c) { out.push_back(c); }, size_cap);
    return out;
}

BigInt count_code_pairs(const MultisetSpec& M, std::size_t m) { return closed_form_coefficient(M, m); }

HalfEdgeTree psi(const MultisetSpec& M, const BlockTree& T) {
    require_valid(block_tree_violation(M, T), "psi");
    return HalfEdgeTree{psi_node(T.tree, 0)};
}

HalfEdgeTree psi(const BlockTree& T) { return psi(multiset_of(T.tree), T); }

BlockTree psi_inverse(const MultisetSpec& M, const HalfEdgeTree& T) {
    require_valid(half_edge_tree_violation(M, T), "psi_inverse");
    return BlockTree{psi_inverse_node(T.tree, 0)};
}

BlockTree psi_inverse(const HalfEdgeTree& T) { return psi_inverse(multiset_of(T.tree), T); }

std::vector<Value> pruning_order(const BlockTree& T) {
    BlockLayout layout;
    collect_layout(T.tree, Slot::root(), layout);
    return prune(layout.placement);
}

CodePair theta(const MultisetSpec& M, const BlockTree& T) {
    require_valid(block_tree_violation(M, T), "theta");
    BlockLayout layout;
    collect_layout(T.tree, Slot::root(), layout);
    CodePair c;
    c.pool = layout.block_counts;
    for (Value l : prune(layout.placement)) {
        const Placement& p = layout.placement.at(l);
        c.trace.push_back(Insertion{p.slot, p.block});
    }
    return c;
}

CodePair theta(const BlockTree& T) { return theta(multiset_of(T.tree), T); }

BlockTree theta_inverse(const CodePair& c, const MultisetSpec& M) {
    require_valid(code_pair_violation(M, c), "theta_inverse");
    const std::size_t n = M.n();
    std::vector<bool> used(n + 1, false);
    SlotLayout layout;
    for (const auto& [slot, count] : c.pool) layout[slot].resize(count);
    for (std::size_t i = 0; i < n; ++i) {
        Value chosen = 0;
        for (Value x = static_cast<Value>(n); x >= 1; --x) {
            if (used[static_cast<std::size_t>(x)]) continue;
            const bool referenced = std::any_of(c.trace.begin() + static_cast<long>(i), c.trace.end(),
                                                [x](const Insertion& step) { return step.slot.value == x; });
            if (!referenced) {
                chosen = x;
                break;
            }
        }
        if (chosen == 0) throw ValidationError("theta_inverse: no value can be placed at step " + std::to_string(i + 1));
        used[static_cast<std::size_t>(chosen)] = true;
        auto& block = layout[c.trace[i].slot][c.trace[i].block - 1];
        block.insert(std::upper_bound(block.begin(), block.end(), chosen), chosen);
    }
    return BlockTree{build_slot(M, layout, Slot::root(), kRootLabel)};
}

} // namespace qstir
