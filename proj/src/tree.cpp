#include "qstirling/tree.hpp"

#include "qstirling/errors.hpp"

#include <cctype>

namespace qstir {

std::size_t OrderedLabeledTree::size() const noexcept {
    std::size_t total = 1;
    for (const auto& child : children) total += child.size();
    return total;
}

namespace {

class TreeParser {
public:
    explicit TreeParser(std::string_view text) : text_(text) {}

    OrderedLabeledTree parse() {
        OrderedLabeledTree tree = vertex();
        if (pos_ != text_.size()) fail("trailing characters");
        return tree;
    }

private:
    OrderedLabeledTree vertex() {
        OrderedLabeledTree node;
        node.label = label();
        if (peek() != '(') return node;
        ++pos_;
        std::size_t block_start = 0;
        bool has_separator = false;
        while (true) {
            node.children.push_back(vertex());
            const char c = peek();
            ++pos_;
            if (c == ',') continue;
            if (c == '|' || c == ')') {
                if (c == '|') has_separator = true;
                if (has_separator) {
                    node.blocks.push_back(node.children.size() - block_start);
                    block_start = node.children.size();
                }
                if (c == ')') break;
                continue;
            }
            --pos_;
            fail("expected ',', '|' or ')'");
        }
        return node;
    }

    Value label() {
        if (peek() == '*') {
            ++pos_;
            return kUnlabeled;
        }
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("expected a label");
        if (pos_ - start > 9) fail("label too large");
        return std::stoi(std::string(text_.substr(start, pos_ - start)));
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    [[noreturn]] void fail(const std::string& why) const {
        throw ParseError("tree text \"" + std::string(text_) + "\" at offset " +
                         std::to_string(pos_) + ": " + why);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

void format_into(const OrderedLabeledTree& tree, std::string& out) {
    out += tree.is_unlabeled() ? std::string("*") : std::to_string(tree.label);
    if (tree.children.empty()) return;
    out += '(';
    std::size_t block = 0;
    std::size_t left_in_block = tree.blocks.empty() ? tree.children.size() : tree.blocks.front();
    for (std::size_t i = 0; i < tree.children.size(); ++i) {
        if (i) {
            if (left_in_block == 0 && block + 1 < tree.blocks.size()) {
                out += '|';
                left_in_block = tree.blocks[++block];
            } else {
                out += ',';
            }
        }
        format_into(tree.children[i], out);
        if (left_in_block) --left_in_block;
    }
    out += ')';
}

} // namespace

OrderedLabeledTree parse_tree(std::string_view text) { return TreeParser(text).parse(); }

std::string format_tree(const OrderedLabeledTree& tree) {
    std::string out;
    format_into(tree, out);
    return out;
}

} // namespace qstir
