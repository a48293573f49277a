#include "support.hpp"
#include "qstirling/errors.hpp"
#include "qstirling/tree_model.hpp"
#include "qstirling/word.hpp"

#include <doctest.h>

#include <functional>
#include <set>

using namespace qstir;

namespace {

const char* const kWorkedTree = "0(2,7(7(1)),5(5(6,3(3)),5(4)))";

// Independent cdes: cyclic descents of every (vertex, children...) sequence.
std::size_t oracle_cdes(const OrderedLabeledTree& T) {
    if (T.children.empty()) return 1;
    std::size_t total = 0;
    std::function<void(const OrderedLabeledTree&)> walk = [&](const OrderedLabeledTree& u) {
        if (u.children.empty()) return;
        std::vector<Value> cyc{u.label};
        for (const auto& c : u.children) cyc.push_back(c.label);
        for (std::size_t i = 0; i < cyc.size(); ++i) total += cyc[i] > cyc[(i + 1) % cyc.size()] ? 1 : 0;
        for (const auto& c : u.children) walk(c);
    };
    walk(T);
    return total;
}

// Independent membership test for T_M.
bool oracle_member(const MultisetSpec& M, const OrderedLabeledTree& T) {
    if (T.label != 0) return false;
    std::vector<std::size_t> seen(M.n() + 1, 0);
    bool ok = true;
    std::function<void(const OrderedLabeledTree&, std::size_t)> walk = [&](const OrderedLabeledTree& u,
                                                                         std::size_t level) {
        if (level % 2 == 1) {
            if (u.label < 1 || static_cast<std::size_t>(u.label) > M.n()) {
                ok = false;
                return;
            }
            ++seen[u.label];
            if (u.children.size() != M.multiplicity(u.label) - 1) ok = false;
            for (const auto& c : u.children)
                if (c.label != u.label) ok = false;
        }
        for (const auto& c : u.children) walk(c, level + 1);
    };
    walk(T, 0);
    for (std::size_t v = 1; v <= M.n(); ++v) ok = ok && seen[v] == 1;
    return ok;
}

} // namespace

TEST_CASE("tree text round trip") {
    const auto T = parse_tree(kWorkedTree);
    CHECK(format_tree(T) == kWorkedTree);
    CHECK(T.size() == 12);
    CHECK(T.children.size() == 3);
    CHECK(format_tree(parse_tree("0")) == "0");
    for (const char* bad : {"", "0(", "0()", "0(1,)", "a", "0(1))", "0(1)(2)"}) {
        CAPTURE(bad);
        CHECK_THROWS_AS(parse_tree(bad), ParseError);
    }
}

TEST_CASE("worked example tree") {
    const MultisetSpec M = parse_multiset("1,1,2,1,3,1,2");
    const auto T = parse_tree(kWorkedTree);
    CHECK(validate_tree(M, T));
    CHECK(cdes_tree(T) == 5);
    CHECK(oracle_cdes(T) == 5);
    CHECK(tree_ends(T) == Ends{ExtendedValue::finite(2), ExtendedValue::finite(5)});
    const Word w = phi(T);
    CHECK(format_word(w) == "27175633545");
    CHECK(des(w) == 5);
    CHECK(phi_inverse(w) == T);
}

TEST_CASE("cdes of single vertices") {
    CHECK(cdes_vertex(parse_tree("5")) == 0);
    CHECK(cdes_vertex(parse_tree("5(5,5)")) == 0);
    CHECK(cdes_vertex(parse_tree("0(2,1)")) == 2);
    CHECK(cdes_vertex(parse_tree("0(1,2)")) == 1);
    CHECK(cdes_vertex(parse_tree("3(3(1))")) == 0);
    CHECK(cdes_tree(parse_tree("0")) == 1);
    CHECK(tree_ends(parse_tree("0")) == Ends{ExtendedValue::pos_infinity(), ExtendedValue::neg_infinity()});
}

TEST_CASE("tree_violation names the broken rule") {
    const MultisetSpec M = parse_multiset("1,2");
    CHECK_FALSE(tree_violation(M, parse_tree("0(1,2(2))")));
    CHECK(tree_violation(M, parse_tree("1(1,2(2))")));     // root label
    CHECK(tree_violation(M, parse_tree("0(1,2)")));        // 2 needs one child
    CHECK(tree_violation(M, parse_tree("0(1,2(1))")));     // child label
    CHECK(tree_violation(M, parse_tree("0(1,2(2),1)")));   // duplicate odd vertex
    CHECK(tree_violation(M, parse_tree("0(2(2))")));       // missing value
    CHECK(tree_violation(M, parse_tree("0(1,2(2),3)")));   // value outside M
    CHECK_FALSE(tree_shape_violation(parse_tree("0(4,9(9))")));
    CHECK(tree_shape_violation(parse_tree("0(4(4),4)")));
    CHECK_THROWS_AS(phi(parse_tree("0(1(2))")), ValidationError);
    CHECK_THROWS_AS(phi(parse_tree("0(1(1),1)")), ValidationError);
}

TEST_CASE("phi_inverse rejects abab") {
    CHECK_THROWS_AS(phi_inverse(parse_word("1212")), PatternError);
    CHECK_THROWS_AS(phi_inverse(parse_word("1312324")), PatternError);
}

TEST_CASE("small cases") {
    CHECK(enumerate_trees(parse_multiset("1")).size() == 1);
    CHECK(format_tree(enumerate_trees(parse_multiset("1")).front()) == "0(1)");
    CHECK(format_word(phi(parse_tree("0(1(1),2(2))"))) == "1122");
    CHECK(format_word(phi(parse_tree("0(1(1(2(2))))"))) == "1221");
    CHECK(format_tree(phi_inverse(parse_word("2112"))) == "0(2(2(1(1))))");
    CHECK(format_tree(phi_inverse(parse_word("2211"))) == "0(2(2),1(1))");
    CHECK(tree_polynomial(parse_multiset("1,2,1")) == IntPolynomial{0, 1, 7, 4});
}

TEST_CASE("phi is a statistic-preserving bijection for K <= 6") {
    for (const auto& M : multisets_up_to(6)) {
        CAPTURE(M.to_string());
        const auto trees = enumerate_trees(M);
        std::set<Word> images;
        for (const auto& T : trees) {
            CHECK(oracle_member(M, T));
            CHECK(validate_tree(M, T));
            const Word w = phi(T);
            CHECK(oracle::quasi_stirling(w.values));
            CHECK(oracle_cdes(T) == oracle::des(w.values));
            CHECK(cdes_tree(T) == des(w));
            CHECK(tree_ends(T) == ends(w));
            CHECK(phi_inverse(w) == T);
            images.insert(w);
        }
        std::size_t qs = 0;
        for (const auto& w : oracle::arrangements(M.multiplicities())) {
            if (!oracle::quasi_stirling(w)) continue;
            ++qs;
            CHECK(images.count(Word{w}) == 1);
        }
        CHECK(trees.size() == qs);
        CHECK(images.size() == qs);
    }
}
