// Acceptance run: one PASS/FAIL line per criterion, each against a wall-clock limit.

#include "oracles.hpp"
#include "qstirling/analysis.hpp"
#include "qstirling/code_model.hpp"
#include "qstirling/generating.hpp"
#include "qstirling/tree_model.hpp"
#include "qstirling/word.hpp"

#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <set>
#include <string>
#include <vector>

using namespace qstir;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;

    void require(bool condition, const std::string& what) {
        if (!condition && ok) {
            ok = false;
            detail = what;
        }
    }
};

struct Criterion {
    int id;
    const char* title;
    double limit_seconds;
    std::function<Outcome()> body;
};

BigInt to_big(const oracle::Coeffs::value_type v) { return BigInt(v); }

Outcome example_polynomial() {
    Outcome o;
    const MultisetSpec M = parse_multiset("1,2,1");
    const IntPolynomial expected{0, 1, 7, 4};
    o.require(quasi_stirling_polynomial(M, PolynomialMethod::via_words) == expected, "word enumeration");
    o.require(quasi_stirling_polynomial(M, PolynomialMethod::via_trees) == expected, "tree enumeration");
    o.require(oracle::quasi_stirling_polynomial(M.multiplicities()) == oracle::Coeffs{0, 1, 7, 4}, "oracle");
    o.detail = o.ok ? "Q = " + to_display_string(expected) : o.detail;
    return o;
}

Outcome main_identity() {
    Outcome o;
    std::size_t checked = 0;
    for (const auto& M : multisets_up_to(8)) {
        const IdentityReport r = verify_main_identity(M, 10);
        o.require(r.pass, "identity fails for " + M.to_string());
        for (const auto& row : r.rows) {
            o.require(row.closed_form == to_big(oracle::closed_form(M.K(), M.n(), row.m)),
                      "closed form disagrees with Pascal for " + M.to_string());
        }
        ++checked;
    }
    if (o.ok) o.detail = std::to_string(checked) + " multisets, m = 0..10";
    return o;
}

Outcome uniform_pairs() {
    Outcome o;
    const MultisetSpec M = MultisetSpec::uniform(3, 2);
    const IdentityReport r = verify_main_identity(M, 10);
    o.require(r.pass, "identity");
    for (const auto& row : r.rows) {
        const BigInt scaled = ipow(BigInt(row.m), 3) * binomial(3 + row.m, static_cast<long long>(row.m));
        o.require(scaled % 4 == 0 && scaled / 4 == row.series, "m^3/4 C(3+m,m) at m=" + std::to_string(row.m));
    }
    std::size_t total = 0;
    std::size_t top = 0;
    for_each_word(M, [&](const Word& w) {
        if (!is_quasi_stirling(w)) return;
        ++total;
        if (des(w) == 3) ++top;
    });
    o.require(total == 30, "|Q| = " + std::to_string(total));
    o.require(top == 16, "des = 3 count " + std::to_string(top));
    // 3! * Catalan(3) and (n+1)^(n-1)
    o.require(BigInt(6) * (binomial(6, 3) / 4) == 30, "3! C_3");
    o.require(ipow(BigInt(4), 2) == 16, "4^2");
    if (o.ok) o.detail = "|Q| = 30, 16 words with des = 3, identity through m = 10";
    return o;
}

Outcome uniform_triples() {
    Outcome o;
    const MultisetSpec M = MultisetSpec::uniform(2, 3);
    std::size_t top = 0;
    for_each_word(M, [&](const Word& w) {
        if (is_quasi_stirling(w) && des(w) == 2) ++top;
    });
    o.require(top == 5, "des = 2 count " + std::to_string(top));
    o.require(special_counts(M).top_des == BigInt(5), "((k-1)n+1)^(n-1)");
    if (o.ok) o.detail = "5 words with des = 2";
    return o;
}

Outcome phi_bijection() {
    Outcome o;
    std::size_t elements = 0;
    for (const auto& M : multisets_up_to(7)) {
        const std::string tag = " for " + M.to_string();
        std::set<Word> images;
        std::size_t trees = 0;
        for_each_tree(M, [&](const OrderedLabeledTree& T) {
            ++trees;
            const Word w = phi(T);
            o.require(oracle::quasi_stirling(w.values) && is_permutation_of(M, w), "image not quasi-Stirling" + tag);
            o.require(cdes_tree(T) == des(w) && tree_ends(T) == ends(w), "statistics differ" + tag);
            o.require(phi_inverse(w) == T, "phi_inverse(phi(T)) != T" + tag);
            images.insert(w);
        });
        std::size_t words = 0;
        for_each_word(M, [&](const Word& w) {
            if (!oracle::quasi_stirling(w.values)) return;
            ++words;
            o.require(images.count(w) == 1, "word not hit" + tag);
            o.require(phi(phi_inverse(w)) == w, "phi(phi_inverse(w)) != w" + tag);
        });
        o.require(trees == words && images.size() == words, "cardinality" + tag);
        elements += trees;
    }
    const OrderedLabeledTree worked = parse_tree("0(2,7(7(1)),5(5(6,3(3)),5(4)))");
    const Word w = phi(worked);
    o.require(format_word(w) == "27175633545", "worked tree image " + format_word(w));
    o.require(cdes_tree(worked) == 5 && des(w) == 5, "worked tree cdes");
    o.require(ends(w) == Ends{ExtendedValue::finite(2), ExtendedValue::finite(5)}, "worked tree ends");
    if (o.ok) o.detail = std::to_string(elements) + " trees; worked tree -> 27175633545, (5, 2, 5)";
    return o;
}

Outcome code_bijections() {
    Outcome o;
    std::size_t elements = 0;
    for (const char* text : {"1", "1,2", "2,2", "1,2,1"}) {
        const MultisetSpec M = parse_multiset(text);
        for (std::size_t m = 0; m <= 4; ++m) {
            const std::string tag = " for " + M.to_string() + ", m=" + std::to_string(m);
            const auto blocks = enumerate_block_trees(M, m);
            const auto halves = enumerate_half_edge_trees(M, m);
            const auto pairs = enumerate_code_pairs(M, m);
            const BigInt expected = to_big(oracle::closed_form(M.K(), M.n(), m));
            o.require(BigInt(blocks.size()) == expected && BigInt(halves.size()) == expected &&
                          BigInt(pairs.size()) == expected,
                      "cardinality" + tag);
            std::set<std::string> half_set, psi_images;
            std::set<std::pair<std::string, std::string>> pair_set, theta_images;
            for (const auto& h : halves) {
                half_set.insert(format_tree(h.tree));
                o.require(psi(M, psi_inverse(M, h)) == h, "psi round trip" + tag);
            }
            for (const auto& c : pairs) {
                pair_set.insert({format_pool(c), format_trace(c)});
                o.require(theta(M, theta_inverse(c, M)) == c, "theta round trip" + tag);
            }
            for (const auto& b : blocks) {
                const HalfEdgeTree h = psi(M, b);
                const CodePair c = theta(M, b);
                o.require(psi_inverse(M, h) == b && theta_inverse(c, M) == b, "inverse round trip" + tag);
                psi_images.insert(format_tree(h.tree));
                theta_images.insert({format_pool(c), format_trace(c)});
            }
            o.require(psi_images == half_set, "psi image" + tag);
            o.require(theta_images == pair_set, "theta image" + tag);
            elements += blocks.size();
        }
    }
    const MultisetSpec worked = parse_multiset("1,1,2,1,3,1,2");
    const CodePair c = parse_code_pair("0^2,3_1,5_1^2,5_2^3,7_1", "(5_1,1)(5_2,3)(5_1,1)(0,2)(0,1)(7_1,1)(0,1)");
    o.require(!code_pair_violation(worked, c), "worked code pair: pair rejected");
    const BlockTree b = theta_inverse(c, worked);
    o.require(!block_tree_violation(worked, b), "worked code pair: block tree invalid");
    o.require(theta(worked, b) == c, "worked code pair: pair not reproduced");
    o.require(format_pool(theta(worked, b)) == "0^2,3_1,5_1^2,5_2^3,7_1", "worked code pair: pool");
    o.require(psi_inverse(worked, psi(worked, b)) == b, "worked code pair: psi round trip");
    if (o.ok) o.detail = std::to_string(elements) + " block trees; worked code pair reproduced";
    return o;
}

Outcome lemma_sum() {
    Outcome o;
    for (std::int64_t n = 1; n <= 30; ++n) {
        for (std::int64_t m = 1; m <= 30; ++m) {
            std::int64_t sum = 0;
            for (std::int64_t l = 1; l <= m; ++l) sum += l * oracle::choose(n + m - l - 1, n - 1);
            o.require(sum == oracle::choose(n + m, n + 1), "oracle at n=" + std::to_string(n));
            o.require(lemma_sum_identity(n, m), "library at n=" + std::to_string(n) + ", m=" + std::to_string(m));
        }
    }
    if (o.ok) o.detail = "900 pairs";
    return o;
}

Outcome corollaries() {
    Outcome o;
    std::size_t checked = 0;
    for (const auto& M : multisets_up_to(8)) {
        const std::string tag = " for " + M.to_string();
        const CorollaryReduction r = corollary_reduction(M);
        o.require(r.equal, "Q_M != Q_M'" + tag);
        const RootReport roots = is_real_rooted(r.quasi_stirling);
        o.require(roots.all_real, "not real-rooted" + tag);
        o.require(roots.all_nonpositive, "positive root" + tag);
        o.require(is_log_concave(r.quasi_stirling), "not log-concave" + tag);
        o.require(is_unimodal(r.quasi_stirling), "not unimodal" + tag);
        ++checked;
    }
    if (o.ok) o.detail = std::to_string(checked) + " multisets";
    return o;
}

Outcome eulerian() {
    Outcome o;
    for (std::size_t n = 1; n <= 8; ++n) {
        const IntPolynomial A = eulerian_polynomial(n);
        const SeriesPrefix s = expand_series(A, n, 12);
        for (std::size_t m = 0; m <= 12; ++m) {
            o.require(s.coeffs[m] == ipow(BigInt(m), static_cast<unsigned>(n)),
                      "n=" + std::to_string(n) + ", m=" + std::to_string(m));
        }
        // A_n is also the descent polynomial of [n].
        const MultisetSpec perm(std::vector<std::size_t>(n, 1));
        o.require(A == stirling_polynomial(perm), "A_" + std::to_string(n) + " vs descents");
    }
    if (o.ok) o.detail = "n <= 8, m <= 12";
    return o;
}

} // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "example polynomial t + 7t^2 + 4t^3", 1.0, example_polynomial},
        {2, "series identity, K <= 8, m <= 10", 300.0, main_identity},
        {3, "M = {1^2,2^2,3^2}: identity and counts", 10.0, uniform_pairs},
        {4, "M = {1^3,2^3}: top coefficient", 1.0, uniform_triples},
        {5, "phi bijection, K <= 7", 120.0, phi_bijection},
        {6, "psi and theta bijections, m <= 4", 120.0, code_bijections},
        {7, "lemma sum identity, n, m <= 30", 1.0, lemma_sum},
        {8, "reduction, real roots, log-concavity, K <= 8", 300.0, corollaries},
        {9, "Eulerian identity, n <= 8, m <= 12", 10.0, eulerian},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        const auto start = Clock::now();
        Outcome o;
        try {
            o = c.body();
        } catch (const std::exception& e) {
            o.ok = false;
            o.detail = std::string("exception: ") + e.what();
        }
        const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
        const bool in_time = seconds <= c.limit_seconds;
        if (!in_time && o.ok) o.detail = "too slow";
        const bool pass = o.ok && in_time;
        failures += pass ? 0 : 1;
        std::printf("%s AC%d %s [%.3f s, limit %.0f s] %s\n", pass ? "PASS" : "FAIL", c.id, c.title, seconds,
                    c.limit_seconds, o.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
