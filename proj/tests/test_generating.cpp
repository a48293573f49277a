#include "support.hpp"
#include "qstirling/errors.hpp"
#include "qstirling/generating.hpp"

#include <doctest.h>

using namespace qstir;
using support::coeffs_of;
using support::trimmed;

namespace {

// Values computed once by the brute-force oracle and frozen here.
struct Frozen {
    std::string multiset;
    IntPolynomial quasi_stirling;
    IntPolynomial stirling;
    std::vector<long long> series; // c_0..c_6 of Q/(1-t)^(K+1)
};

const std::vector<Frozen> kFrozen = {
    {"1", {0, 1}, {0, 1}, {0, 1, 2, 3, 4, 5, 6}},
    {"2", {0, 1}, {0, 1}, {0, 1, 3, 6, 10, 15, 21}},
    {"1,2", {0, 1, 2}, {0, 1, 1}, {0, 1, 6, 18, 40, 75, 126}},
    {"2,2", {0, 1, 3}, {0, 1, 2}, {0, 1, 8, 30, 80, 175, 336}},
    {"1,3", {0, 1, 3}, {0, 1, 1}, {0, 1, 8, 30, 80, 175, 336}},
    {"1,2,1", {0, 1, 7, 4}, {0, 1, 5, 2}, {0, 1, 12, 54, 160, 375, 756}},
    {"2,1,1", {0, 1, 7, 4}, {0, 1, 7, 4}, {0, 1, 12, 54, 160, 375, 756}},
    {"2,2,2", {0, 1, 13, 16}, {0, 1, 8, 6}, {0, 1, 20, 135, 560, 1750, 4536}},
    {"3,3", {0, 1, 5}, {0, 1, 3}, {0, 1, 12, 63, 224, 630, 1512}},
};

} // namespace

TEST_CASE("binomial") {
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(5, 0) == 1);
    CHECK(binomial(5, 5) == 1);
    CHECK(binomial(5, 6) == 0);
    CHECK(binomial(5, -1) == 0);
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(60, 30) == BigInt("118264581564861424"));
}

TEST_CASE("frozen polynomials and series") {
    for (const auto& f : kFrozen) {
        CAPTURE(f.multiset);
        const MultisetSpec M = parse_multiset(f.multiset);
        CHECK(quasi_stirling_polynomial(M, PolynomialMethod::via_words) == f.quasi_stirling);
        CHECK(quasi_stirling_polynomial(M, PolynomialMethod::via_trees) == f.quasi_stirling);
        CHECK(stirling_polynomial(M) == f.stirling);
        const SeriesPrefix s = expand_series(f.quasi_stirling, M.K(), 6);
        CHECK(s.denominator_power == M.K() + 1);
        REQUIRE(s.coeffs.size() == 7);
        for (std::size_t m = 0; m <= 6; ++m) {
            CHECK(s.coeffs[m] == f.series[m]);
            CHECK(closed_form_coefficient(M, m) == f.series[m]);
        }
    }
}

TEST_CASE("polynomials agree with the oracle for K <= 7") {
    for (const auto& M : multisets_up_to(7)) {
        CAPTURE(M.to_string());
        const auto expected = trimmed(oracle::quasi_stirling_polynomial(M.multiplicities()));
        CHECK(coeffs_of(quasi_stirling_polynomial(M, PolynomialMethod::via_words)) == expected);
        CHECK(coeffs_of(quasi_stirling_polynomial(M, PolynomialMethod::via_trees)) == expected);
        CHECK(coeffs_of(stirling_polynomial(M)) ==
              trimmed(oracle::stirling_polynomial(M.multiplicities())));
    }
}

TEST_CASE("expand_series and closed form agree with prefix sums and Pascal") {
    for (const auto& M : multisets_up_to(6)) {
        CAPTURE(M.to_string());
        const IntPolynomial P = quasi_stirling_polynomial(M, PolynomialMethod::via_words);
        const auto expected = oracle::divide_by_one_minus_t(coeffs_of(P), M.K() + 1, 10);
        CHECK(coeffs_of(IntPolynomial(expand_series(P, M.K(), 10).coeffs)) == trimmed(expected));
        for (std::size_t m = 0; m <= 10; ++m) {
            CHECK(closed_form_coefficient(M, m) == oracle::closed_form(M.K(), M.n(), m));
        }
    }
    // A polynomial longer than the requested prefix.
    const auto s = expand_series(IntPolynomial{1, 1, 1, 1}, 0, 1);
    CHECK(s.coeffs == std::vector<BigInt>{1, 2});
}

TEST_CASE("verify_main_identity") {
    const IdentityReport r = verify_main_identity(parse_multiset("1,2,1"), 8);
    CHECK(r.pass);
    CHECK(r.methods_agree);
    CHECK(r.m_max == 8);
    REQUIRE(r.rows.size() == 9);
    CHECK(r.rows[3].series == 54);
    CHECK(r.via_trees == IntPolynomial{0, 1, 7, 4});

    const IdentityReport one = verify_main_identity(parse_multiset("1"), 5);
    for (const auto& row : one.rows) CHECK(row.series == row.m);

    CHECK_THROWS_AS(verify_main_identity(MultisetSpec::uniform(5, 2), 3), SizeLimitError);
}

TEST_CASE("Eulerian polynomials") {
    CHECK(eulerian_polynomial(1) == IntPolynomial{0, 1});
    CHECK(eulerian_polynomial(3) == IntPolynomial{0, 1, 4, 1});
    CHECK(eulerian_polynomial(4) == IntPolynomial{0, 1, 11, 11, 1});
    CHECK(eulerian_polynomial(8).evaluate(1) == 40320);
    CHECK_THROWS_AS(eulerian_polynomial(0), DomainError);
    // A_n is the descent polynomial of the permutations of [n].
    for (std::size_t n = 1; n <= 6; ++n) {
        CHECK(eulerian_polynomial(n) ==
              quasi_stirling_polynomial(MultisetSpec(std::vector<std::size_t>(n, 1)), PolynomialMethod::via_words));
    }
}

TEST_CASE("lemma sum identity") {
    CHECK(lemma_sum_identity(1, 1));
    CHECK(lemma_sum_identity(3, 7));
    CHECK(lemma_sum_identity(30, 30));
    CHECK_THROWS_AS(lemma_sum_identity(0, 3), DomainError);
    CHECK_THROWS_AS(lemma_sum_identity(3, 0), DomainError);
}
