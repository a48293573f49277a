#pragma once

#include "qstirling/bigint.hpp"
#include "qstirling/multiset.hpp"
#include "qstirling/polynomial.hpp"

#include <cstddef>
#include <vector>

namespace qstir {

// Descent polynomials use des = (strict descents) + 1, so every one of them is
// divisible by t and A_1(t) = t.

// C(a, b); 0 when b < 0 or b > a.
BigInt binomial(std::size_t a, long long b);

enum class PolynomialMethod { via_words, via_trees };

// Sum of t^des(w) over the quasi-Stirling permutations w of M, either by
// enumerating words or as the cdes generating polynomial of T_M.
IntPolynomial quasi_stirling_polynomial(const MultisetSpec& M, PolynomialMethod method,
                                        std::size_t size_cap = kDefaultSizeCap);

// Sum of t^des(w) over the Stirling permutations w of M.
IntPolynomial stirling_polynomial(const MultisetSpec& M, std::size_t size_cap = kDefaultSizeCap);

// Eulerian polynomial A_n(t) from the Eulerian-number recurrence (A_n(1) = n!).
IntPolynomial eulerian_polynomial(std::size_t n);

// First terms of P(t) / (1 - t)^(denominator_power).
struct SeriesPrefix {
    std::vector<BigInt> coeffs;
    std::size_t denominator_power = 0;
};

// c_m = sum_j P_j * C(K + m - j, K) for 0 <= m <= m_max, i.e. P(t) / (1 - t)^(K+1).
SeriesPrefix expand_series(const IntPolynomial& P, std::size_t K, std::size_t m_max);

// m^(n-1) * C(K - n + m, K - n + 1), which equals m^n / (K - n + 1) * C(K - n + m, m).
BigInt closed_form_coefficient(const MultisetSpec& M, std::size_t m);

struct IdentityRow {
    std::size_t m = 0;
    BigInt series;
    BigInt closed_form;
    bool ok = false;
};

struct IdentityReport {
    MultisetSpec multiset;
    IntPolynomial via_words;
    IntPolynomial via_trees;
    bool methods_agree = false;
    std::size_t m_max = 0;
    std::vector<IdentityRow> rows;
    bool pass = false;
};

// Computes the quasi-Stirling polynomial both ways, expands it over (1-t)^(K+1) and
// compares each coefficient with closed_form_coefficient. pass requires both the
// method agreement and every row.
IdentityReport verify_main_identity(const MultisetSpec& M, std::size_t m_max,
                                    std::size_t size_cap = kDefaultSizeCap);

// sum_{l=1}^{m} l * C(n + m - l - 1, n - 1) == C(n + m, n + 1), evaluated exactly.
bool lemma_sum_identity(std::size_t n, std::size_t m);

} // namespace qstir
