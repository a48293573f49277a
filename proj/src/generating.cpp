#include "qstirling/generating.hpp"

#include "qstirling/errors.hpp"
#include "qstirling/tree_model.hpp"
#include "qstirling/word.hpp"

#include <future>

namespace qstir {

BigInt binomial(std::size_t a, long long b) {
    if (b < 0 || static_cast<unsigned long long>(b) > a) return 0;
    std::size_t k = static_cast<std::size_t>(b);
    if (k > a - k) k = a - k;
    BigInt result = 1;
    for (std::size_t i = 1; i <= k; ++i) {
        result *= a - k + i;
        result /= i;
    }
    return result;
}

namespace {

IntPolynomial descent_polynomial(const MultisetSpec& M, bool (*keep)(const Word&),
                                 std::size_t size_cap) {
    std::vector<BigInt> coeffs(M.K() + 1);
    for_each_word(M, [&](const Word& w) {
        if (keep(w)) ++coeffs[des(w)];
    }, size_cap);
    return IntPolynomial(std::move(coeffs));
}

} // namespace

IntPolynomial quasi_stirling_polynomial(const MultisetSpec& M, PolynomialMethod method,
                                        std::size_t size_cap) {
    if (method == PolynomialMethod::via_trees) return tree_polynomial(M, size_cap);
    return descent_polynomial(M, &is_quasi_stirling, size_cap);
}

IntPolynomial stirling_polynomial(const MultisetSpec& M, std::size_t size_cap) {
    return descent_polynomial(M, &is_stirling, size_cap);
}

IntPolynomial eulerian_polynomial(std::size_t n) {
    if (n == 0) throw DomainError("eulerian_polynomial: n must be >= 1");
    // row[k] = number of permutations of [j] with k classical descents
    std::vector<BigInt> row{1};
    for (std::size_t j = 2; j <= n; ++j) {
        std::vector<BigInt> next(j);
        for (std::size_t k = 0; k < j; ++k) {
            if (k < row.size()) next[k] += (k + 1) * row[k];
            if (k >= 1) next[k] += (j - k) * row[k - 1];
        }
        row = std::move(next);
    }
    // shift by one for the +1 convention
    row.insert(row.begin(), BigInt(0));
    return IntPolynomial(std::move(row));
}

SeriesPrefix expand_series(const IntPolynomial& P, std::size_t K, std::size_t m_max) {
    SeriesPrefix series;
    series.denominator_power = K + 1;
    series.coeffs.resize(m_max + 1);
    const auto& p = P.coeffs();
    for (std::size_t m = 0; m <= m_max; ++m) {
        for (std::size_t j = 0; j < p.size() && j <= m; ++j) {
            if (p[j] != 0) series.coeffs[m] += p[j] * binomial(K + m - j, static_cast<long long>(K));
        }
    }
    return series;
}

BigInt closed_form_coefficient(const MultisetSpec& M, std::size_t m) {
    const std::size_t excess = M.K() - M.n();
    return ipow(BigInt(m), static_cast<unsigned>(M.n() - 1)) *
           binomial(excess + m, static_cast<long long>(excess + 1));
}

IdentityReport verify_main_identity(const MultisetSpec& M, std::size_t m_max, std::size_t size_cap) {
    require_within_cap(M, size_cap, "verify_main_identity");
    auto trees = std::async(std::launch::async, [&] {
        return quasi_stirling_polynomial(M, PolynomialMethod::via_trees, size_cap);
    });
    IdentityReport report{M, quasi_stirling_polynomial(M, PolynomialMethod::via_words, size_cap),
                          trees.get(), false, m_max, {}, false};
    report.methods_agree = report.via_words == report.via_trees;

    const SeriesPrefix series = expand_series(report.via_words, M.K(), m_max);
    report.pass = report.methods_agree;
    for (std::size_t m = 0; m <= m_max; ++m) {
        IdentityRow row{m, series.coeffs[m], closed_form_coefficient(M, m), false};
        row.ok = row.series == row.closed_form;
        report.pass = report.pass && row.ok;
        report.rows.push_back(std::move(row));
    }
    return report;
}

bool lemma_sum_identity(std::size_t n, std::size_t m) {
    if (n == 0 || m == 0) throw DomainError("lemma_sum_identity: n and m must be >= 1");
    BigInt lhs = 0;
    for (std::size_t l = 1; l <= m; ++l) {
        lhs += l * binomial(n + m - l - 1, static_cast<long long>(n - 1));
    }
    return lhs == binomial(n + m, static_cast<long long>(n + 1));
}

} // namespace qstir
