#include "qstirling/analysis.hpp"

#include "qstirling/errors.hpp"
#include "qstirling/generating.hpp"

namespace qstir {

namespace {

int sign(const BigInt& x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

std::size_t sign_changes(const std::vector<int>& signs) {
    std::size_t changes = 0;
    int previous = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (previous != 0 && s != previous) ++changes;
        previous = s;
    }
    return changes;
}

std::vector<int> signs_at_pos_infinity(const std::vector<IntPolynomial>& chain) {
    std::vector<int> signs;
    for (const auto& p : chain) signs.push_back(sign(p.leading()));
    return signs;
}

std::vector<int> signs_at_neg_infinity(const std::vector<IntPolynomial>& chain) {
    std::vector<int> signs;
    for (const auto& p : chain) signs.push_back(p.degree() % 2 == 0 ? sign(p.leading()) : -sign(p.leading()));
    return signs;
}

std::vector<int> signs_at_zero(const std::vector<IntPolynomial>& chain) {
    std::vector<int> signs;
    for (const auto& p : chain) signs.push_back(sign(p.coeff(0)));
    return signs;
}

void require_squarefree(const IntPolynomial& P) {
    if (P.is_zero()) throw DomainError("root counting on the zero polynomial");
    if (gcd(P, P.derivative()).degree() > 0) {
        throw DomainError("polynomial " + to_string(P) + " is not squarefree");
    }
}

void require_nonnegative(const IntPolynomial& P) {
    if (P.is_zero()) throw DomainError("coefficient checks on the zero polynomial");
    for (const auto& c : P.coeffs()) {
        if (c < 0) throw DomainError("negative coefficient in " + to_string(P));
    }
}

// Coefficients from the valuation up to the degree.
std::vector<BigInt> support_run(const IntPolynomial& P) {
    return std::vector<BigInt>(P.coeffs().begin() + static_cast<long>(P.valuation()), P.coeffs().end());
}

} // namespace

IntPolynomial squarefree_part(const IntPolynomial& P) {
    if (P.is_zero()) throw DomainError("squarefree part of the zero polynomial");
    const IntPolynomial g = gcd(P, P.derivative());
    return exact_divide(P.primitive_part(), g).primitive_part();
}

std::vector<IntPolynomial> sturm_chain(const IntPolynomial& P) {
    std::vector<IntPolynomial> chain{P};
    IntPolynomial next = P.derivative();
    while (!next.is_zero()) {
        chain.push_back(next);
        IntPolynomial r = -pseudo_remainder(chain[chain.size() - 2], chain.back());
        if (!r.is_zero()) {
            r = exact_divide(r, IntPolynomial::monomial(r.content(), 0));
        }
        next = std::move(r);
    }
    return chain;
}

std::size_t count_distinct_real_roots(const IntPolynomial& P) {
    require_squarefree(P);
    const auto chain = sturm_chain(P);
    return sign_changes(signs_at_neg_infinity(chain)) - sign_changes(signs_at_pos_infinity(chain));
}

std::size_t count_positive_roots(const IntPolynomial& P) {
    require_squarefree(P);
    if (P.coeff(0) == 0) throw DomainError("count_positive_roots needs P(0) != 0");
    const auto chain = sturm_chain(P);
    return sign_changes(signs_at_zero(chain)) - sign_changes(signs_at_pos_infinity(chain));
}

RootReport is_real_rooted(const IntPolynomial& P) {
    if (P.is_zero()) throw DomainError("real-rootedness of the zero polynomial");
    RootReport report;
    report.polynomial = P;
    report.t_valuation = P.valuation();
    report.squarefree = squarefree_part(P.strip_valuation());
    report.distinct_real_roots = count_distinct_real_roots(report.squarefree);
    report.all_real = static_cast<long>(report.distinct_real_roots) == report.squarefree.degree();
    report.all_nonpositive = count_positive_roots(report.squarefree) == 0;
    return report;
}

bool has_internal_zeros(const IntPolynomial& P) {
    require_nonnegative(P);
    for (const auto& c : support_run(P)) {
        if (c == 0) return true;
    }
    return false;
}

bool is_log_concave(const IntPolynomial& P) {
    if (has_internal_zeros(P)) return false;
    const auto a = support_run(P);
    for (std::size_t i = 1; i + 1 < a.size(); ++i) {
        if (a[i] * a[i] < a[i - 1] * a[i + 1]) return false;
    }
    return true;
}

bool is_unimodal(const IntPolynomial& P) {
    require_nonnegative(P);
    const auto a = support_run(P);
    std::size_t i = 1;
    while (i < a.size() && a[i] >= a[i - 1]) ++i;
    while (i < a.size() && a[i] <= a[i - 1]) ++i;
    return i >= a.size();
}

MultisetSpec reduced_multiset(const MultisetSpec& M) {
    std::vector<std::size_t> mult(M.n(), 1);
    mult.front() = M.K() - M.n() + 1;
    return MultisetSpec(std::move(mult));
}

CorollaryReduction corollary_reduction(const MultisetSpec& M, std::size_t size_cap) {
    CorollaryReduction result{reduced_multiset(M),
                              quasi_stirling_polynomial(M, PolynomialMethod::via_words, size_cap),
                              {}, false};
    result.stirling = stirling_polynomial(result.M_prime, size_cap);
    result.equal = result.quasi_stirling == result.stirling;
    return result;
}

} // namespace qstir
