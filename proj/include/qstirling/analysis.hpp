#pragma once

#include "qstirling/multiset.hpp"
#include "qstirling/polynomial.hpp"

#include <cstddef>
#include <vector>

namespace qstir {

// P / gcd(P, P') in primitive form with positive leading coefficient.
// Throws DomainError for the zero polynomial.
IntPolynomial squarefree_part(const IntPolynomial& P);

// Sturm chain P, P', -rem(...), ... with every term scaled by a positive constant,
// so sign sequences are those of the classical chain.
std::vector<IntPolynomial> sturm_chain(const IntPolynomial& P);

// Number of distinct real roots of a squarefree polynomial. Throws DomainError if P
// is zero or has a repeated factor.
std::size_t count_distinct_real_roots(const IntPolynomial& P);

// Number of distinct roots in (0, +inf) of a squarefree P with P(0) != 0.
std::size_t count_positive_roots(const IntPolynomial& P);

struct RootReport {
    IntPolynomial polynomial;
    // Multiplicity of the root t = 0.
    std::size_t t_valuation = 0;
    // Squarefree part of polynomial / t^t_valuation.
    IntPolynomial squarefree;
    // Real roots of `squarefree`, i.e. distinct nonzero real roots of polynomial.
    std::size_t distinct_real_roots = 0;
    // degree(squarefree) == distinct_real_roots
    bool all_real = false;
    // no root in (0, +inf)
    bool all_nonpositive = false;
};

// Decides real-rootedness exactly. Throws DomainError for the zero polynomial.
RootReport is_real_rooted(const IntPolynomial& P);

// The checks below run over the coefficients between the valuation and the degree.
// They throw DomainError for the zero polynomial or a negative coefficient.

// True if some coefficient strictly inside that range is zero.
bool has_internal_zeros(const IntPolynomial& P);
// a_i^2 >= a_{i-1} a_{i+1} throughout; an internal zero makes the run not log-concave.
bool is_log_concave(const IntPolynomial& P);
// Weakly increasing, then weakly decreasing.
bool is_unimodal(const IntPolynomial& P);

struct CorollaryReduction {
    MultisetSpec M_prime;
    IntPolynomial quasi_stirling;
    IntPolynomial stirling;
    bool equal = false;
};

// Compares the quasi-Stirling polynomial of M with the Stirling polynomial of
// M' = {1^(K-n+1), 2, ..., n}.
CorollaryReduction corollary_reduction(const MultisetSpec& M, std::size_t size_cap = kDefaultSizeCap);

// {1^(K-n+1), 2, 3, ..., n}
MultisetSpec reduced_multiset(const MultisetSpec& M);

} // namespace qstir
