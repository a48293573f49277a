#pragma once

#include "qstirling/bigint.hpp"

#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace qstir {

// Dense univariate polynomial in t with arbitrary-precision integer coefficients.
// Kept canonical: no trailing zero coefficients, so the zero polynomial is empty and
// equality is coefficient-wise.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<BigInt> coeffs);
    IntPolynomial(std::initializer_list<long long> coeffs);

    // c * t^e
    static IntPolynomial monomial(BigInt c, std::size_t e);

    const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    // Degree; -1 for the zero polynomial.
    long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
    // Multiplicity of t as a factor; 0 for the zero polynomial.
    std::size_t valuation() const noexcept;
    // Coefficient of t^e (0 beyond the degree).
    BigInt coeff(std::size_t e) const;
    const BigInt& leading() const { return coeffs_.back(); }

    // Adds c to the coefficient of t^e.
    void add_term(const BigInt& c, std::size_t e);

    BigInt evaluate(const BigInt& t) const;
    IntPolynomial derivative() const;
    // Greatest common divisor of the coefficients, always >= 0.
    BigInt content() const;
    // Divided by its content, leading coefficient made positive.
    IntPolynomial primitive_part() const;
    // Divided by t^valuation().
    IntPolynomial strip_valuation() const;

    IntPolynomial operator-() const;
    IntPolynomial& operator+=(const IntPolynomial& other);
    IntPolynomial& operator-=(const IntPolynomial& other);
    IntPolynomial& operator*=(const BigInt& c);

    friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
    friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
    friend IntPolynomial operator*(IntPolynomial a, const BigInt& c) { return a *= c; }
    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);

    bool operator==(const IntPolynomial&) const = default;

private:
    void trim();

    std::vector<BigInt> coeffs_;
};

// Remainder r with |lc(g)|^(deg f - deg g + 1) * f = q * g + r, deg r < deg g.
// Scaling by a positive constant keeps the sign structure Sturm chains rely on.
IntPolynomial pseudo_remainder(const IntPolynomial& f, const IntPolynomial& g);

// Exact quotient f / g over the integers; throws DomainError if g does not divide f.
IntPolynomial exact_divide(const IntPolynomial& f, const IntPolynomial& g);

// Primitive gcd with positive leading coefficient (primitive PRS).
IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b);

enum class TermOrder { ascending, descending };

// Interface form "4*t^3 + 7*t^2 + 1*t": descending, explicit coefficients, zero terms omitted.
std::string to_string(const IntPolynomial& p);
// Display form "t + 7t^2 + 4t^3": ascending, unit coefficients elided.
std::string to_display_string(const IntPolynomial& p);

// Accepts both forms above (any term order, optional '*', implicit unit coefficients).
IntPolynomial parse_polynomial(std::string_view text);

} // namespace qstir
