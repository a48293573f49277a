#include "qstirling/polynomial.hpp"

#include "qstirling/errors.hpp"

#include <algorithm>
#include <cctype>
#include <utility>

namespace qstir {

namespace mp = boost::multiprecision;

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPolynomial::IntPolynomial(std::initializer_list<long long> coeffs) {
    coeffs_.reserve(coeffs.size());
    for (long long c : coeffs) coeffs_.emplace_back(c);
    trim();
}

IntPolynomial IntPolynomial::monomial(BigInt c, std::size_t e) {
    std::vector<BigInt> coeffs(e + 1);
    coeffs[e] = std::move(c);
    return IntPolynomial(std::move(coeffs));
}

void IntPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::size_t IntPolynomial::valuation() const noexcept {
    std::size_t v = 0;
    while (v < coeffs_.size() && coeffs_[v] == 0) ++v;
    return v == coeffs_.size() ? 0 : v;
}

BigInt IntPolynomial::coeff(std::size_t e) const {
    return e < coeffs_.size() ? coeffs_[e] : BigInt(0);
}

void IntPolynomial::add_term(const BigInt& c, std::size_t e) {
    if (coeffs_.size() <= e) coeffs_.resize(e + 1);
    coeffs_[e] += c;
    trim();
}

BigInt IntPolynomial::evaluate(const BigInt& t) const {
    BigInt acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
    return acc;
}

IntPolynomial IntPolynomial::derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<BigInt> d(coeffs_.size() - 1);
    for (std::size_t e = 1; e < coeffs_.size(); ++e) d[e - 1] = coeffs_[e] * e;
    return IntPolynomial(std::move(d));
}

BigInt IntPolynomial::content() const {
    BigInt g = 0;
    for (const auto& c : coeffs_) {
        g = mp::gcd(g, c);
        if (g == 1) break;
    }
    return mp::abs(g);
}

IntPolynomial IntPolynomial::primitive_part() const {
    if (is_zero()) return {};
    BigInt c = content();
    if (leading() < 0) c = -c;
    std::vector<BigInt> out(coeffs_.size());
    for (std::size_t e = 0; e < coeffs_.size(); ++e) out[e] = coeffs_[e] / c;
    return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::strip_valuation() const {
    const std::size_t v = valuation();
    return IntPolynomial(std::vector<BigInt>(coeffs_.begin() + static_cast<long>(v), coeffs_.end()));
}

IntPolynomial IntPolynomial::operator-() const {
    IntPolynomial out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& other) {
    if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size());
    for (std::size_t e = 0; e < other.coeffs_.size(); ++e) coeffs_[e] += other.coeffs_[e];
    trim();
    return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& other) {
    if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size());
    for (std::size_t e = 0; e < other.coeffs_.size(); ++e) coeffs_[e] -= other.coeffs_[e];
    trim();
    return *this;
}

IntPolynomial& IntPolynomial::operator*=(const BigInt& c) {
    for (auto& x : coeffs_) x *= c;
    trim();
    return *this;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<BigInt> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return IntPolynomial(std::move(out));
}

IntPolynomial pseudo_remainder(const IntPolynomial& f, const IntPolynomial& g) {
    if (g.is_zero()) throw DomainError("pseudo-remainder by the zero polynomial");
    if (f.degree() < g.degree()) return f;
    const BigInt lc = mp::abs(g.leading());
    const bool negative_lc = g.leading() < 0;
    std::vector<BigInt> r = f.coeffs();
    const std::size_t dg = static_cast<std::size_t>(g.degree());
    // Each step: r <- |lc| * r - sign(lc) * r_top * t^shift * g
    for (std::size_t top = r.size(); top-- > dg;) {
        const BigInt lead = r[top];
        for (auto& c : r) c *= lc;
        if (lead == 0) continue;
        const std::size_t shift = top - dg;
        for (std::size_t e = 0; e <= dg; ++e) {
            if (negative_lc) r[shift + e] += lead * g.coeffs()[e];
            else r[shift + e] -= lead * g.coeffs()[e];
        }
    }
    r.resize(dg);
    return IntPolynomial(std::move(r));
}

IntPolynomial exact_divide(const IntPolynomial& f, const IntPolynomial& g) {
    if (g.is_zero()) throw DomainError("division by the zero polynomial");
    if (f.is_zero()) return {};
    if (f.degree() < g.degree()) throw DomainError("exact_divide: divisor does not divide dividend");
    std::vector<BigInt> r = f.coeffs();
    const std::size_t dg = static_cast<std::size_t>(g.degree());
    std::vector<BigInt> q(static_cast<std::size_t>(f.degree() - g.degree()) + 1);
    for (std::size_t top = r.size(); top-- > dg;) {
        if (r[top] == 0) continue;
        if (r[top] % g.leading() != 0) {
            throw DomainError("exact_divide: divisor does not divide dividend");
        }
        const BigInt factor = r[top] / g.leading();
        const std::size_t shift = top - dg;
        q[shift] = factor;
        for (std::size_t e = 0; e <= dg; ++e) r[shift + e] -= factor * g.coeffs()[e];
    }
    for (std::size_t e = 0; e < dg; ++e) {
        if (r[e] != 0) throw DomainError("exact_divide: divisor does not divide dividend");
    }
    return IntPolynomial(std::move(q));
}

IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero()) return b.primitive_part();
    if (b.is_zero()) return a.primitive_part();
    IntPolynomial x = a.primitive_part();
    IntPolynomial y = b.primitive_part();
    if (x.degree() < y.degree()) std::swap(x, y);
    while (!y.is_zero()) {
        IntPolynomial r = pseudo_remainder(x, y).primitive_part();
        x = std::move(y);
        y = std::move(r);
    }
    return x;
}

namespace {

std::string power_suffix(std::size_t e) {
    if (e == 0) return "";
    if (e == 1) return "t";
    return "t^" + std::to_string(e);
}

} // namespace

std::string to_string(const IntPolynomial& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (std::size_t e = p.coeffs().size(); e-- > 0;) {
        const BigInt& c = p.coeffs()[e];
        if (c == 0) continue;
        std::string magnitude = BigInt(mp::abs(c)).str();
        if (e > 0) magnitude += "*" + power_suffix(e);
        if (out.empty()) out = (c < 0 ? "-" : "") + magnitude;
        else out += (c < 0 ? " - " : " + ") + magnitude;
    }
    return out;
}

std::string to_display_string(const IntPolynomial& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (std::size_t e = 0; e < p.coeffs().size(); ++e) {
        const BigInt& c = p.coeffs()[e];
        if (c == 0) continue;
        const BigInt magnitude = mp::abs(c);
        std::string term = (magnitude == 1 && e > 0) ? std::string() : magnitude.str();
        term += power_suffix(e);
        if (out.empty()) out = (c < 0 ? "-" : "") + term;
        else out += (c < 0 ? " - " : " + ") + term;
    }
    return out;
}

IntPolynomial parse_polynomial(std::string_view text) {
    std::string s;
    for (char ch : text) {
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    }
    if (s.empty()) throw ParseError("empty polynomial");
    IntPolynomial out;
    std::size_t pos = 0;
    while (pos < s.size()) {
        bool negative = false;
        if (s[pos] == '+' || s[pos] == '-') {
            negative = s[pos] == '-';
            ++pos;
        } else if (pos != 0) {
            throw ParseError("expected '+' or '-' in polynomial \"" + std::string(text) + "\"");
        }
        std::size_t end = pos;
        while (end < s.size() && s[end] != '+' && s[end] != '-') ++end;
        const std::string term = s.substr(pos, end - pos);
        if (term.empty()) throw ParseError("empty term in polynomial \"" + std::string(text) + "\"");

        std::size_t digits = 0;
        while (digits < term.size() && std::isdigit(static_cast<unsigned char>(term[digits]))) ++digits;
        BigInt coeff = digits ? BigInt(term.substr(0, digits)) : BigInt(1);
        std::size_t cursor = digits;
        std::size_t exponent = 0;
        if (cursor < term.size() && term[cursor] == '*') {
            if (!digits) throw ParseError("dangling '*' in term \"" + term + "\"");
            ++cursor;
        }
        if (cursor < term.size()) {
            if (term[cursor] != 't') throw ParseError("unexpected symbol in term \"" + term + "\"");
            ++cursor;
            exponent = 1;
            if (cursor < term.size()) {
                if (term[cursor] != '^' || cursor + 1 == term.size()) {
                    throw ParseError("malformed exponent in term \"" + term + "\"");
                }
                const std::string exp_text = term.substr(cursor + 1);
                if (!std::all_of(exp_text.begin(), exp_text.end(),
                                 [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); })) {
                    throw ParseError("malformed exponent in term \"" + term + "\"");
                }
                exponent = std::stoul(exp_text);
            }
        } else if (!digits) {
            throw ParseError("malformed term \"" + term + "\"");
        }
        out.add_term(negative ? BigInt(-coeff) : coeff, exponent);
        pos = end;
    }
    return out;
}

} // namespace qstir
