#pragma once

#include "qstirling/bigint.hpp"
#include "qstirling/multiset.hpp"

#include <compare>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qstir {

// A permutation of a multiset, as its sequence of values.
struct Word {
    std::vector<Value> values;

    bool empty() const noexcept { return values.empty(); }
    std::size_t size() const noexcept { return values.size(); }

    bool operator==(const Word&) const = default;
    auto operator<=>(const Word&) const = default;
};

// A value extended by the two sentinels used for first/last of the empty word
// and of the one-vertex tree. Ordering: -inf < every finite value < +inf.
class ExtendedValue {
public:
    enum class Kind { neg_infinity, finite, pos_infinity };

    static constexpr ExtendedValue finite(Value v) { return ExtendedValue(Kind::finite, v); }
    static constexpr ExtendedValue pos_infinity() { return ExtendedValue(Kind::pos_infinity, 0); }
    static constexpr ExtendedValue neg_infinity() { return ExtendedValue(Kind::neg_infinity, 0); }

    constexpr Kind kind() const noexcept { return kind_; }
    constexpr bool is_finite() const noexcept { return kind_ == Kind::finite; }
    // Only meaningful when is_finite().
    constexpr Value value() const noexcept { return value_; }

    std::string to_string() const;

    constexpr bool operator==(const ExtendedValue&) const = default;
    constexpr auto operator<=>(const ExtendedValue&) const = default;

private:
    constexpr ExtendedValue(Kind kind, Value v) : kind_(kind), value_(v) {}

    Kind kind_;
    Value value_;
};

struct Ends {
    ExtendedValue first;
    ExtendedValue last;

    bool operator==(const Ends&) const = default;
};

// Accepts the compact form "27175633545" (single-digit values) and the separated
// form "2.7.1.7.5" needed once values exceed 9. The empty string is the empty word.
Word parse_word(std::string_view text);

// Compact form when every value is a single digit, dot-separated otherwise.
std::string format_word(const Word& w);

// Multiplicity of every value occurring in w.
std::map<Value, std::size_t> word_content(const Word& w);

// Throws ValidationError unless w is a permutation of M.
void validate_word(const MultisetSpec& M, const Word& w);
bool is_permutation_of(const MultisetSpec& M, const Word& w);

// Visits every distinct permutation of M once, in lexicographic order.
void for_each_word(const MultisetSpec& M, const std::function<void(const Word&)>& visit,
                   std::size_t size_cap = kDefaultSizeCap);
std::vector<Word> enumerate_words(const MultisetSpec& M, std::size_t size_cap = kDefaultSizeCap);

// True iff no indices i<j<k<l have w_i = w_k and w_j = w_l.
bool is_quasi_stirling(const Word& w);

// True iff every entry strictly between two consecutive occurrences of a value v is
// larger than v. Repeated v's are allowed to sit next to each other (11 is Stirling),
// which is what makes {1^k, 2, ..., n} behave as expected for k >= 3.
bool is_stirling(const Word& w);

// Number of strict descents plus one: des(1122) == 1. Throws DomainError on the empty word.
std::size_t des(const Word& w);

// (w_1, w_K), or (+inf, -inf) for the empty word.
Ends ends(const Word& w);

struct SpecialCounts {
    // |quasi-Stirling words| when M = {1^2, ..., n^2}: n! * Catalan(n).
    std::optional<BigInt> total;
    // Number of quasi-Stirling words with des == n when M = {1^k, ..., n^k}, k >= 2.
    std::optional<BigInt> top_des;
};

SpecialCounts special_counts(const MultisetSpec& M);

} // namespace qstir
