#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace qstir {

// Letter of a word / label of a tree vertex. 0 is reserved for the tree root.
using Value = int;

// Largest K accepted by the exhaustive enumerators unless a caller passes its own cap.
inline constexpr std::size_t kDefaultSizeCap = 9;

// The multiset {1^k1, 2^k2, ..., n^kn}, stored as its multiplicity vector.
class MultisetSpec {
public:
    // Throws ValidationError if the vector is empty or holds a zero.
    explicit MultisetSpec(std::vector<std::size_t> multiplicities);

    const std::vector<std::size_t>& multiplicities() const noexcept { return mult_; }

    // Number of distinct values.
    std::size_t n() const noexcept { return mult_.size(); }
    // Total size, sum of the multiplicities.
    std::size_t K() const noexcept { return total_; }

    // Multiplicity of value v in [1..n]; 0 outside that range.
    std::size_t multiplicity(Value v) const noexcept;

    // The multiset {1^k, 2^k, ..., n^k}.
    static MultisetSpec uniform(std::size_t n, std::size_t k);

    // Compact form "k1,k2,...,kn", the inverse of parse_multiset.
    std::string to_string() const;
    // Set notation, e.g. "{1,2^2,3}".
    std::string to_set_notation() const;

    bool operator==(const MultisetSpec&) const = default;

private:
    std::vector<std::size_t> mult_;
    std::size_t total_ = 0;
};

// Parses "k1,k2,...,kn". Errors name the offending token.
MultisetSpec parse_multiset(std::string_view text);

// Every composition (k1,...,kn) with 1 <= k1+...+kn <= max_size, ordered by K and then
// lexicographically by multiplicity vector.
std::vector<MultisetSpec> multisets_up_to(std::size_t max_size);

// Throws SizeLimitError when M.K() exceeds cap.
void require_within_cap(const MultisetSpec& M, std::size_t cap, const char* what_for);

} // namespace qstir
