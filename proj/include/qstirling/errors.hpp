#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qstir {

// Malformed text input (multiset, word, tree, polynomial, code pair).
class ParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A structurally well-formed value that violates a class invariant.
class ValidationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A word containing the forbidden abab crossing where a quasi-Stirling word is required.
class PatternError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

// Operation undefined for the given argument (des of the empty word, roots of 0, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class SizeLimitError : public std::runtime_error {
public:
    SizeLimitError(const std::string& what_for, std::size_t requested, std::size_t cap)
        : std::runtime_error(what_for + ": size " + std::to_string(requested) +
                             " exceeds cap " + std::to_string(cap)),
          requested_(requested), cap_(cap) {}

    std::size_t requested() const noexcept { return requested_; }
    std::size_t cap() const noexcept { return cap_; }

private:
    std::size_t requested_;
    std::size_t cap_;
};

} // namespace qstir
