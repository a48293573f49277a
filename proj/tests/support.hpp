#pragma once

#include "oracles.hpp"
#include "qstirling/multiset.hpp"
#include "qstirling/polynomial.hpp"

namespace support {

inline oracle::Coeffs coeffs_of(const qstir::IntPolynomial& p) {
    oracle::Coeffs out;
    for (const auto& c : p.coeffs()) out.push_back(static_cast<std::int64_t>(c));
    return out;
}

// Drops trailing zeros so oracle vectors compare against canonical polynomials.
inline oracle::Coeffs trimmed(oracle::Coeffs c) {
    while (!c.empty() && c.back() == 0) c.pop_back();
    return c;
}

} // namespace support
