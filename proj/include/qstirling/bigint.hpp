#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace qstir {

using BigInt = boost::multiprecision::cpp_int;

inline std::string to_string(const BigInt& value) { return value.str(); }

// Integer power with a machine-sized exponent; 0^0 == 1.
inline BigInt ipow(const BigInt& base, unsigned exponent) {
    return boost::multiprecision::pow(base, exponent);
}

} // namespace qstir
