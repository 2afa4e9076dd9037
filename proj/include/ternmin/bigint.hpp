#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace ternmin {

using BigInt = boost::multiprecision::cpp_int;

BigInt pow_int(long base, unsigned exponent);
inline BigInt pow3(unsigned exponent) { return pow_int(3, exponent); }

std::string to_decimal(const BigInt& value);

/// Parses an optionally signed decimal string; throws InvalidInput otherwise.
BigInt from_decimal(std::string_view text);

}  // namespace ternmin
