#include "ternmin/bigint.hpp"

#include "ternmin/errors.hpp"

#include <cctype>

namespace ternmin {

BigInt pow_int(long base, unsigned exponent) {
  BigInt result = 1;
  BigInt b = base;
  while (exponent > 0) {
    if (exponent & 1U) result *= b;
    b *= b;
    exponent >>= 1U;
  }
  return result;
}

std::string to_decimal(const BigInt& value) { return value.str(); }

BigInt from_decimal(std::string_view text) {
  std::size_t pos = 0;
  bool negative = false;
  if (!text.empty() && (text[0] == '-' || text[0] == '+')) {
    negative = text[0] == '-';
    pos = 1;
  }
  if (pos == text.size()) throw InvalidInput("empty decimal integer");
  BigInt value = 0;
  for (; pos < text.size(); ++pos) {
    const char c = text[pos];
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw InvalidInput("not a decimal integer: " + std::string(text));
    }
    value = value * 10 + (c - '0');
  }
  return negative ? BigInt(-value) : value;
}

}  // namespace ternmin
