#pragma once

#include "ternmin/bigint.hpp"
#include "ternmin/gf3.hpp"

#include <string>

namespace ternmin {

/// Exact element a + b*zeta of Z[zeta], zeta a primitive cube root of
/// unity (zeta^2 = -1 - zeta).
class EisensteinInt {
 public:
  EisensteinInt() = default;
  EisensteinInt(BigInt a, BigInt b) : a_(std::move(a)), b_(std::move(b)) {}

  const BigInt& a() const { return a_; }
  const BigInt& b() const { return b_; }

  /// 2 * Re(a + b*zeta) = 2a - b, always an integer.
  BigInt re2() const { return 2 * a_ - b_; }

  EisensteinInt& operator+=(const EisensteinInt& o);
  EisensteinInt& operator-=(const EisensteinInt& o);

  friend EisensteinInt operator+(EisensteinInt x, const EisensteinInt& y) { return x += y; }
  friend EisensteinInt operator-(EisensteinInt x, const EisensteinInt& y) { return x -= y; }
  friend EisensteinInt operator*(const EisensteinInt& x, const EisensteinInt& y);
  friend EisensteinInt operator*(const BigInt& s, const EisensteinInt& x) {
    return EisensteinInt(s * x.a_, s * x.b_);
  }
  friend bool operator==(const EisensteinInt&, const EisensteinInt&) = default;

  std::string to_string() const;

 private:
  BigInt a_;
  BigInt b_;
};

EisensteinInt zeta_pow(F3 e);

/// c0 + c1*zeta + c2*zeta^2 for a histogram of exponents.
EisensteinInt from_exponent_counts(const BigInt& c0, const BigInt& c1, const BigInt& c2);

}  // namespace ternmin
