#include "ternmin/eisenstein.hpp"

namespace ternmin {

EisensteinInt& EisensteinInt::operator+=(const EisensteinInt& o) {
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

EisensteinInt& EisensteinInt::operator-=(const EisensteinInt& o) {
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

// (a + b z)(c + d z) = ac + (ad + bc) z + bd z^2,  z^2 = -1 - z
EisensteinInt operator*(const EisensteinInt& x, const EisensteinInt& y) {
  const BigInt bd = x.b_ * y.b_;
  return EisensteinInt(x.a_ * y.a_ - bd, x.a_ * y.b_ + x.b_ * y.a_ - bd);
}

std::string EisensteinInt::to_string() const {
  std::string out = to_decimal(a_);
  out += b_ < 0 ? " - " : " + ";
  out += to_decimal(b_ < 0 ? BigInt(-b_) : b_);
  out += "z";
  return out;
}

EisensteinInt zeta_pow(F3 e) {
  switch (e.value()) {
    case 0:
      return {1, 0};
    case 1:
      return {0, 1};
    default:
      return {-1, -1};
  }
}

EisensteinInt from_exponent_counts(const BigInt& c0, const BigInt& c1, const BigInt& c2) {
  return {c0 - c2, c1 - c2};
}

}  // namespace ternmin
