#include "ternmin/combinatorics.hpp"

#include "ternmin/errors.hpp"

namespace ternmin {

BigInt binomial(long n, long r) {
  if (n < 0) throw InvalidInput("binomial: n must be nonnegative");
  if (r < 0 || r > n) return 0;
  if (r > n - r) r = n - r;
  BigInt result = 1;
  for (long j = 1; j <= r; ++j) {
    result *= n - r + j;
    result /= j;
  }
  return result;
}

BigInt krawtchouk(int t, int x, int m, int h) {
  if (h < 2) throw InvalidInput("krawtchouk: h must be >= 2");
  if (t < 0 || x < 0 || x > m) throw InvalidInput("krawtchouk: need t >= 0 and 0 <= x <= m");
  BigInt sum = 0;
  for (int j = 0; j <= t; ++j) {
    BigInt term = pow_int(h - 1, static_cast<unsigned>(t - j)) * binomial(x, j) * binomial(m - x, t - j);
    if (j % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  return sum;
}

BigInt lloyd(int k, int x, int m, int h) {
  if (k < 0) throw InvalidInput("lloyd: k must be nonnegative");
  BigInt sum = 0;
  for (int t = 0; t <= k; ++t) sum += krawtchouk(t, x, m, h);
  return sum;
}

}  // namespace ternmin
