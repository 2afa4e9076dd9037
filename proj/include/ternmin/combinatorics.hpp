#pragma once

#include "ternmin/bigint.hpp"

namespace ternmin {

/// C(n, r), zero when r < 0 or r > n.
BigInt binomial(long n, long r);

/// Krawtchouk polynomial of degree t with parameters h and m, evaluated
/// by its defining alternating sum
///   K_t(x, m) = sum_{j=0}^{t} (-1)^j (h-1)^{t-j} C(x, j) C(m-x, t-j).
/// Requires 0 <= x <= m and h >= 2.
BigInt krawtchouk(int t, int x, int m, int h = 3);

/// Lloyd polynomial: partial sum of Krawtchouk values for t = 0..k.
BigInt lloyd(int k, int x, int m, int h = 3);

}  // namespace ternmin
