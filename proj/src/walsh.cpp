#include "ternmin/walsh.hpp"

#include "ternmin/code.hpp"
#include "ternmin/combinatorics.hpp"
#include "ternmin/errors.hpp"

#include <string>

namespace ternmin {
namespace {

std::vector<std::uint8_t> raw_table(const FunctionTable& f) {
  std::vector<std::uint8_t> raw(f.values.size());
  for (std::size_t x = 0; x < raw.size(); ++x) raw[x] = f.values[x].value();
  return raw;
}

}  // namespace

EisensteinInt walsh_brute(const FunctionTable& f, const F3Vector& w) {
  if (w.dim() != f.m) throw InvalidInput("walsh_brute: dimension mismatch");
  const std::uint64_t n = space_size(f.m);
  std::int64_t counts[3] = {0, 0, 0};
  for (std::uint64_t x = 0; x < n; ++x) {
    const F3 e = f.values[x] - inner_product(w, vector_at(f.m, x));
    ++counts[e.value()];
  }
  return from_exponent_counts(counts[0], counts[1], counts[2]);
}

std::vector<EisensteinInt> walsh_spectrum(const FunctionTable& f, Backend backend, int max_m) {
  require_budget(f.m, max_m, "full Walsh spectrum");
  const auto hist = kernels::exponent_histograms(raw_table(f), f.m, backend);
  std::vector<EisensteinInt> out;
  out.reserve(hist.size());
  for (const auto& c : hist) out.push_back(from_exponent_counts(c[0], c[1], c[2]));
  return out;
}

std::vector<std::int64_t> walsh_re2_spectrum(const FunctionTable& f, Backend backend, int max_m) {
  require_budget(f.m, max_m, "full Walsh spectrum");
  const auto hist = kernels::exponent_histograms(raw_table(f), f.m, backend);
  std::vector<std::int64_t> out;
  out.reserve(hist.size());
  // 2 Re(c0 + c1 z + c2 z^2) = 2 c0 - c1 - c2
  for (const auto& c : hist) out.push_back(2 * c[0] - c[1] - c[2]);
  return out;
}

BigInt walsh_re2_closed(Family family, int m, int k, const WeightSet& subset, int i) {
  if (k < 2 || k > (m - 1) / 2) {
    throw InvalidInput("walsh_re2_closed: k=" + std::to_string(k) + " outside 2..floor((m-1)/2)");
  }
  if (i < 0 || i > m) throw InvalidInput("walsh_re2_closed: weight class outside 0..m");
  const BigInt q = pow3(static_cast<unsigned>(m));
  const BigInt ball = ball_size(m, k);
  switch (family) {
    case Family::f:
      if (subset.empty()) throw InvalidInput("walsh_re2_closed: family f needs nonempty S");
      [[fallthrough]];
    case Family::g:
      if (i == 0) return 2 * q - 3 * ball;
      return -3 * (lloyd(k, i, m) - 1);
    case Family::gbar:
      if (i == 0) return -q + 3 * (ball + 1);
      return 3 * lloyd(k, i, m);
    case Family::custom:
      break;
  }
  throw InvalidInput("walsh_re2_closed: no closed form for custom functions");
}

BigInt walsh_re2_class(const WeightClassFunction& fn, int i) {
  const int m = fn.m();
  if (i < 0 || i > m) throw InvalidInput("walsh_re2_class: weight class outside 0..m");
  BigInt sum = 0;
  for (int j = 0; j <= m; ++j) {
    const BigInt kj = krawtchouk(j, i, m);
    if (fn.at_weight(j).is_zero()) {
      sum += 2 * kj;
    } else {
      sum -= kj;
    }
  }
  return sum;
}

bool mesnager_check(const std::vector<std::uint64_t>& members, int m) {
  const std::uint64_t n = space_size(m);
  FunctionTable in_d{m, std::vector<F3>(n)};
  for (std::uint64_t x : members) {
    if (x == 0 || x >= n) throw InvalidInput("mesnager_check: D must lie in F_3^m minus 0");
    in_d.values[x] = F3(1);
  }
  FunctionTable in_complement{m, std::vector<F3>(n)};
  for (std::uint64_t x = 1; x < n; ++x) in_complement.values[x] = F3(in_d.values[x].is_zero() ? 1 : 0);

  const BigInt q = pow3(static_cast<unsigned>(m));
  const EisensteinInt at_zero(q + 1, q - 1);
  const EisensteinInt elsewhere(1, -1);
  for (std::uint64_t w = 0; w < n; ++w) {
    const F3Vector wv = vector_at(m, w);
    const EisensteinInt sum = walsh_brute(in_d, wv) + walsh_brute(in_complement, wv);
    if (sum != (w == 0 ? at_zero : elsewhere)) return false;
  }
  return true;
}

std::optional<F3Vector> linear_coincidence(const FunctionTable& f) {
  if (!f.values.at(0).is_zero()) throw InvalidInput("linear_coincidence: requires f(0) = 0");
  // a linear f is determined by its values on the unit vectors
  F3Vector w = F3Vector::zero(f.m);
  for (int j = 0; j < f.m; ++j) {
    F3Vector e = F3Vector::zero(f.m);
    e[j] = F3(1);
    w[j] = f(e);
  }
  const EisensteinInt value = walsh_brute(f, w);
  if (value.re2() == 2 * pow3(static_cast<unsigned>(f.m))) return w;
  return std::nullopt;
}

}  // namespace ternmin
