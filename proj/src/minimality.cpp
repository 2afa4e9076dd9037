#include "ternmin/minimality.hpp"

#include "ternmin/combinatorics.hpp"
#include "ternmin/errors.hpp"

#include <set>
#include <tuple>

namespace ternmin {

bool covers(std::span<const F3> a, std::span<const F3> b) {
  if (a.size() != b.size()) throw InvalidInput("covers: length mismatch");
  for (std::size_t p = 0; p < a.size(); ++p) {
    if (!b[p].is_zero() && a[p].is_zero()) return false;
  }
  return true;
}

MinimalityVerdict is_minimal_brute(const kernels::PackedCodewords& words, Backend backend) {
  MinimalityVerdict verdict;
  verdict.method = Method::brute;
  if (const auto hit = kernels::first_cover_violation(words, backend)) {
    verdict.minimal = false;
    verdict.witness = std::make_pair(CodewordIndex{0, hit->first}, CodewordIndex{0, hit->second});
  }
  return verdict;
}

MinimalityVerdict is_minimal_brute(const FunctionTable& f, int max_m, Backend backend) {
  require_budget(f.m, max_m, "brute-force minimality scan");
  const std::uint64_t n = space_size(f.m);
  std::vector<F3Vector> xs;
  xs.reserve(n);
  for (std::uint64_t x = 0; x < n; ++x) xs.push_back(vector_at(f.m, x));

  kernels::PackedCodewords words(3 * n, n - 1);
  for (std::uint64_t v = 0; v < n; ++v) {
    for (std::uint64_t x = 1; x < n; ++x) {
      const F3 dot = inner_product(xs[v], xs[x]);
      for (int u = 0; u < 3; ++u) words.set(u * n + v, x - 1, F3(u) * f.values[x] + dot);
    }
  }
  MinimalityVerdict verdict = is_minimal_brute(words, backend);
  if (verdict.witness) {
    auto split = [n](CodewordIndex c) {
      return CodewordIndex{static_cast<int>(c.v / n), c.v % n};
    };
    verdict.witness = std::make_pair(split(verdict.witness->first), split(verdict.witness->second));
  }
  return verdict;
}

MinimalityVerdict is_minimal_spectral(const FunctionTable& f, int max_m, Backend backend) {
  if (const auto w = linear_coincidence(f)) {
    throw InvalidInput("is_minimal_spectral: f coincides with a linear function");
  }
  const auto re2 = walsh_re2_spectrum(f, backend, max_m);
  const auto target = static_cast<std::int64_t>(2 * space_size(f.m));
  MinimalityVerdict verdict;
  verdict.method = Method::spectral;
  // w1 = e_1, w2 = 0, w3 = -e_1 is always a pairwise-distinct triple for m >= 1
  verdict.vacuous = f.m < 1;
  if (const auto hit = kernels::first_spectral_violation(re2, f.m, target, backend)) {
    verdict.minimal = false;
    verdict.spectral_witness = *hit;
  }
  return verdict;
}

MinimalityVerdict is_minimal_spectral(const WeightClassFunction& fn) {
  const int m = fn.m();
  bool all_zero = true;
  for (F3 c : fn.class_values()) all_zero = all_zero && c.is_zero();
  if (all_zero) throw InvalidInput("is_minimal_spectral: f coincides with a linear function");

  std::vector<BigInt> re2;
  for (int i = 0; i <= m; ++i) re2.push_back(walsh_re2_class(fn, i));
  const BigInt target = 2 * pow3(static_cast<unsigned>(m));

  MinimalityVerdict verdict;
  verdict.method = Method::spectral;
  verdict.vacuous = true;

  // Per coordinate the digits (w1_j, w2_j, w3_j) of a zero-sum triple fall in
  // one of five weight patterns: (0,0,0), (1,0,1), (0,1,1), (1,1,0), (1,1,1).
  // With n1..n4 coordinates of the last four kinds the weights are
  //   i1 = n1+n3+n4, i2 = n2+n3+n4, i3 = n1+n2+n4,
  // and the triple is pairwise distinct iff n1+n2+n3 >= 1.
  std::set<std::tuple<int, int, int>> seen;
  for (int n1 = 0; n1 <= m; ++n1) {
    for (int n2 = 0; n1 + n2 <= m; ++n2) {
      for (int n3 = 0; n1 + n2 + n3 <= m; ++n3) {
        if (n1 + n2 + n3 == 0) continue;
        for (int n4 = 0; n1 + n2 + n3 + n4 <= m; ++n4) {
          const int i1 = n1 + n3 + n4;
          const int i2 = n2 + n3 + n4;
          const int i3 = n1 + n2 + n4;
          if (!seen.emplace(i1, i2, i3).second) continue;
          verdict.vacuous = false;
          const BigInt& r1 = re2[static_cast<std::size_t>(i1)];
          const BigInt& r2 = re2[static_cast<std::size_t>(i2)];
          const BigInt& r3 = re2[static_cast<std::size_t>(i3)];
          if (r1 + r2 - 2 * r3 != target && r1 + r2 + r3 != target) continue;

          F3Vector w1 = F3Vector::zero(m), w2 = F3Vector::zero(m), w3 = F3Vector::zero(m);
          int pos = 0;
          auto place = [&](int count, int a, int b, int c) {
            for (int r = 0; r < count; ++r, ++pos) {
              w1[pos] = F3(a);
              w2[pos] = F3(b);
              w3[pos] = F3(c);
            }
          };
          place(n1, 1, 0, 2);
          place(n2, 0, 1, 2);
          place(n3, 1, 2, 0);
          place(n4, 1, 1, 1);
          verdict.minimal = false;
          verdict.spectral_witness = std::array<std::uint64_t, 3>{index_of(w1), index_of(w2), index_of(w3)};
          return verdict;
        }
      }
    }
  }
  return verdict;
}

AbReport ab_report(const WeightDistribution& wd) {
  AbReport report;
  report.w_min = wd.min_nonzero_weight();
  report.w_max = wd.max_weight();
  report.violates_ab = 3 * report.w_min <= 2 * report.w_max;
  return report;
}

bool ab_condition_closed(Family family, int m, int k) {
  check_theorem_range(m, k);
  const BigInt ball = ball_size(m, k);
  const BigInt q = pow3(static_cast<unsigned>(m));
  const BigInt lloyd_max = pow_int(2, static_cast<unsigned>(k)) * binomial(m - 1, k);
  switch (family) {
    case Family::g:
    case Family::f:
      return 3 * ball <= 2 * (q - q / 3) + 2 * lloyd_max - 2;
    case Family::gbar:
      return 2 * ball <= 3 * lloyd_max;
    case Family::custom:
      break;
  }
  throw InvalidInput("ab_condition_closed: no closed form for custom functions");
}

}  // namespace ternmin
