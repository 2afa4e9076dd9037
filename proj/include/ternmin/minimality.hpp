#pragma once

#include "ternmin/bigint.hpp"
#include "ternmin/code.hpp"
#include "ternmin/walsh.hpp"
#include "ternmin/kernels.hpp"
#include "ternmin/weight_class.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>

namespace ternmin {

enum class Method { brute, spectral };

struct CodewordIndex {
  int u = 0;
  std::uint64_t v = 0;

  friend bool operator==(const CodewordIndex&, const CodewordIndex&) = default;
};

struct MinimalityVerdict {
  bool minimal = true;
  Method method = Method::brute;
  // brute: a covers b with b not in {0, a, 2a}
  std::optional<std::pair<CodewordIndex, CodewordIndex>> witness;
  // spectral: (w1, w2, w3) canonical indices violating one of the spectral inequalities
  std::optional<std::array<std::uint64_t, 3>> spectral_witness;
  bool vacuous = false;

  friend bool operator==(const MinimalityVerdict&, const MinimalityVerdict&) = default;
};

struct AbReport {
  BigInt w_min;
  BigInt w_max;
  bool violates_ab = false;  // 3 w_min <= 2 w_max

  friend bool operator==(const AbReport&, const AbReport&) = default;
};

/// Supp(b) is a subset of Supp(a).
bool covers(std::span<const F3> a, std::span<const F3> b);

inline constexpr int kDefaultMinimalBruteMaxM = 6;

/// Scans all ordered pairs of codewords of C_f.
MinimalityVerdict is_minimal_brute(const FunctionTable& f, int max_m = kDefaultMinimalBruteMaxM,
                                   Backend backend = Backend::openmp);

/// Same scan over an explicit list of codewords.
MinimalityVerdict is_minimal_brute(const kernels::PackedCodewords& words,
                                   Backend backend = Backend::openmp);

/// Spectral criterion over all pairwise-distinct w1 + w2 + w3 = 0 using
/// the brute-force spectrum. Requires no linear coincidence.
MinimalityVerdict is_minimal_spectral(const FunctionTable& f, int max_m = kDefaultSpectrumMaxM,
                                      Backend backend = Backend::openmp);

/// Spectral criterion for weight-class functions: m+1 closed-form Walsh
/// values, checked on every realizable ordered weight triple.
MinimalityVerdict is_minimal_spectral(const WeightClassFunction& fn);

/// Throws InvalidInput if the distribution has no nonzero weight.
AbReport ab_report(const WeightDistribution& wd);

/// Theorem-range closed-form test for w_min / w_max <= 2/3:
///   g, f: 3 |S(m,k)| <= 2(3^m - 3^{m-1}) + 2^{k+1} C(m-1,k) - 2
///   gbar: 2 |S(m,k)| <= 3 * 2^k C(m-1,k)
bool ab_condition_closed(Family family, int m, int k);

}  // namespace ternmin
