#pragma once

#include "ternmin/bigint.hpp"
#include "ternmin/eisenstein.hpp"
#include "ternmin/kernels.hpp"
#include "ternmin/weight_class.hpp"

#include <optional>
#include <vector>

namespace ternmin {

/// Default cap on m for the Theta(9^m) full-spectrum brute force.
inline constexpr int kDefaultSpectrumMaxM = 8;

/// f^(w) = sum over all x in F_3^m of zeta^{f(x) - w.x}.
EisensteinInt walsh_brute(const FunctionTable& f, const F3Vector& w);

/// Walsh values for every w, indexed canonically.
std::vector<EisensteinInt> walsh_spectrum(const FunctionTable& f, Backend backend = Backend::openmp,
                                          int max_m = kDefaultSpectrumMaxM);

/// Doubled real parts of walsh_spectrum, as machine integers (|re2| <= 2*3^m).
std::vector<std::int64_t> walsh_re2_spectrum(const FunctionTable& f,
                                             Backend backend = Backend::openmp,
                                             int max_m = kDefaultSpectrumMaxM);

/// 2 Re(f^(w)) for wt(w) = i from the families' closed forms:
///   g, f:  i = 0: 2*3^m - 3 |S(m,k)|       i >= 1: -3 (Psi_k(i,m) - 1)
///   gbar:  i = 0: -3^m + 3 (|S(m,k)| + 1)   i >= 1:  3 Psi_k(i,m)
/// Requires 2 <= k <= floor((m-1)/2) and nonempty S for family f.
BigInt walsh_re2_closed(Family family, int m, int k, const WeightSet& subset, int i);

/// 2 Re(f^(w)) for any weight-class function and wt(w) = i, via
/// sum_j K_j(i, m) * (2 if c_j == 0 else -1).
BigInt walsh_re2_class(const WeightClassFunction& fn, int i);

/// Checks f^_D(w) + f^_{Dbar}(w) against (q-1)zeta + q + 1 at w = 0 and
/// 1 - zeta elsewhere (q = 3^m), both transforms by brute force.
/// `members` lists canonical indices of D (nonzero, any order).
bool mesnager_check(const std::vector<std::uint64_t>& members, int m);

/// The w with f(x) = w.x for all x, if any. Requires f(0) = 0.
std::optional<F3Vector> linear_coincidence(const FunctionTable& f);

}  // namespace ternmin
