#pragma once

// Exhaustive enumeration kernels. Each has a plain serial reference built
// on the gf3 primitives and an OpenMP implementation using precomputed
// inner-product tables and bit-plane codewords. Both must return identical
// results; the parallel ones are the default everywhere else.

#include "ternmin/gf3.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace ternmin {

enum class Backend { serial, openmp };

/// Sets the OpenMP worker count (no-op for n <= 0).
void set_worker_count(int n);
int worker_count();

using Counts3 = std::array<std::int64_t, 3>;

namespace kernels {

/// For every w in F_3^m (canonical index), the histogram of the exponent
/// f(x) - w.x over all x in F_3^m.
std::vector<Counts3> exponent_histograms(std::span<const std::uint8_t> table, int m,
                                         Backend backend);

/// For every codeword index u*3^m + v, the symbol counts (t0, t1, t2) of
/// (u f(x) + v.x) over x in F_3^m \ {0}.
std::vector<Counts3> symbol_counts(std::span<const std::uint8_t> table, int m,
                                   Backend backend);

/// Codewords stored as two bit planes (positions equal to 1, positions equal to 2).
class PackedCodewords {
 public:
  PackedCodewords(std::size_t count, std::size_t length);

  void set(std::size_t word, std::size_t pos, F3 value);
  F3 get(std::size_t word, std::size_t pos) const;

  std::size_t count() const { return count_; }
  std::size_t length() const { return length_; }
  std::size_t words_per_plane() const { return words_; }

  std::span<const std::uint64_t> ones(std::size_t word) const;
  std::span<const std::uint64_t> twos(std::size_t word) const;

 private:
  std::size_t count_;
  std::size_t length_;
  std::size_t words_;
  std::vector<std::uint64_t> ones_;
  std::vector<std::uint64_t> twos_;
};

/// First (a, b) in scan order (a ascending, then b ascending) such that a
/// and b are nonzero, b is not in {a, 2a}, and Supp(b) is contained in Supp(a).
std::optional<std::pair<std::size_t, std::size_t>> first_cover_violation(
    const PackedCodewords& words, Backend backend);

/// First ordered pair (w1, w2) in scan order whose triple
/// (w1, w2, w3 = -w1 - w2) is pairwise distinct and has
///   r1 + r2 - 2 r3 == target  or  r1 + r2 + r3 == target
/// where r = re2[index]. Returns (w1, w2, w3) indices.
std::optional<std::array<std::uint64_t, 3>> first_spectral_violation(
    std::span<const std::int64_t> re2, int m, std::int64_t target, Backend backend);

}  // namespace kernels
}  // namespace ternmin
