#include "ternmin/kernels.hpp"

#include "ternmin/errors.hpp"

#include <omp.h>

#include <algorithm>
#include <bit>
#include <limits>

namespace ternmin {

void set_worker_count(int n) {
  if (n > 0) omp_set_num_threads(n);
}

int worker_count() { return omp_get_max_threads(); }

namespace kernels {
namespace {

std::vector<F3Vector> all_vectors(int m) {
  const std::uint64_t n = space_size(m);
  std::vector<F3Vector> out;
  out.reserve(n);
  for (std::uint64_t x = 0; x < n; ++x) out.push_back(vector_at(m, x));
  return out;
}

void check_table(std::span<const std::uint8_t> table, int m) {
  if (m < 1 || table.size() != space_size(m)) throw InvalidInput("function table size must be 3^m");
}

std::vector<std::uint8_t> digits_of(std::uint64_t index, int m) {
  std::vector<std::uint8_t> d(static_cast<std::size_t>(m));
  for (int j = m - 1; j >= 0; --j) {
    d[static_cast<std::size_t>(j)] = static_cast<std::uint8_t>(index % 3);
    index /= 3;
  }
  return d;
}

// out[x] = w.x mod 3 for every canonical index x, built digit by digit
// from the least significant coordinate.
void fill_dot_table(std::span<const std::uint8_t> w_digits, std::span<std::uint8_t> out) {
  const int m = static_cast<int>(w_digits.size());
  out[0] = 0;
  std::size_t block = 1;
  for (int p = 0; p < m; ++p) {
    const std::uint8_t coef = w_digits[static_cast<std::size_t>(m - 1 - p)];
    for (std::uint8_t d = 1; d <= 2; ++d) {
      const std::uint8_t add = static_cast<std::uint8_t>((coef * d) % 3);
      std::uint8_t* dst = out.data() + d * block;
      for (std::size_t r = 0; r < block; ++r) {
        const std::uint8_t s = static_cast<std::uint8_t>(out[r] + add);
        dst[r] = s >= 3 ? static_cast<std::uint8_t>(s - 3) : s;
      }
    }
    block *= 3;
  }
}

std::vector<Counts3> exponent_histograms_serial(std::span<const std::uint8_t> table, int m) {
  const auto vecs = all_vectors(m);
  std::vector<Counts3> out(vecs.size(), Counts3{0, 0, 0});
  for (std::size_t w = 0; w < vecs.size(); ++w) {
    for (std::size_t x = 0; x < vecs.size(); ++x) {
      const F3 e = F3(table[x]) - inner_product(vecs[w], vecs[x]);
      ++out[w][e.value()];
    }
  }
  return out;
}

std::vector<Counts3> exponent_histograms_omp(std::span<const std::uint8_t> table, int m) {
  const std::uint64_t n = space_size(m);
  std::vector<Counts3> out(n);
#pragma omp parallel
  {
    std::vector<std::uint8_t> dot(n);
#pragma omp for schedule(static)
    for (std::int64_t w = 0; w < static_cast<std::int64_t>(n); ++w) {
      const auto wd = digits_of(static_cast<std::uint64_t>(w), m);
      fill_dot_table(wd, dot);
      Counts3 c{0, 0, 0};
      for (std::uint64_t x = 0; x < n; ++x) {
        // f(x) - w.x  in {0,1,2}
        ++c[(table[x] + 3 - dot[x]) % 3];
      }
      out[static_cast<std::size_t>(w)] = c;
    }
  }
  return out;
}

std::vector<Counts3> symbol_counts_serial(std::span<const std::uint8_t> table, int m) {
  const auto vecs = all_vectors(m);
  const std::size_t n = vecs.size();
  std::vector<Counts3> out(3 * n, Counts3{0, 0, 0});
  for (int u = 0; u < 3; ++u) {
    for (std::size_t v = 0; v < n; ++v) {
      Counts3& c = out[static_cast<std::size_t>(u) * n + v];
      for (std::size_t x = 1; x < n; ++x) {
        const F3 sym = F3(u) * F3(table[x]) + inner_product(vecs[v], vecs[x]);
        ++c[sym.value()];
      }
    }
  }
  return out;
}

std::vector<Counts3> symbol_counts_omp(std::span<const std::uint8_t> table, int m) {
  const std::uint64_t n = space_size(m);
  std::vector<Counts3> out(3 * n);
  // table2[x] = 2 f(x) mod 3
  std::vector<std::uint8_t> twice(n);
  for (std::uint64_t x = 0; x < n; ++x) twice[x] = static_cast<std::uint8_t>((2 * table[x]) % 3);
#pragma omp parallel
  {
    std::vector<std::uint8_t> dot(n);
#pragma omp for schedule(static)
    for (std::int64_t v = 0; v < static_cast<std::int64_t>(n); ++v) {
      const auto vd = digits_of(static_cast<std::uint64_t>(v), m);
      fill_dot_table(vd, dot);
      Counts3 c0{0, 0, 0};
      Counts3 c1{0, 0, 0};
      Counts3 c2{0, 0, 0};
      for (std::uint64_t x = 1; x < n; ++x) {
        const std::uint8_t d = dot[x];
        ++c0[d];
        ++c1[(d + table[x]) % 3];
        ++c2[(d + twice[x]) % 3];
      }
      const auto vi = static_cast<std::size_t>(v);
      out[vi] = c0;
      out[n + vi] = c1;
      out[2 * n + vi] = c2;
    }
  }
  return out;
}

bool same_or_double(const PackedCodewords& w, std::size_t a, std::size_t b) {
  bool same = true;
  bool twice = true;
  for (std::size_t p = 0; p < w.length(); ++p) {
    const F3 x = w.get(a, p);
    const F3 y = w.get(b, p);
    same = same && x == y;
    twice = twice && y == F3(2) * x;
  }
  return same || twice;
}

bool is_zero_word(const PackedCodewords& w, std::size_t a) {
  for (std::size_t p = 0; p < w.length(); ++p) {
    if (!w.get(a, p).is_zero()) return false;
  }
  return true;
}

std::optional<std::pair<std::size_t, std::size_t>> first_cover_violation_serial(
    const PackedCodewords& w) {
  for (std::size_t a = 0; a < w.count(); ++a) {
    if (is_zero_word(w, a)) continue;
    for (std::size_t b = 0; b < w.count(); ++b) {
      if (is_zero_word(w, b) || same_or_double(w, a, b)) continue;
      bool covered = true;
      for (std::size_t p = 0; p < w.length() && covered; ++p) {
        if (!w.get(b, p).is_zero() && w.get(a, p).is_zero()) covered = false;
      }
      if (covered) return std::make_pair(a, b);
    }
  }
  return std::nullopt;
}

std::optional<std::pair<std::size_t, std::size_t>> first_cover_violation_omp(
    const PackedCodewords& w) {
  const std::size_t count = w.count();
  const std::size_t words = w.words_per_plane();
  std::vector<std::uint64_t> supp(count * words);
  std::vector<std::uint32_t> weight(count, 0);
  for (std::size_t a = 0; a < count; ++a) {
    const auto ones = w.ones(a);
    const auto twos = w.twos(a);
    std::uint32_t wt = 0;
    for (std::size_t q = 0; q < words; ++q) {
      supp[a * words + q] = ones[q] | twos[q];
      wt += static_cast<std::uint32_t>(std::popcount(supp[a * words + q]));
    }
    weight[a] = wt;
  }

  std::size_t best_a = count;
  std::size_t best_b = count;
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t ai = 0; ai < static_cast<std::int64_t>(count); ++ai) {
    const auto a = static_cast<std::size_t>(ai);
    std::size_t current;
#pragma omp atomic read
    current = best_a;
    if (a > current || weight[a] == 0) continue;
    const std::uint64_t* sa = &supp[a * words];
    for (std::size_t b = 0; b < count; ++b) {
      if (weight[b] == 0 || weight[b] > weight[a]) continue;
      const std::uint64_t* sb = &supp[b * words];
      bool covered = true;
      for (std::size_t q = 0; q < words; ++q) {
        if (sb[q] & ~sa[q]) {
          covered = false;
          break;
        }
      }
      if (!covered) continue;
      if (weight[b] == weight[a]) {
        // equal supports: skip b = a and b = 2a
        const auto oa = w.ones(a), ta = w.twos(a), ob = w.ones(b), tb = w.twos(b);
        if (std::equal(oa.begin(), oa.end(), ob.begin()) && std::equal(ta.begin(), ta.end(), tb.begin())) continue;
        if (std::equal(oa.begin(), oa.end(), tb.begin()) && std::equal(ta.begin(), ta.end(), ob.begin())) continue;
      }
#pragma omp critical(ternmin_cover_best)
      {
        if (a < best_a) {
          best_a = a;
          best_b = b;
        }
      }
      break;
    }
  }
  if (best_a == count) return std::nullopt;
  return std::make_pair(best_a, best_b);
}

bool violates(std::int64_t r1, std::int64_t r2, std::int64_t r3, std::int64_t target) {
  return r1 + r2 - 2 * r3 == target || r1 + r2 + r3 == target;
}

std::optional<std::array<std::uint64_t, 3>> first_spectral_violation_serial(
    std::span<const std::int64_t> re2, int m, std::int64_t target) {
  const auto vecs = all_vectors(m);
  for (std::size_t w1 = 0; w1 < vecs.size(); ++w1) {
    for (std::size_t w2 = 0; w2 < vecs.size(); ++w2) {
      const std::uint64_t w3 = index_of(-(vecs[w1] + vecs[w2]));
      if (w1 == w2 || w1 == w3 || w2 == w3) continue;
      if (violates(re2[w1], re2[w2], re2[w3], target)) return std::array<std::uint64_t, 3>{w1, w2, w3};
    }
  }
  return std::nullopt;
}

std::optional<std::array<std::uint64_t, 3>> first_spectral_violation_omp(
    std::span<const std::int64_t> re2, int m, std::int64_t target) {
  // Index of -(w1 + w2) from split tables over the low and high digit halves.
  const int low_digits = m / 2;
  const std::uint64_t lo_size = space_size(low_digits);
  const std::uint64_t hi_size = space_size(m - low_digits);
  auto negsum_table = [](int digits, std::uint64_t size) {
    std::vector<std::uint32_t> t(size * size);
    for (std::uint64_t a = 0; a < size; ++a) {
      const auto da = digits_of(a, digits);
      for (std::uint64_t b = 0; b < size; ++b) {
        const auto db = digits_of(b, digits);
        std::uint64_t r = 0;
        for (int j = 0; j < digits; ++j) {
          r = r * 3 + (6 - da[static_cast<std::size_t>(j)] - db[static_cast<std::size_t>(j)]) % 3;
        }
        t[a * size + b] = static_cast<std::uint32_t>(r);
      }
    }
    return t;
  };
  const auto lo_table = negsum_table(low_digits, lo_size);
  const auto hi_table = negsum_table(m - low_digits, hi_size);
  const std::uint64_t n = space_size(m);

  std::uint64_t best_w1 = n;
  std::array<std::uint64_t, 3> best{};
#pragma omp parallel for schedule(dynamic, 8)
  for (std::int64_t i1 = 0; i1 < static_cast<std::int64_t>(n); ++i1) {
    const auto w1 = static_cast<std::uint64_t>(i1);
    std::uint64_t current;
#pragma omp atomic read
    current = best_w1;
    if (w1 > current) continue;
    const std::uint64_t h1 = w1 / lo_size;
    const std::uint64_t l1 = w1 % lo_size;
    const std::int64_t r1 = re2[w1];
    for (std::uint64_t w2 = 0; w2 < n; ++w2) {
      // w1 == w2 forces w1 == w2 == w3; otherwise all three differ
      if (w2 == w1) continue;
      const std::uint64_t w3 = hi_table[h1 * hi_size + w2 / lo_size] * lo_size +
                               lo_table[l1 * lo_size + w2 % lo_size];
      if (violates(r1, re2[w2], re2[w3], target)) {
#pragma omp critical(ternmin_spectral_best)
        {
          if (w1 < best_w1) {
            best_w1 = w1;
            best = {w1, w2, w3};
          }
        }
        break;
      }
    }
  }
  if (best_w1 == n) return std::nullopt;
  return best;
}

}  // namespace

std::vector<Counts3> exponent_histograms(std::span<const std::uint8_t> table, int m, Backend backend) {
  check_table(table, m);
  return backend == Backend::serial ? exponent_histograms_serial(table, m)
                                    : exponent_histograms_omp(table, m);
}

std::vector<Counts3> symbol_counts(std::span<const std::uint8_t> table, int m, Backend backend) {
  check_table(table, m);
  return backend == Backend::serial ? symbol_counts_serial(table, m) : symbol_counts_omp(table, m);
}

PackedCodewords::PackedCodewords(std::size_t count, std::size_t length)
    : count_(count),
      length_(length),
      words_((length + 63) / 64),
      ones_(count * words_, 0),
      twos_(count * words_, 0) {}

void PackedCodewords::set(std::size_t word, std::size_t pos, F3 value) {
  const std::size_t q = word * words_ + pos / 64;
  const std::uint64_t bit = std::uint64_t{1} << (pos % 64);
  ones_[q] &= ~bit;
  twos_[q] &= ~bit;
  if (value == F3(1)) ones_[q] |= bit;
  if (value == F3(2)) twos_[q] |= bit;
}

F3 PackedCodewords::get(std::size_t word, std::size_t pos) const {
  const std::size_t q = word * words_ + pos / 64;
  const std::uint64_t bit = std::uint64_t{1} << (pos % 64);
  if (ones_[q] & bit) return F3(1);
  if (twos_[q] & bit) return F3(2);
  return F3(0);
}

std::span<const std::uint64_t> PackedCodewords::ones(std::size_t word) const {
  return {ones_.data() + word * words_, words_};
}

std::span<const std::uint64_t> PackedCodewords::twos(std::size_t word) const {
  return {twos_.data() + word * words_, words_};
}

std::optional<std::pair<std::size_t, std::size_t>> first_cover_violation(const PackedCodewords& words,
                                                                         Backend backend) {
  return backend == Backend::serial ? first_cover_violation_serial(words)
                                    : first_cover_violation_omp(words);
}

std::optional<std::array<std::uint64_t, 3>> first_spectral_violation(std::span<const std::int64_t> re2,
                                                                     int m, std::int64_t target,
                                                                     Backend backend) {
  if (m < 1 || re2.size() != space_size(m)) throw InvalidInput("spectrum size must be 3^m");
  return backend == Backend::serial ? first_spectral_violation_serial(re2, m, target)
                                    : first_spectral_violation_omp(re2, m, target);
}

}  // namespace kernels
}  // namespace ternmin
