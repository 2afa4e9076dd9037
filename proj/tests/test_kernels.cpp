// Serial reference and OpenMP kernels must agree exactly.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ternmin/code.hpp"
#include "ternmin/kernels.hpp"
#include "ternmin/minimality.hpp"
#include "ternmin/walsh.hpp"

#include <random>

using namespace ternmin;

namespace {

std::vector<std::uint8_t> raw(const FunctionTable& t) {
  std::vector<std::uint8_t> out;
  for (F3 v : t.values) out.push_back(v.value());
  return out;
}

std::vector<std::uint8_t> random_table(std::mt19937& rng, int m) {
  std::uniform_int_distribution<int> digit(0, 2);
  std::vector<std::uint8_t> out(space_size(m));
  for (auto& v : out) v = static_cast<std::uint8_t>(digit(rng));
  out[0] = 0;
  return out;
}

}  // namespace

TEST_CASE("exponent histograms") {
  std::mt19937 rng(5);
  for (int m = 1; m <= 6; ++m) {
    const auto t = random_table(rng, m);
    CHECK(kernels::exponent_histograms(t, m, Backend::serial) == kernels::exponent_histograms(t, m, Backend::openmp));
  }
}

TEST_CASE("symbol counts") {
  std::mt19937 rng(6);
  for (int m = 1; m <= 6; ++m) {
    const auto t = random_table(rng, m);
    const auto serial = kernels::symbol_counts(t, m, Backend::serial);
    CHECK(serial == kernels::symbol_counts(t, m, Backend::openmp));
    CHECK(serial.size() == 3 * space_size(m));
  }
}

TEST_CASE("cover scan") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> digit(0, 2);
  for (int trial = 0; trial < 20; ++trial) {
    // sparse random words so that covers actually occur
    kernels::PackedCodewords words(40, 70);
    for (std::size_t w = 1; w < 40; ++w) {
      for (std::size_t p = 0; p < 70; ++p) {
        if (digit(rng) == 0 && digit(rng) == 0) words.set(w, p, F3(1 + digit(rng) % 2));
      }
    }
    CHECK(kernels::first_cover_violation(words, Backend::serial) ==
          kernels::first_cover_violation(words, Backend::openmp));
  }
}

TEST_CASE("spectral pair scan") {
  std::mt19937 rng(8);
  for (int m = 2; m <= 5; ++m) {
    for (int trial = 0; trial < 5; ++trial) {
      FunctionTable t{m, {}};
      for (auto v : random_table(rng, m)) t.values.emplace_back(v);
      const auto re2 = walsh_re2_spectrum(t, Backend::serial);
      const std::int64_t target = 2 * static_cast<std::int64_t>(space_size(m));
      CHECK(kernels::first_spectral_violation(re2, m, target, Backend::serial) ==
            kernels::first_spectral_violation(re2, m, target, Backend::openmp));
    }
  }
}

TEST_CASE("public entry points agree across backends") {
  for (const auto& fn : {WeightClassFunction::make(Family::gbar, 5, 2),
                         WeightClassFunction::make(Family::f, 5, 2, {1}),
                         WeightClassFunction::custom({F3(0), F3(0), F3(0), F3(1)})}) {
    const auto t = fn.table();
    CHECK(walsh_spectrum(t, Backend::serial) == walsh_spectrum(t, Backend::openmp));
    CHECK(cwe_brute(t, {}, Backend::serial) == cwe_brute(t, {}, Backend::openmp));
    CHECK(is_minimal_brute(t, 6, Backend::serial) == is_minimal_brute(t, 6, Backend::openmp));
    CHECK(is_minimal_spectral(t, 8, Backend::serial) == is_minimal_spectral(t, 8, Backend::openmp));
    CHECK(raw(t).size() == space_size(fn.m()));
  }
}

TEST_CASE("results do not depend on the worker count") {
  const auto t = WeightClassFunction::custom({F3(0), F3(1), F3(0), F3(2), F3(1)}).table();
  const int before = worker_count();
  set_worker_count(1);
  const auto one = is_minimal_brute(t);
  const auto cwe_one = cwe_brute(t);
  set_worker_count(4);
  CHECK(is_minimal_brute(t) == one);
  CHECK(cwe_brute(t) == cwe_one);
  set_worker_count(before);
}
