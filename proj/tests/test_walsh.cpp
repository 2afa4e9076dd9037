#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ternmin/eisenstein.hpp"
#include "ternmin/errors.hpp"
#include "ternmin/walsh.hpp"
#include "ternmin/weight_class.hpp"

#include <random>

using namespace ternmin;

namespace {

FunctionTable zero_table(int m) { return FunctionTable{m, std::vector<F3>(space_size(m))}; }

std::vector<std::uint64_t> ball_members(int m, int k) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t x = 1; x < space_size(m); ++x) {
    if (vector_at(m, x).weight() <= k) out.push_back(x);
  }
  return out;
}

}  // namespace

TEST_CASE("eisenstein arithmetic") {
  CHECK(zeta_pow(F3(0)) == EisensteinInt(1, 0));
  CHECK(zeta_pow(F3(1)) == EisensteinInt(0, 1));
  CHECK(zeta_pow(F3(2)) == EisensteinInt(-1, -1));
  CHECK(zeta_pow(F3(0)) + zeta_pow(F3(1)) + zeta_pow(F3(2)) == EisensteinInt(0, 0));
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) CHECK(zeta_pow(F3(a)) * zeta_pow(F3(b)) == zeta_pow(F3(a + b)));
  }
  CHECK(EisensteinInt(3, 5).re2() == 1);
  CHECK(from_exponent_counts(4, 1, 1) == EisensteinInt(3, 0));
  CHECK(from_exponent_counts(4, 1, 1).re2() == 2 * 4 - 1 - 1);
}

TEST_CASE("walsh_brute trivial cases") {
  const auto zero = zero_table(4);
  CHECK(walsh_brute(zero, F3Vector::zero(4)) == EisensteinInt(81, 0));
  CHECK(walsh_brute(zero, F3Vector{0, 1, 0, 2}) == EisensteinInt(0, 0));
}

TEST_CASE("walsh values for the families") {
  const auto g = WeightClassFunction::make(Family::g, 5, 2);
  CHECK(walsh_brute(g.table(), F3Vector::zero(5)).re2() == 336);
  CHECK(walsh_re2_closed(Family::g, 5, 2, {}, 0) == 336);
  CHECK(walsh_re2_closed(Family::f, 5, 2, {1}, 1) == -69);
  CHECK(walsh_re2_closed(Family::gbar, 9, 2, {}, 1) == 336);
  CHECK_THROWS_AS(walsh_re2_closed(Family::f, 5, 2, {}, 1), InvalidInput);
  CHECK_THROWS_AS(walsh_re2_closed(Family::g, 5, 3, {}, 1), InvalidInput);

  const auto f = WeightClassFunction::make(Family::f, 5, 2, {1});
  const auto spectrum = walsh_spectrum(f.table());
  CHECK(spectrum[index_of({1, 0, 0, 0, 0})].re2() == -69);
}

TEST_CASE("closed forms agree with the spectrum") {
  for (int m = 5; m <= 6; ++m) {
    for (auto family : {Family::g, Family::gbar, Family::f}) {
      const auto fn = WeightClassFunction::make(family, m, 2, family == Family::f ? WeightSet{2} : WeightSet{});
      const auto spectrum = walsh_spectrum(fn.table(), Backend::serial);
      for (std::uint64_t w = 0; w < spectrum.size(); ++w) {
        const int i = vector_at(m, w).weight();
        CHECK(spectrum[w].re2() == walsh_re2_closed(family, m, 2, fn.subset(), i));
        CHECK(spectrum[w].re2() == walsh_re2_class(fn, i));
      }
    }
  }
}

TEST_CASE("spectrum respects the size cap") {
  const auto fn = WeightClassFunction::make(Family::g, 9, 2);
  CHECK_THROWS_AS(walsh_spectrum(fn.table()), BudgetExceeded);
}

TEST_CASE("parseval") {
  // sum_w |f^(w)|^2 = 9^m, with |a + b zeta|^2 = a^2 - ab + b^2
  const auto fn = WeightClassFunction::make(Family::gbar, 5, 2);
  BigInt total = 0;
  for (const auto& z : walsh_spectrum(fn.table())) total += z.a() * z.a() - z.a() * z.b() + z.b() * z.b();
  CHECK(total == pow3(10));
}

TEST_CASE("complement identity") {
  CHECK(mesnager_check({}, 2));
  CHECK(mesnager_check(ball_members(5, 2), 5));
  std::mt19937_64 rng(4);
  std::bernoulli_distribution coin(0.3);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<std::uint64_t> members;
    for (std::uint64_t x = 1; x < space_size(4); ++x) {
      if (coin(rng)) members.push_back(x);
    }
    CHECK(mesnager_check(members, 4));
  }
}

TEST_CASE("linear coincidence") {
  FunctionTable first{4, {}};
  for (std::uint64_t x = 0; x < space_size(4); ++x) first.values.push_back(vector_at(4, x)[0]);
  const auto w = linear_coincidence(first);
  REQUIRE(w.has_value());
  CHECK(*w == F3Vector{1, 0, 0, 0});

  CHECK_FALSE(linear_coincidence(WeightClassFunction::make(Family::g, 5, 2).table()).has_value());
  CHECK_FALSE(linear_coincidence(WeightClassFunction::make(Family::f, 5, 2, {1, 2}).table()).has_value());
  CHECK(linear_coincidence(zero_table(3)) == F3Vector::zero(3));

  FunctionTable shifted = zero_table(3);
  shifted.values[0] = F3(1);
  CHECK_THROWS_AS(linear_coincidence(shifted), InvalidInput);
}
