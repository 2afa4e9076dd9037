#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ternmin/errors.hpp"
#include "ternmin/minimality.hpp"

#include <random>

using namespace ternmin;

namespace {

std::vector<F3> word(std::initializer_list<int> d) {
  std::vector<F3> out;
  for (int x : d) out.emplace_back(x);
  return out;
}

WeightClassFunction random_custom(std::mt19937& rng, int m) {
  std::uniform_int_distribution<int> digit(0, 2);
  std::vector<F3> cls{F3(0)};
  for (int j = 1; j <= m; ++j) cls.emplace_back(digit(rng));
  return WeightClassFunction::custom(cls);
}

}  // namespace

TEST_CASE("covers") {
  const auto a = word({1, 0, 2, 1});
  CHECK(covers(a, word({0, 0, 0, 0})));
  CHECK(covers(a, word({2, 0, 1, 2})));
  CHECK(covers(a, word({1, 0, 0, 2})));
  CHECK_FALSE(covers(word({1, 0, 1}), word({1, 1, 0})));
}

TEST_CASE("theorem families are minimal by both methods") {
  for (const auto& fn : {WeightClassFunction::make(Family::g, 5, 2), WeightClassFunction::make(Family::gbar, 5, 2),
                         WeightClassFunction::make(Family::f, 5, 2, {1})}) {
    const auto brute = is_minimal_brute(fn.table());
    const auto spectral = is_minimal_spectral(fn);
    CHECK(brute.minimal);
    CHECK(brute.method == Method::brute);
    CHECK(spectral.minimal);
    CHECK(spectral.method == Method::spectral);
    CHECK_FALSE(spectral.vacuous);
    CHECK(is_minimal_spectral(fn.table()).minimal);
  }
  CHECK(is_minimal_spectral(WeightClassFunction::make(Family::gbar, 9, 2)).minimal);
  CHECK(is_minimal_spectral(WeightClassFunction::make(Family::g, 6, 2)).minimal);
}

TEST_CASE("first-order Reed-Muller code is minimal") {
  const int m = 3;
  kernels::PackedCodewords words(space_size(m), space_size(m) - 1);
  for (std::uint64_t v = 0; v < space_size(m); ++v) {
    for (std::uint64_t x = 1; x < space_size(m); ++x) {
      words.set(v, x - 1, inner_product(vector_at(m, v), vector_at(m, x)));
    }
  }
  CHECK(is_minimal_brute(words).minimal);
  CHECK(is_minimal_brute(words, Backend::serial).minimal);
}

TEST_CASE("planted non-minimal code") {
  // c1 = 1 on weight 1 only: the weight-1 indicator is "small" enough that
  // some codeword's support sits inside another's.
  const auto fn = WeightClassFunction::custom({F3(0), F3(0), F3(0), F3(1)});
  const auto brute = is_minimal_brute(fn.table());
  const auto spectral = is_minimal_spectral(fn);
  CHECK_FALSE(brute.minimal);
  REQUIRE(brute.witness.has_value());
  CHECK_FALSE(spectral.minimal);
  CHECK(spectral.spectral_witness.has_value());
  CHECK_FALSE(is_minimal_spectral(fn.table()).minimal);

  // the brute witness really is a cover
  const auto table = fn.table();
  const auto [a, b] = *brute.witness;
  auto codeword = [&](CodewordIndex c) {
    std::vector<F3> out;
    const auto v = vector_at(3, c.v);
    for (std::uint64_t x = 1; x < space_size(3); ++x) {
      out.push_back(F3(c.u) * table.at(x) + inner_product(v, vector_at(3, x)));
    }
    return out;
  };
  CHECK(covers(codeword(a), codeword(b)));
}

TEST_CASE("spectral and brute agree on random weight-class functions") {
  std::mt19937 rng(77);
  int non_minimal = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const int m = 2 + trial % 4;
    const auto fn = random_custom(rng, m);
    const auto table = fn.table();
    if (linear_coincidence(table)) {
      CHECK_THROWS_AS(is_minimal_spectral(fn), InvalidInput);
      continue;
    }
    const bool brute = is_minimal_brute(table).minimal;
    CHECK(is_minimal_spectral(fn).minimal == brute);
    CHECK(is_minimal_spectral(table).minimal == brute);
    non_minimal += brute ? 0 : 1;
  }
  CHECK(non_minimal > 0);
}

TEST_CASE("minimality budgets") {
  const auto g = WeightClassFunction::make(Family::g, 7, 2);
  CHECK_THROWS_AS(is_minimal_brute(g.table()), BudgetExceeded);
  CHECK_THROWS_AS(is_minimal_spectral(WeightClassFunction::make(Family::g, 9, 2).table()), BudgetExceeded);
}

TEST_CASE("AB report") {
  const auto gbar = ab_report(weight_distribution_closed(WeightClassFunction::make(Family::gbar, 9, 2)));
  CHECK(gbar.w_min == 13010);
  CHECK(gbar.w_max == 19520);
  CHECK(gbar.violates_ab);

  WeightDistribution constant;
  constant.entries = {{0, 1}, {18, 26}};
  CHECK_FALSE(ab_report(constant).violates_ab);
  WeightDistribution empty;
  empty.entries = {{0, 1}};
  CHECK_THROWS_AS(ab_report(empty), InvalidInput);

  const auto g = ab_report(weight_distribution_closed(WeightClassFunction::make(Family::g, 9, 2)));
  CHECK(g.violates_ab == (3 * 162 <= 2 * 13122 + 8 * 28 - 2));
  CHECK(g.violates_ab);

  CHECK(ab_condition_closed(Family::gbar, 9, 2));
  CHECK(ab_condition_closed(Family::g, 9, 2));
  CHECK_FALSE(ab_condition_closed(Family::gbar, 5, 2));
  for (int m = 5; m <= 12; ++m) {
    for (int k = 2; k <= (m - 1) / 2; ++k) {
      for (auto fam : {Family::g, Family::gbar}) {
        const auto fn = WeightClassFunction::make(fam, m, k);
        CHECK(ab_condition_closed(fam, m, k) == ab_report(weight_distribution_closed(fn)).violates_ab);
      }
    }
  }
}
