#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ternmin/certificates.hpp"
#include "ternmin/combinatorics.hpp"
#include "ternmin/errors.hpp"

using namespace ternmin;

TEST_CASE("binom_growth") {
  const auto s16 = check_binom_growth(16);
  CHECK(s16.holds);
  CHECK(s16.slack == 19448 - 19305);
  CHECK(check_binom_growth(17).holds);
  CHECK(check_binom_growth(17).slack == 5148);
  // outside the stated range, only reported
  CHECK(check_binom_growth(5).slack == -3);
  CHECK_FALSE(check_binom_growth(5).holds);
}

TEST_CASE("gap_positive") {
  CHECK(check_gap_positive(5, 2).slack == 81 - 24 - 51);
  CHECK(check_gap_positive(9, 2).slack == 6286);
  CHECK(check_gap_positive(16, 7).holds);
  CHECK(check_gap_positive(16, 7).slack == 11374506);
  CHECK_THROWS_AS(check_gap_positive(4, 1), InvalidInput);
  CHECK_THROWS_AS(check_gap_positive(9, 5), InvalidInput);
}

TEST_CASE("gap decreases with k") {
  for (int m = 5; m <= 40; ++m) {
    for (int k = 2; k <= (m - 1) / 2; ++k) CHECK(check_gap_positive(m, k).slack < check_gap_positive(m, k - 1).slack);
  }
}

TEST_CASE("tail_dominance") {
  CHECK(check_tail_dominance(5).slack == 48 - 18);
  CHECK(check_tail_dominance(2).slack == 2);
  CHECK(check_tail_dominance(9).slack == 3710);
  CHECK(check_tail_dominance(9).holds);
}

TEST_CASE("tail difference closed form") {
  for (int m = 2; m <= 30; ++m) {
    for (int k = 0; k <= m - 1; ++k) {
      BigInt ball = 0;
      for (int j = 0; j <= k; ++j) ball += pow_int(2, static_cast<unsigned>(j)) * binomial(m, j);
      CHECK(tail_difference(m, k) == pow3(static_cast<unsigned>(m - 1)) - ball);
    }
  }
}

TEST_CASE("sweeps") {
  for (auto tag : {LemmaTag::binom_growth, LemmaTag::gap_positive, LemmaTag::tail_dominance}) {
    const auto report = sweep(50, tag);
    CHECK(report.passed());
    CHECK(report.m_min == stated_min_m(tag));
    CHECK(report.m_max == 50);
    CHECK(report.min_slack.has_value());
    CHECK(parse_lemma_tag(to_string(tag)) == tag);
  }
  CHECK(sweep(16, LemmaTag::binom_growth).margins.at({16, 0}) == 143);
  CHECK(sweep(5, LemmaTag::tail_dominance).margins.at({5, 0}) == 30);

  const auto informational = sweep(15, LemmaTag::binom_growth, 5);
  CHECK_FALSE(informational.passed());
  CHECK(informational.margins.size() == 11);

  CHECK(sweep(200, LemmaTag::gap_positive).passed());
  CHECK_THROWS_AS(sweep(201, LemmaTag::gap_positive), InvalidInput);
  CHECK_THROWS_AS(parse_lemma_tag("nope"), InvalidInput);
}
