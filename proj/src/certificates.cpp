#include "ternmin/certificates.hpp"

#include "ternmin/combinatorics.hpp"
#include "ternmin/errors.hpp"

#include <string>

namespace ternmin {

std::string_view to_string(LemmaTag tag) {
  switch (tag) {
    case LemmaTag::binom_growth:
      return "binom_growth";
    case LemmaTag::gap_positive:
      return "gap_positive";
    case LemmaTag::tail_dominance:
      return "tail_dominance";
  }
  return "gap_positive";
}

LemmaTag parse_lemma_tag(std::string_view name) {
  if (name == "binom_growth") return LemmaTag::binom_growth;
  if (name == "gap_positive") return LemmaTag::gap_positive;
  if (name == "tail_dominance") return LemmaTag::tail_dominance;
  throw InvalidInput("unknown lemma tag '" + std::string(name) + "'");
}

Slack check_binom_growth(int m) {
  if (m < 2) throw InvalidInput("check_binom_growth: m must be >= 2");
  const int t = (m - 1) / 2;
  const BigInt slack = binomial(m + 1, t) - 3 * binomial(m - 1, t);
  return {slack > 0, slack};
}

Slack check_gap_positive(int m, int k) {
  if (m < 5) throw InvalidInput("check_gap_positive: m must be >= 5");
  if (k < 1 || k > (m - 1) / 2) throw InvalidInput("check_gap_positive: k outside 1..floor((m-1)/2)");
  BigInt slack = pow3(static_cast<unsigned>(m - 1)) - pow_int(2, static_cast<unsigned>(k)) * binomial(m - 1, k);
  for (int j = 0; j <= k; ++j) slack -= pow_int(2, static_cast<unsigned>(j)) * binomial(m, j);
  return {slack > 0, slack};
}

BigInt tail_difference(int m, int k) {
  BigInt diff = 0;
  for (int j = k + 1; j <= m - 1; ++j) diff += pow_int(2, static_cast<unsigned>(j)) * binomial(m - 1, j);
  for (int j = 0; j <= k - 1; ++j) diff -= pow_int(2, static_cast<unsigned>(j + 1)) * binomial(m - 1, j);
  return diff;
}

Slack check_tail_dominance(int m) {
  if (m < 2) throw InvalidInput("check_tail_dominance: m must be >= 2");
  const BigInt slack = tail_difference(m, (m - 1) / 2);
  return {slack > 0, slack};
}

int stated_min_m(LemmaTag tag) {
  switch (tag) {
    case LemmaTag::binom_growth:
      return 16;
    case LemmaTag::gap_positive:
      return 5;
    case LemmaTag::tail_dominance:
      return 2;
  }
  return 2;
}

CertificateReport sweep(int m_max, LemmaTag tag, std::optional<int> m_min) {
  if (m_max > 200) throw InvalidInput("sweep: m_max must be <= 200");
  CertificateReport report;
  report.tag = tag;
  report.m_min = m_min.value_or(stated_min_m(tag));
  report.m_max = m_max;
  if (tag == LemmaTag::gap_positive && report.m_min < 5) throw InvalidInput("sweep: gap_positive needs m >= 5");
  if (report.m_min < 2) throw InvalidInput("sweep: m must be >= 2");

  auto record = [&report](int m, int k, const Slack& s) {
    report.margins[{m, k}] = s.slack;
    if (!s.holds) report.failures.emplace_back(m, k);
    if (!report.min_slack || s.slack < *report.min_slack) report.min_slack = s.slack;
  };
  for (int m = report.m_min; m <= m_max; ++m) {
    switch (tag) {
      case LemmaTag::binom_growth:
        record(m, 0, check_binom_growth(m));
        break;
      case LemmaTag::gap_positive:
        for (int k = 1; k <= (m - 1) / 2; ++k) record(m, k, check_gap_positive(m, k));
        break;
      case LemmaTag::tail_dominance:
        record(m, 0, check_tail_dominance(m));
        break;
    }
  }
  return report;
}

}  // namespace ternmin
