#pragma once

#include "ternmin/bigint.hpp"

#include <map>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

namespace ternmin {

enum class LemmaTag { binom_growth, gap_positive, tail_dominance };

std::string_view to_string(LemmaTag tag);
LemmaTag parse_lemma_tag(std::string_view name);

struct Slack {
  bool holds = false;
  BigInt slack;
};

/// C(m+1, t) - 3 C(m-1, t) with t = floor((m-1)/2). Stated for m >= 16.
Slack check_binom_growth(int m);

/// 3^{m-1} - 2^k C(m-1, k) - sum_{j=0}^{k} 2^j C(m, j), for m >= 5 and
/// 1 <= k <= floor((m-1)/2).
Slack check_gap_positive(int m, int k);

/// sum_{j=t+1}^{m-1} 2^j C(m-1, j) - sum_{j=0}^{t-1} 2^{j+1} C(m-1, j),
/// t = floor((m-1)/2), m >= 2.
Slack check_tail_dominance(int m);

/// Same expression as check_tail_dominance with t replaced by k; equals
/// 3^{m-1} - sum_{j=0}^{k} 2^j C(m, j).
BigInt tail_difference(int m, int k);

struct CertificateReport {
  LemmaTag tag = LemmaTag::gap_positive;
  int m_min = 0;
  int m_max = 0;
  // keys are (m, k); k is 0 for the single-parameter lemmas
  std::vector<std::pair<int, int>> failures;
  std::map<std::pair<int, int>, BigInt> margins;
  std::optional<BigInt> min_slack;

  bool passed() const { return failures.empty(); }
  friend bool operator==(const CertificateReport&, const CertificateReport&) = default;
};

/// Lower end of each lemma's stated range: 16, 5, 2.
int stated_min_m(LemmaTag tag);

/// Runs the check at every point with m in [m_min, m_max] (m_min defaults
/// to the stated range). m_max <= 200.
CertificateReport sweep(int m_max, LemmaTag tag, std::optional<int> m_min = std::nullopt);

}  // namespace ternmin
