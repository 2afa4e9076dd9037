#include "ternmin/code.hpp"

#include "ternmin/combinatorics.hpp"
#include "ternmin/errors.hpp"
#include "ternmin/walsh.hpp"

#include <sstream>
#include <string>
#include <tuple>

namespace ternmin {

BigInt WeightDistribution::total() const {
  BigInt sum = 0;
  for (const auto& [w, a] : entries) sum += a;
  return sum;
}

const BigInt& WeightDistribution::min_nonzero_weight() const {
  for (const auto& [w, a] : entries) {
    if (w != 0 && a != 0) return w;
  }
  throw InvalidInput("weight distribution has no nonzero weight");
}

const BigInt& WeightDistribution::max_weight() const {
  for (auto it = entries.rbegin(); it != entries.rend(); ++it) {
    if (it->second != 0) return it->first;
  }
  throw InvalidInput("empty weight distribution");
}

BigInt CompleteWeightEnumerator::total() const {
  BigInt sum = 0;
  for (const auto& [key, mult] : terms) sum += mult;
  return sum;
}

WeightDistribution CompleteWeightEnumerator::weight_distribution() const {
  WeightDistribution wd;
  for (const auto& [key, mult] : terms) wd.entries[key.weight()] += mult;
  return wd;
}

void require_budget(int m, int cap, const char* what) {
  if (m > cap) {
    throw BudgetExceeded(std::string(what) + " needs m=" + std::to_string(m) + " but the cap is m <= " +
                             std::to_string(cap),
                         m, cap);
  }
}

SymbolCounts codeword_counts_brute(const FunctionTable& f, F3 u, const F3Vector& v) {
  if (v.dim() != f.m) throw InvalidInput("codeword_counts_brute: dimension mismatch");
  const std::uint64_t n = space_size(f.m);
  std::int64_t t[3] = {0, 0, 0};
  for (std::uint64_t x = 1; x < n; ++x) {
    const F3 sym = u * f.values[x] + inner_product(v, vector_at(f.m, x));
    ++t[sym.value()];
  }
  return {t[0], t[1], t[2]};
}

SymbolCounts codeword_counts_brute(const WeightClassFunction& fn, F3 u, const F3Vector& v) {
  return codeword_counts_brute(fn.table(), u, v);
}

BigInt nlambda_closed(const WeightClassFunction& fn, F3 u, int i, F3 lambda) {
  const int m = fn.m();
  if (u.is_zero()) throw InvalidInput("nlambda_closed: u must be nonzero");
  if (i < 0 || i > m) throw InvalidInput("nlambda_closed: weight class outside 0..m");
  BigInt sum = 0;
  for (int j = 0; j <= m; ++j) {
    const BigInt kj = krawtchouk(j, i, m);
    if ((u * fn.at_weight(j) - lambda).is_zero()) {
      sum += 2 * kj;
    } else {
      sum -= kj;
    }
  }
  if (sum % 3 != 0) {
    throw ConsistencyError("nlambda_closed: character sum " + to_decimal(sum) + " not divisible by 3");
  }
  return pow3(static_cast<unsigned>(m - 1)) + sum / 3;
}

SymbolCounts codeword_counts_closed(const WeightClassFunction& fn, F3 u, int i) {
  const int m = fn.m();
  const BigInt q = pow3(static_cast<unsigned>(m));
  if (i < 0 || i > m) throw InvalidInput("codeword_counts_closed: weight class outside 0..m");
  if (u.is_zero()) {
    if (i == 0) return {q - 1, 0, 0};
    const BigInt third = q / 3;
    return {third - 1, third, third};
  }
  SymbolCounts c{nlambda_closed(fn, u, i, F3(0)) - 1, nlambda_closed(fn, u, i, F3(1)),
                 nlambda_closed(fn, u, i, F3(2))};
  if (c.length() != q - 1) throw ConsistencyError("codeword_counts_closed: symbol counts do not sum to n");
  return c;
}

WeightDistribution weight_distribution_closed(const WeightClassFunction& fn) {
  const int m = fn.m();
  const BigInt q = pow3(static_cast<unsigned>(m));
  WeightDistribution wd;
  wd.entries[0] += 1;
  wd.entries[2 * q / 3] += q - 1;
  for (int u = 1; u <= 2; ++u) {
    for (int i = 0; i <= m; ++i) {
      const BigInt mult = pow_int(2, static_cast<unsigned>(i)) * binomial(m, i);
      wd.entries[q - nlambda_closed(fn, F3(u), i, F3(0))] += mult;
    }
  }
  return wd;
}

CompleteWeightEnumerator cwe_closed(const WeightClassFunction& fn) {
  const int m = fn.m();
  const BigInt q = pow3(static_cast<unsigned>(m));
  CompleteWeightEnumerator cwe;
  cwe.terms[codeword_counts_closed(fn, F3(0), 0)] += 1;
  if (m >= 1) cwe.terms[codeword_counts_closed(fn, F3(0), 1)] += q - 1;
  for (int u = 1; u <= 2; ++u) {
    for (int i = 0; i <= m; ++i) {
      const BigInt mult = pow_int(2, static_cast<unsigned>(i)) * binomial(m, i);
      cwe.terms[codeword_counts_closed(fn, F3(u), i)] += mult;
    }
  }
  return cwe;
}

CompleteWeightEnumerator cwe_brute(const FunctionTable& f, BruteBudget budget, Backend backend) {
  require_budget(f.m, budget.max_m, "brute-force codeword enumeration");
  std::vector<std::uint8_t> raw(f.values.size());
  for (std::size_t x = 0; x < raw.size(); ++x) raw[x] = f.values[x].value();
  const auto counts = kernels::symbol_counts(raw, f.m, backend);

  std::map<std::tuple<std::int64_t, std::int64_t, std::int64_t>, std::int64_t> tally;
  for (const auto& c : counts) ++tally[{c[0], c[1], c[2]}];
  CompleteWeightEnumerator cwe;
  for (const auto& [key, mult] : tally) {
    cwe.terms[{std::get<0>(key), std::get<1>(key), std::get<2>(key)}] = mult;
  }
  return cwe;
}

WeightDistribution weight_distribution_brute(const FunctionTable& f, BruteBudget budget, Backend backend) {
  return cwe_brute(f, budget, backend).weight_distribution();
}

CodeSpec parameters(const WeightClassFunction& fn) {
  const int m = fn.m();
  const BigInt q = pow3(static_cast<unsigned>(m));
  CodeSpec spec{fn, q - 1, m + 1, 0, 0};
  if (fn.family() == Family::custom) {
    bool all_zero = true;
    for (F3 c : fn.class_values()) all_zero = all_zero && c.is_zero();
    if (all_zero) throw InvalidInput("parameters: f is identically zero, so C_f has dimension m");
    const auto wd = weight_distribution_closed(fn);
    spec.d = wd.min_nonzero_weight();
    spec.w_max = wd.max_weight();
    return spec;
  }
  const int k = *fn.k();
  check_theorem_range(m, k);
  const BigInt ball = ball_size(m, k);
  const BigInt lloyd_max = pow_int(2, static_cast<unsigned>(k)) * binomial(m - 1, k);
  if (fn.family() == Family::gbar) {
    spec.d = q - q / 3 - lloyd_max;
    spec.w_max = q - 1 - ball;
  } else {
    spec.d = ball;
    spec.w_max = 2 * (q / 3) + lloyd_max - 1;
  }
  return spec;
}

std::size_t F3Matrix::rank() const {
  F3Matrix a = *this;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols_ && rank < rows_; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows_ && a(pivot, col).is_zero()) ++pivot;
    if (pivot == rows_) continue;
    for (std::size_t c = 0; c < cols_; ++c) std::swap(a(rank, c), a(pivot, c));
    // scale pivot to 1 (inverse of 2 is 2)
    const F3 inv = a(rank, col);
    for (std::size_t c = 0; c < cols_; ++c) a(rank, c) = a(rank, c) * inv;
    for (std::size_t r = 0; r < rows_; ++r) {
      if (r == rank || a(r, col).is_zero()) continue;
      const F3 factor = a(r, col);
      for (std::size_t c = 0; c < cols_; ++c) a(r, c) = a(r, c) - factor * a(rank, c);
    }
    ++rank;
  }
  return rank;
}

F3Matrix generator_matrix(const FunctionTable& f) {
  if (const auto w = linear_coincidence(f)) {
    std::ostringstream msg;
    msg << "generator_matrix: f coincides with the linear function w.x for w = (";
    for (int j = 0; j < w->dim(); ++j) msg << (j ? "," : "") << int((*w)[j].value());
    msg << "); rank would be below m+1";
    throw InvalidInput(msg.str());
  }
  const int m = f.m;
  const std::uint64_t n = space_size(m);
  F3Matrix g(static_cast<std::size_t>(m) + 1, n - 1);
  for (std::uint64_t x = 1; x < n; ++x) {
    const F3Vector xv = vector_at(m, x);
    g(0, x - 1) = f.values[x];
    for (int j = 0; j < m; ++j) g(static_cast<std::size_t>(j) + 1, x - 1) = xv[j];
  }
  return g;
}

void write_generator_matrix(std::ostream& out, const WeightClassFunction& fn, const F3Matrix& g) {
  out << fn.m() << ' ' << fn.k().value_or(0) << ' ' << to_string(fn.family()) << ' ' << g.cols() << ' '
      << g.rows() << '\n';
  for (std::size_t r = 0; r < g.rows(); ++r) {
    for (std::size_t c = 0; c < g.cols(); ++c) {
      if (c) out << ' ';
      out << static_cast<int>(g(r, c).value());
    }
    out << '\n';
  }
}

GeneratorFile read_generator_matrix(std::istream& in) {
  GeneratorFile file;
  std::string family;
  std::size_t n = 0;
  std::size_t dim = 0;
  if (!(in >> file.m >> file.k >> family >> n >> dim)) throw InvalidInput("generator file: bad header");
  file.family = parse_family(family);
  file.matrix = F3Matrix(dim, n);
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      int d = -1;
      if (!(in >> d) || d < 0 || d > 2) throw InvalidInput("generator file: expected digit in {0,1,2}");
      file.matrix(r, c) = F3(d);
    }
  }
  return file;
}

WeightDistribution weight_distribution_of_span(const F3Matrix& g, Backend backend) {
  const int rows = static_cast<int>(g.rows());
  const std::uint64_t combos = space_size(rows);
  std::vector<std::uint32_t> weights(combos);
  auto weight_of = [&](std::uint64_t index) {
    const F3Vector coeff = vector_at(rows, index);
    std::uint32_t w = 0;
    for (std::size_t c = 0; c < g.cols(); ++c) {
      F3 s(0);
      for (int r = 0; r < rows; ++r) s = s + coeff[r] * g(static_cast<std::size_t>(r), c);
      w += s.is_zero() ? 0 : 1;
    }
    return w;
  };
  if (backend == Backend::serial) {
    for (std::uint64_t i = 0; i < combos; ++i) weights[i] = weight_of(i);
  } else {
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(combos); ++i) {
      weights[static_cast<std::size_t>(i)] = weight_of(static_cast<std::uint64_t>(i));
    }
  }
  WeightDistribution wd;
  for (std::uint32_t w : weights) wd.entries[w] += 1;
  return wd;
}

}  // namespace ternmin
