#pragma once

#include "ternmin/bigint.hpp"
#include "ternmin/kernels.hpp"
#include "ternmin/weight_class.hpp"

#include <compare>
#include <istream>
#include <map>
#include <ostream>
#include <vector>

namespace ternmin {

/// Number of coordinates of a codeword equal to 0, 1 and 2.
struct SymbolCounts {
  BigInt t0;
  BigInt t1;
  BigInt t2;

  BigInt weight() const { return t1 + t2; }
  BigInt length() const { return t0 + t1 + t2; }

  friend bool operator==(const SymbolCounts&, const SymbolCounts&) = default;
  friend bool operator<(const SymbolCounts& a, const SymbolCounts& b) {
    if (a.t0 != b.t0) return a.t0 < b.t0;
    if (a.t1 != b.t1) return a.t1 < b.t1;
    return a.t2 < b.t2;
  }
};

/// Multiplicity A_w per Hamming weight w, including A_0.
struct WeightDistribution {
  std::map<BigInt, BigInt> entries;

  BigInt total() const;
  const BigInt& min_nonzero_weight() const;
  const BigInt& max_weight() const;

  friend bool operator==(const WeightDistribution&, const WeightDistribution&) = default;
};

/// Multiplicity per monomial w0^t0 w1^t1 w2^t2.
struct CompleteWeightEnumerator {
  std::map<SymbolCounts, BigInt> terms;

  BigInt total() const;
  WeightDistribution weight_distribution() const;

  friend bool operator==(const CompleteWeightEnumerator&, const CompleteWeightEnumerator&) = default;
};

/// Cap on m for the Theta(3^{2m+1}) codeword enumeration.
struct BruteBudget {
  int max_m = 7;
};

/// Throws BudgetExceeded when m > cap.
void require_budget(int m, int cap, const char* what);

// Generic construction C_f = {(u f(x) + v.x)_{x != 0}}.

SymbolCounts codeword_counts_brute(const FunctionTable& f, F3 u, const F3Vector& v);
SymbolCounts codeword_counts_brute(const WeightClassFunction& fn, F3 u, const F3Vector& v);

/// |{x in F_3^m : u fn(x) + v.x = lambda}| for u != 0 and wt(v) = i,
///   3^{m-1} + (1/3) sum_{j=0}^{m} K_j(i, m) tau(u c_j - lambda)
/// with tau(0) = 2, tau(+-1) = -1. The x = 0 point is included.
BigInt nlambda_closed(const WeightClassFunction& fn, F3 u, int i, F3 lambda);

/// Symbol counts of the codeword for (u, v) with wt(v) = i; the x = 0
/// coordinate is not part of the code, so t0 = N_0 - 1.
SymbolCounts codeword_counts_closed(const WeightClassFunction& fn, F3 u, int i);

WeightDistribution weight_distribution_closed(const WeightClassFunction& fn);
CompleteWeightEnumerator cwe_closed(const WeightClassFunction& fn);

CompleteWeightEnumerator cwe_brute(const FunctionTable& f, BruteBudget budget = {},
                                   Backend backend = Backend::openmp);
WeightDistribution weight_distribution_brute(const FunctionTable& f, BruteBudget budget = {},
                                             Backend backend = Backend::openmp);

/// [n, dim, d] of C_fn plus its largest weight.
struct CodeSpec {
  WeightClassFunction fn;
  BigInt n;
  int dim = 0;
  BigInt d;
  BigInt w_max;
};

/// Families g, f: d = |S(m,k)|, w_max = 2*3^{m-1} + 2^k C(m-1,k) - 1.
/// Family gbar: d = 3^m - 3^{m-1} - 2^k C(m-1,k), w_max = 3^m - 1 - |S(m,k)|.
/// Custom functions: read off weight_distribution_closed.
CodeSpec parameters(const WeightClassFunction& fn);

/// Dense matrix over F_3.
class F3Matrix {
 public:
  F3Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  F3 operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  F3& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  std::size_t rank() const;

  friend bool operator==(const F3Matrix&, const F3Matrix&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<F3> data_;
};

/// Rows (f(x), x_1, ..., x_m) over x in canonical order. Throws InvalidInput
/// naming the coincident w when f is linear (rank would drop below m+1).
F3Matrix generator_matrix(const FunctionTable& f);

/// Header line "m k family n dim", then one row of digits per line.
void write_generator_matrix(std::ostream& out, const WeightClassFunction& fn, const F3Matrix& g);

struct GeneratorFile {
  int m = 0;
  int k = 0;
  Family family = Family::custom;
  F3Matrix matrix{0, 0};
};
GeneratorFile read_generator_matrix(std::istream& in);

/// Weight distribution of the row span, one entry per coefficient vector.
WeightDistribution weight_distribution_of_span(const F3Matrix& g, Backend backend = Backend::openmp);

}  // namespace ternmin
