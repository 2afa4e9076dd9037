#include "ternmin/weight_class.hpp"

#include "ternmin/combinatorics.hpp"
#include "ternmin/errors.hpp"

#include <string>

namespace ternmin {

std::string_view to_string(Family family) {
  switch (family) {
    case Family::g:
      return "g";
    case Family::gbar:
      return "gbar";
    case Family::f:
      return "f";
    case Family::custom:
      return "custom";
  }
  return "custom";
}

Family parse_family(std::string_view name) {
  if (name == "g") return Family::g;
  if (name == "gbar") return Family::gbar;
  if (name == "f") return Family::f;
  if (name == "custom") return Family::custom;
  throw InvalidInput("unknown family '" + std::string(name) + "' (expected g, gbar, f)");
}

bool in_theorem_range(int m, int k) { return m >= 5 && k >= 2 && k <= (m - 1) / 2; }

void check_theorem_range(int m, int k) {
  if (m < 5) throw InvalidInput("m=" + std::to_string(m) + " violates m >= 5");
  if (k < 2) throw InvalidInput("k=" + std::to_string(k) + " violates k >= 2");
  if (k > (m - 1) / 2) {
    throw InvalidInput("k=" + std::to_string(k) + " violates k <= floor((m-1)/2) = " +
                       std::to_string((m - 1) / 2));
  }
}

F3 FunctionTable::operator()(const F3Vector& x) const {
  if (x.dim() != m) throw InvalidInput("function table: dimension mismatch");
  return values[index_of(x)];
}

WeightClassFunction WeightClassFunction::make(Family family, int m, int k, WeightSet subset,
                                              RangeCheck check) {
  if (family == Family::custom) throw InvalidInput("make: use custom() for explicit class tables");
  if (check == RangeCheck::enforce) {
    check_theorem_range(m, k);
  } else if (m < 1 || k < 1 || k > m) {
    throw InvalidInput("make: need 1 <= k <= m");
  }
  if (family == Family::f) {
    if (subset.empty()) throw InvalidInput("family f needs a nonempty S subset of [k]");
    for (int s : subset) {
      if (s < 1 || s > k) {
        throw InvalidInput("S element " + std::to_string(s) + " outside [1, " + std::to_string(k) + "]");
      }
    }
  } else {
    subset.clear();
  }

  WeightClassFunction fn;
  fn.family_ = family;
  fn.k_ = k;
  fn.subset_ = std::move(subset);
  fn.class_values_.assign(static_cast<std::size_t>(m) + 1, F3(0));
  for (int j = 1; j <= m; ++j) {
    F3 c(0);
    switch (family) {
      case Family::g:
        c = F3(j <= k ? 1 : 0);
        break;
      case Family::gbar:
        c = F3(j > k ? 1 : 0);
        break;
      case Family::f:
        if (j <= k) c = F3(fn.subset_.contains(j) ? 2 : 1);
        break;
      case Family::custom:
        break;
    }
    fn.class_values_[static_cast<std::size_t>(j)] = c;
  }
  return fn;
}

WeightClassFunction WeightClassFunction::custom(std::vector<F3> class_values) {
  if (class_values.size() < 2) throw InvalidInput("custom: need m >= 1");
  if (!class_values[0].is_zero()) throw InvalidInput("custom: f(0) must be 0");
  WeightClassFunction fn;
  fn.class_values_ = std::move(class_values);
  return fn;
}

F3 WeightClassFunction::evaluate(const F3Vector& x) const {
  if (x.dim() != m()) throw InvalidInput("evaluate: dimension mismatch");
  return at_weight(x.weight());
}

FunctionTable WeightClassFunction::table() const {
  const int dim = m();
  FunctionTable t{dim, std::vector<F3>(space_size(dim))};
  // weight of index x = weight of x/3 plus (last digit != 0)
  std::vector<std::uint8_t> wt(t.values.size(), 0);
  for (std::uint64_t x = 1; x < wt.size(); ++x) {
    wt[x] = static_cast<std::uint8_t>(wt[x / 3] + (x % 3 != 0 ? 1 : 0));
    t.values[x] = at_weight(wt[x]);
  }
  return t;
}

BigInt set_a_size(int m, const WeightSet& subset) {
  BigInt total = 0;
  for (int j : subset) total += pow_int(2, static_cast<unsigned>(j)) * binomial(m, j);
  return total;
}

BigInt ball_size(int m, int k) {
  BigInt total = 0;
  for (int j = 1; j <= k; ++j) total += pow_int(2, static_cast<unsigned>(j)) * binomial(m, j);
  return total;
}

}  // namespace ternmin
