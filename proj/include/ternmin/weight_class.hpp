#pragma once

#include "ternmin/bigint.hpp"
#include "ternmin/gf3.hpp"

#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ternmin {

enum class Family { g, gbar, f, custom };

std::string_view to_string(Family family);
/// Accepts "g", "gbar", "f", "custom"; throws InvalidInput otherwise.
Family parse_family(std::string_view name);

using WeightSet = std::set<int>;

enum class RangeCheck { enforce, unchecked };

/// Throws InvalidInput naming the violated bound unless
/// m >= 5 and 2 <= k <= floor((m-1)/2).
void check_theorem_range(int m, int k);
bool in_theorem_range(int m, int k);

/// Arbitrary function F_3^m -> F_3 as a table over the canonical index
/// (index 0 is the zero vector).
struct FunctionTable {
  int m = 0;
  std::vector<F3> values;

  F3 operator()(const F3Vector& x) const;
  F3 at(std::uint64_t index) const { return values[index]; }
};

/// A function F_3^m -> F_3 that depends on x only through wt(x).
class WeightClassFunction {
 public:
  /// g: 1 on weights 1..k. gbar: 1 on weights k+1..m. f: 2 (= -1) on
  /// weights in S, 1 on the rest of 1..k.
  static WeightClassFunction make(Family family, int m, int k, WeightSet subset = {},
                                  RangeCheck check = RangeCheck::enforce);

  /// class_values[j] is the value on weight j; class_values[0] must be 0.
  static WeightClassFunction custom(std::vector<F3> class_values);

  Family family() const { return family_; }
  int m() const { return static_cast<int>(class_values_.size()) - 1; }
  std::optional<int> k() const { return k_; }
  const WeightSet& subset() const { return subset_; }
  std::span<const F3> class_values() const { return class_values_; }

  F3 at_weight(int j) const { return class_values_[static_cast<std::size_t>(j)]; }
  F3 evaluate(const F3Vector& x) const;

  FunctionTable table() const;

  friend bool operator==(const WeightClassFunction&, const WeightClassFunction&) = default;

 private:
  Family family_ = Family::custom;
  std::optional<int> k_;
  WeightSet subset_;
  std::vector<F3> class_values_;
};

/// |A| for A = {x : wt(x) in S}, i.e. sum over j in S of 2^j C(m, j).
BigInt set_a_size(int m, const WeightSet& subset);

/// |S(m,k)| = sum_{j=1}^{k} 2^j C(m, j).
BigInt ball_size(int m, int k);

}  // namespace ternmin
