#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace ternmin {

/// Element of F_3 stored as a residue in {0,1,2}; 2 plays the role of -1.
class F3 {
 public:
  constexpr F3() = default;
  constexpr explicit F3(int v) : value_(static_cast<std::uint8_t>(((v % 3) + 3) % 3)) {}

  constexpr std::uint8_t value() const { return value_; }
  constexpr bool is_zero() const { return value_ == 0; }

  friend constexpr F3 operator+(F3 a, F3 b) { return F3(a.value_ + b.value_); }
  friend constexpr F3 operator-(F3 a, F3 b) { return F3(a.value_ + 3 - b.value_); }
  friend constexpr F3 operator*(F3 a, F3 b) { return F3(a.value_ * b.value_); }
  friend constexpr F3 operator-(F3 a) { return F3(3 - a.value_); }
  friend constexpr bool operator==(F3, F3) = default;

 private:
  std::uint8_t value_ = 0;
};

inline constexpr F3 negate(F3 a) { return -a; }

/// Vector in F_3^m.
class F3Vector {
 public:
  F3Vector() = default;
  explicit F3Vector(std::vector<F3> coords) : coords_(std::move(coords)) {}
  F3Vector(std::initializer_list<int> digits);

  static F3Vector zero(int m) { return F3Vector(std::vector<F3>(static_cast<std::size_t>(m))); }

  int dim() const { return static_cast<int>(coords_.size()); }
  F3 operator[](int j) const { return coords_[static_cast<std::size_t>(j)]; }
  F3& operator[](int j) { return coords_[static_cast<std::size_t>(j)]; }
  std::span<const F3> coords() const { return coords_; }

  int weight() const;
  std::vector<int> support() const;

  friend F3Vector operator+(const F3Vector& a, const F3Vector& b);
  friend F3Vector operator-(const F3Vector& a);
  friend bool operator==(const F3Vector&, const F3Vector&) = default;

 private:
  std::vector<F3> coords_;
};

inline F3Vector negate(const F3Vector& v) { return -v; }

/// Sum of u_j v_j mod 3. Throws InvalidInput on dimension mismatch.
F3 inner_product(const F3Vector& u, const F3Vector& v);

inline int weight(const F3Vector& v) { return v.weight(); }

/// Largest m for which the canonical index of F_3^m fits comfortably in 64 bits.
inline constexpr int kMaxIndexedDim = 39;

/// 3^m as a machine integer; m <= kMaxIndexedDim.
std::uint64_t space_size(int m);

/// Vector whose base-3 digits (most significant first) spell `index`.
/// index 0 is the zero vector; valid range 0 .. 3^m - 1.
F3Vector vector_at(int m, std::uint64_t index);

/// Inverse of vector_at.
std::uint64_t index_of(const F3Vector& v);

/// Canonical coordinate order of F_3^m \ {0}: j runs over 1 .. 3^m - 1.
F3Vector coordinate_vector(int m, std::uint64_t j);

/// All 2^i C(m,i) vectors of weight i, ordered by support (lexicographic
/// position combinations) and then by digit pattern.
std::vector<F3Vector> enumerate_by_weight(int m, int i);

struct IndexRange {
  std::uint64_t begin = 0;
  std::uint64_t end = 0;

  std::uint64_t size() const { return end - begin; }
  friend bool operator==(const IndexRange&, const IndexRange&) = default;
};

/// Splits [begin, end) into `parts` contiguous disjoint chunks whose
/// concatenation in order is the original range.
std::vector<IndexRange> split_range(IndexRange range, std::size_t parts);

}  // namespace ternmin
