#include "ternmin/gf3.hpp"

#include "ternmin/errors.hpp"

#include <string>

namespace ternmin {

F3Vector::F3Vector(std::initializer_list<int> digits) {
  coords_.reserve(digits.size());
  for (int d : digits) coords_.emplace_back(d);
}

int F3Vector::weight() const {
  int w = 0;
  for (F3 c : coords_) w += c.is_zero() ? 0 : 1;
  return w;
}

std::vector<int> F3Vector::support() const {
  std::vector<int> out;
  for (int j = 0; j < dim(); ++j) {
    if (!coords_[static_cast<std::size_t>(j)].is_zero()) out.push_back(j);
  }
  return out;
}

F3Vector operator+(const F3Vector& a, const F3Vector& b) {
  if (a.dim() != b.dim()) throw InvalidInput("vector dimension mismatch");
  F3Vector out = a;
  for (int j = 0; j < a.dim(); ++j) out[j] = a[j] + b[j];
  return out;
}

F3Vector operator-(const F3Vector& a) {
  F3Vector out = a;
  for (int j = 0; j < a.dim(); ++j) out[j] = -a[j];
  return out;
}

F3 inner_product(const F3Vector& u, const F3Vector& v) {
  if (u.dim() != v.dim()) {
    throw InvalidInput("inner_product: dimension mismatch (" + std::to_string(u.dim()) + " vs " +
                       std::to_string(v.dim()) + ")");
  }
  int acc = 0;
  for (int j = 0; j < u.dim(); ++j) acc += u[j].value() * v[j].value();
  return F3(acc);
}

std::uint64_t space_size(int m) {
  if (m < 0 || m > kMaxIndexedDim) throw InvalidInput("dimension out of indexable range");
  std::uint64_t n = 1;
  for (int j = 0; j < m; ++j) n *= 3;
  return n;
}

F3Vector vector_at(int m, std::uint64_t index) {
  if (index >= space_size(m)) throw InvalidInput("vector index out of range");
  F3Vector v = F3Vector::zero(m);
  for (int j = m - 1; j >= 0; --j) {
    v[j] = F3(static_cast<int>(index % 3));
    index /= 3;
  }
  return v;
}

std::uint64_t index_of(const F3Vector& v) {
  std::uint64_t index = 0;
  for (F3 c : v.coords()) index = index * 3 + c.value();
  return index;
}

F3Vector coordinate_vector(int m, std::uint64_t j) {
  if (m < 1) throw InvalidInput("coordinate_vector: m must be positive");
  const std::uint64_t n = space_size(m);
  if (j < 1 || j >= n) {
    throw InvalidInput("coordinate_vector: j=" + std::to_string(j) + " outside 1.." +
                       std::to_string(n - 1));
  }
  return vector_at(m, j);
}

std::vector<F3Vector> enumerate_by_weight(int m, int i) {
  if (m < 0 || i < 0 || i > m) throw InvalidInput("enumerate_by_weight: need 0 <= i <= m");
  std::vector<F3Vector> out;
  std::vector<int> positions(static_cast<std::size_t>(i));
  for (int p = 0; p < i; ++p) positions[static_cast<std::size_t>(p)] = p;

  const std::uint64_t patterns = std::uint64_t{1} << i;
  while (true) {
    for (std::uint64_t bits = 0; bits < patterns; ++bits) {
      F3Vector v = F3Vector::zero(m);
      // most significant pattern bit on the first support position
      for (int p = 0; p < i; ++p) {
        const bool two = (bits >> (i - 1 - p)) & 1U;
        v[positions[static_cast<std::size_t>(p)]] = F3(two ? 2 : 1);
      }
      out.push_back(std::move(v));
    }
    // next combination in lexicographic order
    int p = i - 1;
    while (p >= 0 && positions[static_cast<std::size_t>(p)] == m - i + p) --p;
    if (p < 0) break;
    ++positions[static_cast<std::size_t>(p)];
    for (int q = p + 1; q < i; ++q) {
      positions[static_cast<std::size_t>(q)] = positions[static_cast<std::size_t>(q - 1)] + 1;
    }
  }
  return out;
}

std::vector<IndexRange> split_range(IndexRange range, std::size_t parts) {
  if (parts == 0) parts = 1;
  std::vector<IndexRange> out;
  out.reserve(parts);
  const std::uint64_t size = range.size();
  const std::uint64_t base = size / parts;
  const std::uint64_t extra = size % parts;
  std::uint64_t begin = range.begin;
  for (std::size_t p = 0; p < parts; ++p) {
    const std::uint64_t len = base + (p < extra ? 1 : 0);
    out.push_back({begin, begin + len});
    begin += len;
  }
  return out;
}

}  // namespace ternmin
