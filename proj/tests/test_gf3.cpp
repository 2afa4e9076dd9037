#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ternmin/errors.hpp"
#include "ternmin/gf3.hpp"

#include <random>
#include <set>

using namespace ternmin;

TEST_CASE("field arithmetic") {
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) {
      CHECK((F3(a) + F3(b)).value() == (a + b) % 3);
      CHECK((F3(a) * F3(b)).value() == (a * b) % 3);
      CHECK((F3(a) - F3(b)) + F3(b) == F3(a));
    }
    CHECK(F3(a) + (-F3(a)) == F3(0));
  }
  CHECK(F3(-1) == F3(2));
  CHECK(F3(7).value() == 1);
}

TEST_CASE("inner product") {
  CHECK(inner_product({0, 0, 0}, {1, 2, 0}) == F3(0));
  CHECK(inner_product({1, 2}, {2, 2}) == F3(0));
  CHECK(inner_product({1, 1, 1}, {1, 1, 1}) == F3(0));
  CHECK(inner_product({1, 2, 1}, {1, 0, 0}) == F3(1));
  CHECK_THROWS_AS(inner_product({1, 2}, {1, 2, 0}), InvalidInput);
}

TEST_CASE("inner product is bilinear and symmetric") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<std::uint64_t> pick(0, space_size(6) - 1);
  for (int trial = 0; trial < 200; ++trial) {
    const auto u = vector_at(6, pick(rng));
    const auto v = vector_at(6, pick(rng));
    const auto w = vector_at(6, pick(rng));
    CHECK(inner_product(u, v) == inner_product(v, u));
    CHECK(inner_product(u + v, w) == inner_product(u, w) + inner_product(v, w));
    CHECK(inner_product(-u, w) == -inner_product(u, w));
  }
}

TEST_CASE("weight") {
  CHECK(weight({0, 0, 0}) == 0);
  CHECK(weight({0, 1, 2}) == 2);
  CHECK(weight({1, 1, 1, 1, 1, 1, 1}) == 7);
  CHECK(F3Vector({2, 0, 1}).support() == std::vector<int>{0, 2});
  // negation preserves weight
  CHECK(weight(-F3Vector{2, 0, 1, 1}) == 3);
}

TEST_CASE("canonical indexing") {
  CHECK(coordinate_vector(2, 1) == F3Vector{0, 1});
  CHECK(coordinate_vector(2, 3) == F3Vector{1, 0});
  CHECK(coordinate_vector(2, 8) == F3Vector{2, 2});
  CHECK_THROWS_AS(coordinate_vector(2, 0), InvalidInput);
  CHECK_THROWS_AS(coordinate_vector(2, 9), InvalidInput);

  for (std::uint64_t i = 0; i < space_size(5); ++i) CHECK(index_of(vector_at(5, i)) == i);
  CHECK(space_size(9) == 19683);
}

TEST_CASE("enumerate_by_weight") {
  CHECK(enumerate_by_weight(5, 0).size() == 1);
  CHECK(enumerate_by_weight(5, 0).front() == F3Vector::zero(5));
  CHECK(enumerate_by_weight(5, 1).size() == 10);
  CHECK(enumerate_by_weight(5, 2).size() == 40);

  // classes partition the space without repeats
  std::set<std::uint64_t> seen;
  for (int i = 0; i <= 6; ++i) {
    for (const auto& v : enumerate_by_weight(6, i)) {
      CHECK(v.weight() == i);
      CHECK(seen.insert(index_of(v)).second);
    }
  }
  CHECK(seen.size() == space_size(6));
}

TEST_CASE("split_range covers the range in order") {
  for (std::size_t parts : {1U, 2U, 3U, 7U, 100U}) {
    const auto chunks = split_range({5, 105}, parts);
    std::uint64_t next = 5;
    for (const auto& c : chunks) {
      CHECK(c.begin == next);
      next = c.end;
    }
    CHECK(next == 105);
  }
}
