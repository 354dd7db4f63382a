#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "fanostab/matrix.hpp"

using namespace fanostab;

namespace {

IntMatrix from_rows(const std::vector<std::vector<int>>& rows) {
  IntMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      m.at(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  return m;
}

}  // namespace

TEST_CASE("determinant of small matrices") {
  CHECK(determinant(IntMatrix::identity(4)) == Integer(1));
  CHECK(determinant(from_rows({{2}})) == Integer(2));
  CHECK(determinant(from_rows({{1, 2}, {3, 4}})) == Integer(-2));
  CHECK(determinant(from_rows({{2, 0, 1}, {1, 1, 0}, {0, 3, 1}})) == Integer(5));
  CHECK(determinant(from_rows({{1, 2}, {2, 4}})) == Integer(0));
  // zero pivot forces a row swap
  CHECK(determinant(from_rows({{0, 1}, {1, 0}})) == Integer(-1));
  CHECK(determinant(from_rows({{0, 0, 1}, {0, 1, 0}, {1, 0, 0}})) == Integer(-1));
}

TEST_CASE("determinant is multiplicative on random products") {
  std::mt19937 rng(20240816);
  std::uniform_int_distribution<int> coeff(-4, 4);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 4);
    IntMatrix a(n, n), b(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        a.at(i, j) = coeff(rng);
        b.at(i, j) = coeff(rng);
      }
    IntMatrix ab(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Integer s = 0;
        for (int k = 0; k < n; ++k) s += a.at(i, k) * b.at(k, j);
        ab.at(i, j) = s;
      }
    CHECK(determinant(ab) == determinant(a) * determinant(b));
  }
}

TEST_CASE("unimodular inverse round-trips") {
  const IntMatrix m = from_rows({{1, 1, 0}, {0, 1, 2}, {0, 0, 1}});
  REQUIRE(determinant(m) == Integer(1));
  const IntMatrix inv = inverse_unimodular(m);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Integer s = 0;
      for (int k = 0; k < 3; ++k) s += m.at(i, k) * inv.at(k, j);
      CHECK(s == Integer(i == j ? 1 : 0));
    }
}

TEST_CASE("inverse of a determinant -1 matrix is integral") {
  const IntMatrix m = from_rows({{0, 1}, {1, 0}});
  const IntMatrix inv = inverse_unimodular(m);
  CHECK(inv.at(0, 1) == Integer(1));
  CHECK(inv.at(1, 0) == Integer(1));
  CHECK(inv.at(0, 0) == Integer(0));
}

TEST_CASE("non-unimodular matrices are rejected") {
  CHECK_THROWS_AS(inverse_unimodular(from_rows({{2, 0}, {0, 1}})), input_error);
  CHECK_THROWS_AS(inverse_unimodular(from_rows({{1, 2}, {2, 4}})), input_error);
}

TEST_CASE("matrix-vector multiply") {
  const IntMatrix m = from_rows({{1, -1, 0}, {0, 1, 0}, {2, 0, 3}});
  const std::vector<Integer> v{Integer(1), Integer(2), Integer(3)};
  const std::vector<Integer> mv = multiply(m, v);
  REQUIRE(mv.size() == 3);
  CHECK(mv[0] == Integer(-1));
  CHECK(mv[1] == Integer(2));
  CHECK(mv[2] == Integer(11));
}
