#include <doctest.h>

#include <random>

#include "congruon/qmatrix.hpp"

using namespace congruon;

namespace {

QMatrix from(std::size_t r, std::size_t c, std::initializer_list<long> v) {
  QMatrix m(r, c);
  std::size_t k = 0;
  for (long x : v) {
    m(k / c, k % c) = x;
    ++k;
  }
  return m;
}

// Leibniz-free determinant via cofactor expansion, small sizes only.
Rational det(const QMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  Rational r = 0;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<std::size_t> rows, cols;
    for (std::size_t i = 1; i < n; ++i) rows.push_back(i);
    for (std::size_t k = 0; k < n; ++k)
      if (k != j) cols.push_back(k);
    Rational minor = det(m.select_rows(rows).select_cols(cols));
    r += ((j % 2) ? -1 : 1) * m(0, j) * minor;
  }
  return r;
}

}  // namespace

TEST_CASE("row echelon and rank") {
  QMatrix m = from(3, 3, {1, 2, 3, 2, 4, 6, 1, 0, 1});
  auto e = row_echelon(m);
  CHECK(e.pivots == std::vector<std::size_t>{0, 1});
  CHECK(rank(m) == 2);
  CHECK(rank(QMatrix(2, 4)) == 0);
  CHECK(rank(QMatrix::identity(5)) == 5);
}

TEST_CASE("left kernel") {
  QMatrix m = from(3, 2, {1, 2, 2, 4, 0, 1});
  QMatrix k = left_kernel(m);
  REQUIRE(k.rows() == 1);
  CHECK((k * m).is_zero());
  CHECK(left_kernel(QMatrix::identity(3)).rows() == 0);
  CHECK(left_kernel(QMatrix(2, 3)).rows() == 2);
}

TEST_CASE("charpoly small cases") {
  CHECK(charpoly(from(3, 3, {2, 1, 0, 1, 3, 1, 0, 5, 7})) == IntPoly{-25, 35, -12, 1});
  CHECK(charpoly(QMatrix(0, 0)) == IntPoly{1});
  CHECK(charpoly(from(2, 2, {0, 1, 1, 0})) == IntPoly{-1, 0, 1});
  QMatrix half(2, 2);
  half(0, 1) = Rational(1, 2);
  half(1, 0) = 2;
  CHECK(charpoly(half) == IntPoly{-1, 0, 1});
  half(0, 0) = Rational(1, 3);
  CHECK_THROWS_AS(charpoly(half), std::logic_error);
}

TEST_CASE("charpoly against determinant expansion") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> e(-5, 5);
  for (int t = 0; t < 40; ++t) {
    std::size_t n = 1 + static_cast<std::size_t>(t % 5);
    QMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) a(i, j) = (t % 2 && i > j + 1) ? 0 : e(rng);
    IntPoly cp = charpoly(a);
    for (long x : {-2L, 0L, 3L}) {
      QMatrix xi = Rational(x) * QMatrix::identity(n) - a;
      CHECK(Rational(cp.eval(x)) == det(xi));
    }
    // Cayley-Hamilton.
    CHECK(evaluate(cp, a).is_zero());
  }
}

TEST_CASE("concatenation and products") {
  QMatrix a = from(2, 2, {1, 2, 3, 4});
  QMatrix b = from(2, 1, {5, 6});
  CHECK(a * b == from(2, 1, {17, 39}));
  CHECK(a.hconcat(b).cols() == 3);
  CHECK(a.vconcat(a).rows() == 4);
  CHECK(a.transpose() == from(2, 2, {1, 3, 2, 4}));
  CHECK(a + a == Rational(2) * a);
  CHECK((a - a).is_zero());
}
