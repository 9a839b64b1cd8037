/* Copyright (C) 2026 The congruon authors.
 * This program is Licensed under the Apache License, Version 2.0
 * (the "License"); you may not use this file except in compliance
 * with the License. You may obtain a copy of the License at
 *   http://www.apache.org/licenses/LICENSE-2.0
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License. See accompanying LICENSE file.
 */
#pragma once

// Dense univariate polynomials and matrices over the integers.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace congruon {

using Integer = mpz_class;
using Rational = mpq_class;

/// Polynomial with arbitrary-precision integer coefficients, stored in
/// ascending degree order. The zero polynomial has no coefficients; every
/// other polynomial has a nonzero last coefficient.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Integer> coeffs);
  IntPoly(std::initializer_list<long> coeffs);

  static IntPoly constant(const Integer& c);
  static IntPoly monomial(const Integer& c, std::size_t k);
  /// X - a
  static IntPoly linear_root(const Integer& a);

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Integer>& coeffs() const { return coeffs_; }
  /// Coefficient of X^i, zero past the degree.
  Integer coeff(std::size_t i) const;
  const Integer& leading() const;
  bool is_monic() const;

  Integer content() const;
  IntPoly primitive_part() const;
  IntPoly derivative() const;
  Integer eval(const Integer& x) const;
  /// P(X + t)
  IntPoly shift(const Integer& t) const;
  /// P(X) -> X^k P(X)
  IntPoly mul_x_power(std::size_t k) const;

  IntPoly operator-() const;
  IntPoly& operator+=(const IntPoly& o);
  IntPoly& operator-=(const IntPoly& o);
  IntPoly& operator*=(const Integer& c);

  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(IntPoly a, const Integer& c) { return a *= c; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend bool operator==(const IntPoly& a, const IntPoly& b) {
    return a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const IntPoly& a, const IntPoly& b) {
    return !(a == b);
  }

  /// Comma-separated ascending coefficients, "0" for zero.
  std::string to_string() const;
  /// Conventional descending notation, e.g. "X^2 - 48*X - 720".
  std::string pretty(char var = 'X') const;
  /// Inverse of to_string(); throws ParseError.
  static IntPoly parse(std::string_view text);

 private:
  void normalize();
  std::vector<Integer> coeffs_;
};

IntPoly poly_mul(const IntPoly& a, const IntPoly& b);
IntPoly poly_pow(const IntPoly& a, unsigned e);

/// Exact division over Z; throws std::domain_error if b does not divide a.
IntPoly divide_exact(const IntPoly& a, const IntPoly& b);
/// True iff b divides a in Z[X].
bool divides(const IntPoly& b, const IntPoly& a);
/// Quotient and remainder by a monic divisor.
std::pair<IntPoly, IntPoly> divmod_monic(const IntPoly& a, const IntPoly& b);

/// Primitive generator, positive leading coefficient, of the gcd over Q.
IntPoly gcd_over_q(const IntPoly& p, const IntPoly& q);

/// Row-major rectangular integer matrix.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Integer& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const {
    return a_[i * cols_ + j];
  }

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

  /// Fraction-free (Bareiss) determinant of a square matrix.
  Integer determinant() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Integer> a_;
};

/// Sylvester matrix with rows X^{n-1}P, ..., P, X^{m-1}Q, ..., Q over the
/// monomials X^{m+n-1}, ..., 1 (m = deg P, n = deg Q).
IntMatrix sylvester_matrix(const IntPoly& p, const IntPoly& q);

/// Determinant of the Sylvester matrix; throws std::invalid_argument on a
/// zero input.
Integer resultant(const IntPoly& p, const IntPoly& q);

/// (-1)^{d(d-1)/2} Res(P, P') / lc(P); throws std::invalid_argument for
/// constants.
Integer discriminant(const IntPoly& p);

struct HermiteForm {
  IntMatrix h;  // row echelon, positive pivots, reduced above pivots
  IntMatrix b;  // unimodular, b * m == h
};

/// Row Hermite normal form with the accumulated transformation.
HermiteForm hnf_with_transform(const IntMatrix& m);

}  // namespace congruon
