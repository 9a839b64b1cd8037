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

// Exact linear algebra over Q. Vectors are rows; operators act on the right.

#include <cstddef>
#include <vector>

#include "congruon/intpoly.hpp"

namespace congruon {

class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
  static QMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  QMatrix transpose() const;
  /// Rows listed in `which`, in that order.
  QMatrix select_rows(const std::vector<std::size_t>& which) const;
  QMatrix select_cols(const std::vector<std::size_t>& which) const;
  /// [this | other]
  QMatrix hconcat(const QMatrix& other) const;
  /// [this ; other]
  QMatrix vconcat(const QMatrix& other) const;
  bool is_zero() const;

  friend QMatrix operator*(const QMatrix& a, const QMatrix& b);
  friend QMatrix operator+(const QMatrix& a, const QMatrix& b);
  friend QMatrix operator-(const QMatrix& a, const QMatrix& b);
  friend QMatrix operator*(const Rational& c, const QMatrix& a);
  friend bool operator==(const QMatrix& a, const QMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> a_;
};

struct RowEchelon {
  QMatrix rref;                     // reduced, zero rows removed
  std::vector<std::size_t> pivots;  // pivot column of each row
};

RowEchelon row_echelon(QMatrix m);
std::size_t rank(const QMatrix& m);

/// Basis, in reduced echelon form, of { v : v * m = 0 }.
QMatrix left_kernel(const QMatrix& m);

/// Monic characteristic polynomial via Hessenberg reduction; throws
/// std::logic_error if a coefficient is not integral.
IntPoly charpoly(const QMatrix& a);

/// f(A) for an integer polynomial f.
QMatrix evaluate(const IntPoly& f, const QMatrix& a);

}  // namespace congruon
