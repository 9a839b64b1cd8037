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
#include "congruon/qmatrix.hpp"

#include <stdexcept>

namespace congruon {

QMatrix QMatrix::identity(std::size_t n) {
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

QMatrix QMatrix::transpose() const {
  QMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

QMatrix QMatrix::select_rows(const std::vector<std::size_t>& which) const {
  QMatrix r(which.size(), cols_);
  for (std::size_t i = 0; i < which.size(); ++i)
    for (std::size_t j = 0; j < cols_; ++j) r(i, j) = (*this)(which[i], j);
  return r;
}

QMatrix QMatrix::select_cols(const std::vector<std::size_t>& which) const {
  QMatrix r(rows_, which.size());
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < which.size(); ++j) r(i, j) = (*this)(i, which[j]);
  return r;
}

QMatrix QMatrix::hconcat(const QMatrix& o) const {
  if (rows_ != o.rows_) throw std::invalid_argument("hconcat: row mismatch");
  QMatrix r(rows_, cols_ + o.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) r(i, j) = (*this)(i, j);
    for (std::size_t j = 0; j < o.cols_; ++j) r(i, cols_ + j) = o(i, j);
  }
  return r;
}

QMatrix QMatrix::vconcat(const QMatrix& o) const {
  if (cols_ != o.cols_) throw std::invalid_argument("vconcat: column mismatch");
  QMatrix r(rows_ + o.rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r(i, j) = (*this)(i, j);
  for (std::size_t i = 0; i < o.rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r(rows_ + i, j) = o(i, j);
  return r;
}

bool QMatrix::is_zero() const {
  for (const auto& x : a_)
    if (sgn(x) != 0) return false;
  return true;
}

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("QMatrix: dimension mismatch");
  QMatrix c(a.rows_, b.cols_);
  Rational t;
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& x = a(i, k);
      if (sgn(x) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Rational& y = b(k, j);
        if (sgn(y) == 0) continue;
        mpq_mul(t.get_mpq_t(), x.get_mpq_t(), y.get_mpq_t());
        mpq_add(c(i, j).get_mpq_t(), c(i, j).get_mpq_t(), t.get_mpq_t());
      }
    }
  return c;
}

QMatrix operator+(const QMatrix& a, const QMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("QMatrix: dimension mismatch");
  QMatrix c = a;
  for (std::size_t i = 0; i < c.a_.size(); ++i) c.a_[i] += b.a_[i];
  return c;
}

QMatrix operator-(const QMatrix& a, const QMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("QMatrix: dimension mismatch");
  QMatrix c = a;
  for (std::size_t i = 0; i < c.a_.size(); ++i) c.a_[i] -= b.a_[i];
  return c;
}

QMatrix operator*(const Rational& s, const QMatrix& a) {
  QMatrix c = a;
  for (auto& x : c.a_) x *= s;
  return c;
}

RowEchelon row_echelon(QMatrix m) {
  RowEchelon out;
  const std::size_t rows = m.rows(), cols = m.cols();
  std::size_t r = 0;
  Rational t;
  for (std::size_t j = 0; j < cols && r < rows; ++j) {
    std::size_t piv = r;
    while (piv < rows && sgn(m(piv, j)) == 0) ++piv;
    if (piv == rows) continue;
    if (piv != r)
      for (std::size_t k = 0; k < cols; ++k) std::swap(m(r, k), m(piv, k));
    Rational inv = 1 / m(r, j);
    for (std::size_t k = j; k < cols; ++k)
      if (sgn(m(r, k)) != 0) m(r, k) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || sgn(m(i, j)) == 0) continue;
      Rational f = m(i, j);
      for (std::size_t k = j; k < cols; ++k) {
        if (sgn(m(r, k)) == 0) continue;
        mpq_mul(t.get_mpq_t(), f.get_mpq_t(), m(r, k).get_mpq_t());
        mpq_sub(m(i, k).get_mpq_t(), m(i, k).get_mpq_t(), t.get_mpq_t());
      }
    }
    out.pivots.push_back(j);
    ++r;
  }
  std::vector<std::size_t> keep(r);
  for (std::size_t i = 0; i < r; ++i) keep[i] = i;
  out.rref = m.select_rows(keep);
  return out;
}

std::size_t rank(const QMatrix& m) { return row_echelon(m).pivots.size(); }

QMatrix left_kernel(const QMatrix& m) {
  // v m = 0  <=>  m^T v^T = 0.
  RowEchelon e = row_echelon(m.transpose());
  const std::size_t n = m.rows();
  std::vector<bool> is_pivot(n, false);
  for (std::size_t p : e.pivots) is_pivot[p] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t j = 0; j < n; ++j)
    if (!is_pivot[j]) free_cols.push_back(j);
  QMatrix k(free_cols.size(), n);
  for (std::size_t f = 0; f < free_cols.size(); ++f) {
    k(f, free_cols[f]) = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) k(f, e.pivots[r]) = -e.rref(r, free_cols[f]);
  }
  return row_echelon(std::move(k)).rref;
}

IntPoly charpoly(const QMatrix& input) {
  if (input.rows() != input.cols()) throw std::invalid_argument("charpoly: non-square matrix");
  const std::size_t n = input.rows();
  QMatrix h = input;
  Rational t;
  for (std::size_t j = 0; j + 2 < n; ++j) {
    std::size_t i = j + 1;
    while (i < n && sgn(h(i, j)) == 0) ++i;
    if (i == n) continue;
    if (i != j + 1) {
      for (std::size_t k = 0; k < n; ++k) std::swap(h(i, k), h(j + 1, k));
      for (std::size_t k = 0; k < n; ++k) std::swap(h(k, i), h(k, j + 1));
    }
    Rational inv = 1 / h(j + 1, j);
    for (std::size_t r = j + 2; r < n; ++r) {
      if (sgn(h(r, j)) == 0) continue;
      Rational u = h(r, j) * inv;
      for (std::size_t k = 0; k < n; ++k) {
        if (sgn(h(j + 1, k)) == 0) continue;
        mpq_mul(t.get_mpq_t(), u.get_mpq_t(), h(j + 1, k).get_mpq_t());
        mpq_sub(h(r, k).get_mpq_t(), h(r, k).get_mpq_t(), t.get_mpq_t());
      }
      for (std::size_t k = 0; k < n; ++k) {
        if (sgn(h(k, r)) == 0) continue;
        mpq_mul(t.get_mpq_t(), u.get_mpq_t(), h(k, r).get_mpq_t());
        mpq_add(h(k, j + 1).get_mpq_t(), h(k, j + 1).get_mpq_t(), t.get_mpq_t());
      }
    }
  }
  // p[m] = charpoly of the leading m x m block.
  std::vector<std::vector<Rational>> p(n + 1);
  p[0] = {Rational(1)};
  for (std::size_t m = 1; m <= n; ++m) {
    std::vector<Rational> cur(m + 1);
    const auto& prev = p[m - 1];
    for (std::size_t k = 0; k < prev.size(); ++k) {
      cur[k + 1] += prev[k];
      cur[k] -= h(m - 1, m - 1) * prev[k];
    }
    Rational prod = 1;
    for (std::size_t i = 1; i < m; ++i) {
      prod *= h(m - i, m - i - 1);
      if (sgn(prod) == 0) break;
      Rational f = prod * h(m - i - 1, m - 1);
      if (sgn(f) == 0) continue;
      const auto& q = p[m - i - 1];
      for (std::size_t k = 0; k < q.size(); ++k) cur[k] -= f * q[k];
    }
    p[m] = std::move(cur);
  }
  std::vector<Integer> out(n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    if (p[n][k].get_den() != 1) throw std::logic_error("charpoly: non-integral coefficient");
    out[k] = p[n][k].get_num();
  }
  return IntPoly(std::move(out));
}

QMatrix evaluate(const IntPoly& f, const QMatrix& a) {
  const std::size_t n = a.rows();
  QMatrix r(n, n);
  for (int i = f.degree(); i >= 0; --i) {
    r = r * a;
    const Integer& c = f.coeffs()[static_cast<std::size_t>(i)];
    if (sgn(c) != 0)
      for (std::size_t k = 0; k < n; ++k) r(k, k) += Rational(c);
  }
  return r;
}

}  // namespace congruon
