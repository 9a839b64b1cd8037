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
#include "congruon/intpoly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

#include "congruon/error.hpp"

namespace congruon {

IntPoly::IntPoly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) {
  normalize();
}

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  normalize();
}

void IntPoly::normalize() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

IntPoly IntPoly::constant(const Integer& c) { return IntPoly({c}); }

IntPoly IntPoly::monomial(const Integer& c, std::size_t k) {
  std::vector<Integer> v(k + 1);
  v[k] = c;
  return IntPoly(std::move(v));
}

IntPoly IntPoly::linear_root(const Integer& a) {
  return IntPoly(std::vector<Integer>{-a, Integer(1)});
}

Integer IntPoly::coeff(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : Integer(0);
}

const Integer& IntPoly::leading() const {
  if (coeffs_.empty()) throw std::invalid_argument("zero polynomial has no leading coefficient");
  return coeffs_.back();
}

bool IntPoly::is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

Integer IntPoly::content() const {
  Integer g = 0;
  for (const auto& c : coeffs_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPoly IntPoly::primitive_part() const {
  if (is_zero()) return {};
  Integer g = content();
  if (sgn(leading()) < 0) g = -g;
  std::vector<Integer> v(coeffs_.size());
  for (std::size_t i = 0; i < v.size(); ++i) mpz_divexact(v[i].get_mpz_t(), coeffs_[i].get_mpz_t(), g.get_mpz_t());
  return IntPoly(std::move(v));
}

IntPoly IntPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Integer> v(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) v[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
  return IntPoly(std::move(v));
}

Integer IntPoly::eval(const Integer& x) const {
  Integer r = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) r = r * x + *it;
  return r;
}

IntPoly IntPoly::shift(const Integer& t) const {
  // Horner in the ring Z[X]: r <- r * (X + t) + c.
  std::vector<Integer> r;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    r.emplace_back(0);
    for (std::size_t i = r.size() - 1; i > 0; --i) r[i] = r[i - 1] + r[i] * t;
    r[0] = r[0] * t + *it;
  }
  return IntPoly(std::move(r));
}

IntPoly IntPoly::mul_x_power(std::size_t k) const {
  if (is_zero()) return {};
  std::vector<Integer> v(k, Integer(0));
  v.insert(v.end(), coeffs_.begin(), coeffs_.end());
  return IntPoly(std::move(v));
}

IntPoly IntPoly::operator-() const {
  IntPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  normalize();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  normalize();
  return *this;
}

IntPoly& IntPoly::operator*=(const Integer& c) {
  for (auto& x : coeffs_) x *= c;
  normalize();
  return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> r(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (sgn(a.coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      mpz_addmul(r[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
  }
  return IntPoly(std::move(r));
}

IntPoly poly_mul(const IntPoly& a, const IntPoly& b) { return a * b; }

IntPoly poly_pow(const IntPoly& a, unsigned e) {
  IntPoly r = IntPoly::constant(1), base = a;
  while (e) {
    if (e & 1u) r = r * base;
    e >>= 1u;
    if (e) base = base * base;
  }
  return r;
}

std::string IntPoly::to_string() const {
  if (is_zero()) return "0";
  std::string s;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) s += ',';
    s += coeffs_[i].get_str();
  }
  return s;
}

std::string IntPoly::pretty(char var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Integer& c = coeffs_[static_cast<std::size_t>(i)];
    if (sgn(c) == 0) continue;
    Integer a = abs(c);
    if (first) {
      if (sgn(c) < 0) os << '-';
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << a.get_str();
      continue;
    }
    if (a != 1) os << a.get_str() << '*';
    os << var;
    if (i > 1) os << '^' << i;
  }
  return os.str();
}

IntPoly IntPoly::parse(std::string_view text) {
  std::vector<Integer> v;
  std::size_t pos = 0;
  if (text.empty()) throw ParseError("empty polynomial");
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view raw = text.substr(pos, comma - pos);
    while (!raw.empty() && std::isspace(static_cast<unsigned char>(raw.front()))) raw.remove_prefix(1);
    while (!raw.empty() && std::isspace(static_cast<unsigned char>(raw.back()))) raw.remove_suffix(1);
    std::string tok(raw);
    std::size_t b = 0;
    if (!tok.empty() && (tok[0] == '-' || tok[0] == '+')) b = 1;
    if (tok.size() == b || !std::all_of(tok.begin() + static_cast<long>(b), tok.end(), [](char ch) { return ch >= '0' && ch <= '9'; }))
      throw ParseError("bad coefficient '" + tok + "'");
    if (tok[0] == '+') tok.erase(0, 1);
    v.emplace_back(tok, 10);
    pos = comma + 1;
  }
  return IntPoly(std::move(v));
}

std::pair<IntPoly, IntPoly> divmod_monic(const IntPoly& a, const IntPoly& b) {
  if (!b.is_monic()) throw std::invalid_argument("divmod_monic: divisor not monic");
  std::vector<Integer> r = a.coeffs();
  const int db = b.degree();
  if (a.degree() < db) return {IntPoly(), a};
  std::vector<Integer> q(static_cast<std::size_t>(a.degree() - db + 1));
  for (int i = a.degree(); i >= db; --i) {
    Integer c = r[static_cast<std::size_t>(i)];
    if (sgn(c) == 0) continue;
    q[static_cast<std::size_t>(i - db)] = c;
    for (int j = 0; j <= db; ++j)
      mpz_submul(r[static_cast<std::size_t>(i - db + j)].get_mpz_t(), c.get_mpz_t(), b.coeffs()[static_cast<std::size_t>(j)].get_mpz_t());
  }
  return {IntPoly(std::move(q)), IntPoly(std::move(r))};
}

namespace {

// Returns false if b does not divide a over Z; otherwise stores the quotient.
bool try_divide(const IntPoly& a, const IntPoly& b, IntPoly* quot) {
  if (b.is_zero()) throw std::invalid_argument("division by zero polynomial");
  if (a.is_zero()) {
    if (quot) *quot = IntPoly();
    return true;
  }
  const int da = a.degree(), db = b.degree();
  if (da < db) return false;
  std::vector<Integer> r = a.coeffs();
  std::vector<Integer> q(static_cast<std::size_t>(da - db + 1));
  const Integer& lb = b.leading();
  for (int i = da; i >= db; --i) {
    Integer& top = r[static_cast<std::size_t>(i)];
    if (sgn(top) == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lb.get_mpz_t())) return false;
    Integer c;
    mpz_divexact(c.get_mpz_t(), top.get_mpz_t(), lb.get_mpz_t());
    q[static_cast<std::size_t>(i - db)] = c;
    for (int j = 0; j <= db; ++j)
      mpz_submul(r[static_cast<std::size_t>(i - db + j)].get_mpz_t(), c.get_mpz_t(), b.coeffs()[static_cast<std::size_t>(j)].get_mpz_t());
  }
  for (const auto& c : r)
    if (sgn(c) != 0) return false;
  if (quot) *quot = IntPoly(std::move(q));
  return true;
}

// Pseudo-remainder: lc(b)^(deg a - deg b + 1) a mod b.
IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b) {
  std::vector<Integer> r = a.coeffs();
  const int db = b.degree();
  const Integer& lb = b.leading();
  for (int i = static_cast<int>(r.size()) - 1; i >= db; --i) {
    Integer c = r[static_cast<std::size_t>(i)];
    for (auto& x : r) x *= lb;
    for (int j = 0; j <= db; ++j)
      mpz_submul(r[static_cast<std::size_t>(i - db + j)].get_mpz_t(), c.get_mpz_t(), b.coeffs()[static_cast<std::size_t>(j)].get_mpz_t());
    r.pop_back();
  }
  return IntPoly(std::move(r));
}

}  // namespace

IntPoly divide_exact(const IntPoly& a, const IntPoly& b) {
  IntPoly q;
  if (!try_divide(a, b, &q)) throw std::domain_error("divide_exact: not divisible");
  return q;
}

bool divides(const IntPoly& b, const IntPoly& a) { return try_divide(a, b, nullptr); }

IntPoly gcd_over_q(const IntPoly& p, const IntPoly& q) {
  if (p.is_zero() && q.is_zero()) throw std::invalid_argument("gcd_over_q: both inputs zero");
  IntPoly a = p.primitive_part(), b = q.primitive_part();
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    if (b.degree() == 0) return IntPoly::constant(1);
    IntPoly r = pseudo_remainder(a, b).primitive_part();
    a = std::move(b);
    b = std::move(r);
  }
  return a.primitive_part();
}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), a_(rows * cols) {}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("IntMatrix: dimension mismatch");
  IntMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Integer& x = a(i, k);
      if (sgn(x) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        mpz_addmul(c(i, j).get_mpz_t(), x.get_mpz_t(), b(k, j).get_mpz_t());
    }
  return c;
}

Integer IntMatrix::determinant() const {
  if (rows_ != cols_) throw std::invalid_argument("determinant of non-square matrix");
  const std::size_t n = rows_;
  if (n == 0) return 1;
  IntMatrix m = *this;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (sgn(m(k, k)) == 0) {
      std::size_t piv = k + 1;
      while (piv < n && sgn(m(piv, k)) == 0) ++piv;
      if (piv == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(piv, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = m(i, j) * m(k, k);
        mpz_submul(t.get_mpz_t(), m(i, k).get_mpz_t(), m(k, j).get_mpz_t());
        mpz_divexact(m(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  Integer d = m(n - 1, n - 1);
  return sign < 0 ? Integer(-d) : d;
}

IntMatrix sylvester_matrix(const IntPoly& p, const IntPoly& q) {
  if (p.is_zero() || q.is_zero()) throw std::invalid_argument("sylvester_matrix: zero polynomial");
  const std::size_t m = static_cast<std::size_t>(p.degree());
  const std::size_t n = static_cast<std::size_t>(q.degree());
  const std::size_t sz = m + n;
  IntMatrix s(sz, sz);
  // Column j holds the coefficient of X^{sz-1-j}.
  for (std::size_t i = 0; i < n; ++i)      // X^{n-1-i} P
    for (std::size_t k = 0; k <= m; ++k) s(i, sz - 1 - (k + n - 1 - i)) = p.coeffs()[k];
  for (std::size_t i = 0; i < m; ++i)      // X^{m-1-i} Q
    for (std::size_t k = 0; k <= n; ++k) s(n + i, sz - 1 - (k + m - 1 - i)) = q.coeffs()[k];
  return s;
}

Integer resultant(const IntPoly& p, const IntPoly& q) {
  if (p.is_zero() || q.is_zero()) throw std::invalid_argument("resultant: zero polynomial");
  if (p.degree() == 0 && q.degree() == 0) return 1;
  return sylvester_matrix(p, q).determinant();
}

Integer discriminant(const IntPoly& p) {
  if (p.degree() < 1) throw std::invalid_argument("discriminant: constant polynomial");
  const long d = p.degree();
  Integer r = resultant(p, p.derivative());
  Integer out;
  mpz_divexact(out.get_mpz_t(), r.get_mpz_t(), p.leading().get_mpz_t());
  if ((d * (d - 1) / 2) % 2 != 0) out = -out;
  return out;
}

namespace {

void row_combine(IntMatrix& m, std::size_t r, std::size_t i, const Integer& x, const Integer& y,
                 const Integer& u, const Integer& v) {
  // (row_r, row_i) <- (x row_r + y row_i, u row_r + v row_i)
  for (std::size_t j = 0; j < m.cols(); ++j) {
    Integer a = m(r, j), b = m(i, j);
    m(r, j) = x * a + y * b;
    m(i, j) = u * a + v * b;
  }
}

void row_axpy(IntMatrix& m, std::size_t dst, std::size_t src, const Integer& f) {
  if (sgn(f) == 0) return;
  for (std::size_t j = 0; j < m.cols(); ++j) mpz_submul(m(dst, j).get_mpz_t(), f.get_mpz_t(), m(src, j).get_mpz_t());
}

void row_swap(IntMatrix& m, std::size_t a, std::size_t b) {
  for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}

void row_negate(IntMatrix& m, std::size_t r) {
  for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) = -m(r, j);
}

}  // namespace

HermiteForm hnf_with_transform(const IntMatrix& input) {
  HermiteForm out{input, IntMatrix::identity(input.rows())};
  IntMatrix& h = out.h;
  IntMatrix& b = out.b;
  const std::size_t rows = h.rows();
  std::size_t r = 0;
  for (std::size_t j = 0; j < h.cols() && r < rows; ++j) {
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (sgn(h(i, j)) == 0) continue;
      if (sgn(h(r, j)) == 0) {
        row_swap(h, r, i);
        row_swap(b, r, i);
        continue;
      }
      if (mpz_divisible_p(h(i, j).get_mpz_t(), h(r, j).get_mpz_t())) {
        Integer f;
        mpz_divexact(f.get_mpz_t(), h(i, j).get_mpz_t(), h(r, j).get_mpz_t());
        row_axpy(h, i, r, f);
        row_axpy(b, i, r, f);
        continue;
      }
      Integer g, x, y, a = h(r, j), c = h(i, j);
      mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), a.get_mpz_t(), c.get_mpz_t());
      Integer u = -c / g, v = a / g;
      row_combine(h, r, i, x, y, u, v);
      row_combine(b, r, i, x, y, u, v);
    }
    if (sgn(h(r, j)) == 0) continue;
    if (sgn(h(r, j)) < 0) {
      row_negate(h, r);
      row_negate(b, r);
    }
    for (std::size_t i = 0; i < r; ++i) {
      Integer f;
      mpz_fdiv_q(f.get_mpz_t(), h(i, j).get_mpz_t(), h(r, j).get_mpz_t());
      row_axpy(h, i, r, f);
      row_axpy(b, i, r, f);
    }
    ++r;
  }
  return out;
}

}  // namespace congruon
