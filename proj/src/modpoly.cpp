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
#include "congruon/modpoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace congruon {

namespace {

Integer reduce(const Integer& a, const Integer& m) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

Integer inverse(const Integer& a, const Integer& m) {
  Integer r;
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
    throw std::domain_error("ModPoly: leading coefficient not invertible");
  return r;
}

void check_same(const ModPoly& a, const ModPoly& b) {
  if (a.modulus() != b.modulus()) throw std::invalid_argument("ModPoly: modulus mismatch");
}

}  // namespace

ModPoly::ModPoly(Integer modulus, std::vector<Integer> coeffs) : m_(std::move(modulus)), c_(std::move(coeffs)) {
  for (auto& x : c_) x = reduce(x, m_);
  normalize();
}

ModPoly::ModPoly(const Integer& modulus, const IntPoly& p) : ModPoly(modulus, p.coeffs()) {}

void ModPoly::normalize() {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

ModPoly ModPoly::operator+(const ModPoly& o) const {
  check_same(*this, o);
  std::vector<Integer> r(std::max(c_.size(), o.c_.size()));
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (i < c_.size()) r[i] += c_[i];
    if (i < o.c_.size()) r[i] += o.c_[i];
  }
  return ModPoly(m_, std::move(r));
}

ModPoly ModPoly::operator-(const ModPoly& o) const {
  check_same(*this, o);
  std::vector<Integer> r(std::max(c_.size(), o.c_.size()));
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (i < c_.size()) r[i] += c_[i];
    if (i < o.c_.size()) r[i] -= o.c_[i];
  }
  return ModPoly(m_, std::move(r));
}

ModPoly ModPoly::operator*(const ModPoly& o) const {
  check_same(*this, o);
  if (is_zero() || o.is_zero()) return ModPoly::zero(m_);
  std::vector<Integer> r(c_.size() + o.c_.size() - 1);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (sgn(c_[i]) == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) mpz_addmul(r[i + j].get_mpz_t(), c_[i].get_mpz_t(), o.c_[j].get_mpz_t());
  }
  return ModPoly(m_, std::move(r));
}

ModPoly ModPoly::scaled(const Integer& c) const {
  std::vector<Integer> r = c_;
  for (auto& x : r) x *= c;
  return ModPoly(m_, std::move(r));
}

ModPoly ModPoly::monic() const {
  if (is_zero()) return *this;
  return scaled(inverse(leading(), m_));
}

ModPoly ModPoly::derivative() const {
  if (c_.size() <= 1) return ModPoly::zero(m_);
  std::vector<Integer> r(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * static_cast<unsigned long>(i);
  return ModPoly(m_, std::move(r));
}

IntPoly ModPoly::symmetric_lift() const {
  std::vector<Integer> r = c_;
  Integer half = m_ / 2;
  for (auto& x : r)
    if (x > half) x -= m_;
  return IntPoly(std::move(r));
}

std::pair<ModPoly, ModPoly> divmod(const ModPoly& a, const ModPoly& b) {
  check_same(a, b);
  if (b.is_zero()) throw std::invalid_argument("ModPoly: division by zero");
  const Integer& m = a.modulus();
  std::vector<Integer> r = a.coeffs();
  const int db = b.degree();
  if (a.degree() < db) return {ModPoly::zero(m), a};
  Integer inv = inverse(b.leading(), m);
  std::vector<Integer> q(static_cast<std::size_t>(a.degree() - db + 1));
  for (int i = a.degree(); i >= db; --i) {
    Integer c = reduce(r[static_cast<std::size_t>(i)] * inv, m);
    if (sgn(c) == 0) continue;
    q[static_cast<std::size_t>(i - db)] = c;
    for (int j = 0; j <= db; ++j) {
      Integer& t = r[static_cast<std::size_t>(i - db + j)];
      mpz_submul(t.get_mpz_t(), c.get_mpz_t(), b.coeffs()[static_cast<std::size_t>(j)].get_mpz_t());
      t = reduce(t, m);
    }
  }
  return {ModPoly(m, std::move(q)), ModPoly(m, std::move(r))};
}

ModPoly mod(const ModPoly& a, const ModPoly& b) { return divmod(a, b).second; }

ModPoly powmod(const ModPoly& base, const Integer& e, const ModPoly& f) {
  ModPoly result = ModPoly::constant(base.modulus(), 1);
  if (f.degree() == 0) return ModPoly::zero(base.modulus());
  ModPoly b = mod(base, f);
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = mod(result * result, f);
    if (mpz_tstbit(e.get_mpz_t(), i)) result = mod(result * b, f);
  }
  return result;
}

ModPoly gcd(const ModPoly& a, const ModPoly& b) {
  ModPoly x = a, y = b;
  while (!y.is_zero()) {
    ModPoly r = mod(x, y);
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

ModXgcd xgcd(const ModPoly& a, const ModPoly& b) {
  const Integer& m = a.modulus();
  ModPoly r0 = a, r1 = b;
  ModPoly s0 = ModPoly::constant(m, 1), s1 = ModPoly::zero(m);
  ModPoly t0 = ModPoly::zero(m), t1 = ModPoly::constant(m, 1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    ModPoly s2 = s0 - q * s1, t2 = t0 - q * t1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  Integer inv = inverse(r0.leading(), m);
  return {r0.scaled(inv), s0.scaled(inv), t0.scaled(inv)};
}

bool is_squarefree_mod(const IntPoly& p, const Integer& prime) {
  ModPoly f(prime, p);
  if (f.is_zero()) return false;
  if (f.degree() <= 0) return true;
  ModPoly d = f.derivative();
  if (d.is_zero()) return false;
  return gcd(f, d).degree() == 0;
}

bool coprime_mod(const IntPoly& a, const IntPoly& b, const Integer& prime) {
  ModPoly fa(prime, a), fb(prime, b);
  if (fa.is_zero() || fb.is_zero()) {
    // gcd(0, g) = g: coprime only if the other reduction is a unit.
    const ModPoly& other = fa.is_zero() ? fb : fa;
    return !other.is_zero() && other.degree() == 0;
  }
  return gcd(fa, fb).degree() == 0;
}

std::vector<std::pair<ModPoly, int>> distinct_degree_factor(const ModPoly& input) {
  const Integer& p = input.modulus();
  std::vector<std::pair<ModPoly, int>> out;
  ModPoly f = input.monic();
  ModPoly x = ModPoly::x(p);
  ModPoly h = mod(x, f);
  for (int d = 1; 2 * d <= f.degree(); ++d) {
    h = powmod(h, p, f);
    ModPoly g = gcd(h - x, f);
    if (g.degree() > 0) {
      out.emplace_back(g, d);
      f = divmod(f, g).first;
      h = mod(h, f);
    }
  }
  if (f.degree() > 0) out.emplace_back(f, f.degree());
  return out;
}

namespace {

void equal_degree_split(const ModPoly& f, int d, std::mt19937_64& rng, std::vector<ModPoly>& out) {
  if (f.degree() == d) {
    out.push_back(f);
    return;
  }
  const Integer& p = f.modulus();
  Integer e;
  mpz_pow_ui(e.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(d));
  e = (e - 1) / 2;
  for (;;) {
    std::vector<Integer> a(static_cast<std::size_t>(f.degree()));
    for (auto& c : a) c = Integer(static_cast<unsigned long>(rng()));
    ModPoly ap(p, std::move(a));
    if (ap.degree() < 1) continue;
    ModPoly b = powmod(ap, e, f) - ModPoly::constant(p, 1);
    ModPoly g = gcd(b, f);
    if (g.degree() > 0 && g.degree() < f.degree()) {
      equal_degree_split(g, d, rng, out);
      equal_degree_split(divmod(f, g).first, d, rng, out);
      return;
    }
  }
}

bool poly_less(const ModPoly& a, const ModPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return std::lexicographical_compare(a.coeffs().rbegin(), a.coeffs().rend(), b.coeffs().rbegin(), b.coeffs().rend());
}

// (squarefree part, multiplicity) pairs over a prime field.
void squarefree_decomposition(const ModPoly& input, int mult, std::vector<std::pair<ModPoly, int>>& out) {
  const Integer& p = input.modulus();
  ModPoly f = input.monic();
  if (f.degree() <= 0) return;
  ModPoly c = gcd(f, f.derivative());
  ModPoly w = divmod(f, c).first;
  int i = 1;
  while (!w.is_one()) {
    ModPoly y = gcd(w, c);
    ModPoly fac = divmod(w, y).first;
    if (fac.degree() > 0) out.emplace_back(fac, i * mult);
    w = y;
    c = divmod(c, y).first;
    ++i;
  }
  if (c.degree() > 0) {
    const unsigned long pu = p.get_ui();
    std::vector<Integer> root;
    for (std::size_t k = 0; k < c.coeffs().size(); k += pu) root.push_back(c.coeffs()[k]);
    squarefree_decomposition(ModPoly(p, std::move(root)), mult * static_cast<int>(pu), out);
  }
}

}  // namespace

std::vector<ModPoly> factor_squarefree_mod(const ModPoly& f, std::mt19937_64& rng) {
  if (mpz_even_p(f.modulus().get_mpz_t())) throw std::invalid_argument("factor_squarefree_mod: odd prime required");
  std::vector<ModPoly> out;
  for (auto& [g, d] : distinct_degree_factor(f)) equal_degree_split(g, d, rng, out);
  std::sort(out.begin(), out.end(), poly_less);
  return out;
}

std::vector<int> factorization_pattern_mod(const IntPoly& p, const Integer& prime) {
  ModPoly f(prime, p);
  if (f.degree() < 1) return {};
  std::vector<std::pair<ModPoly, int>> sqf;
  squarefree_decomposition(f, 1, sqf);
  std::vector<int> degs;
  for (auto& [g, mult] : sqf)
    for (auto& [h, d] : distinct_degree_factor(g))
      for (int k = 0; k < h.degree() / d; ++k)
        for (int m = 0; m < mult; ++m) degs.push_back(d);
  std::sort(degs.begin(), degs.end());
  return degs;
}

}  // namespace congruon
