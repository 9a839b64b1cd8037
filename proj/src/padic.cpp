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
#include "congruon/padic.hpp"

#include <algorithm>
#include <stdexcept>

namespace congruon {

std::optional<long> val(const Integer& ell, const Integer& m) {
  if (ell < 2) throw std::invalid_argument("val: modulus must be at least 2");
  if (sgn(m) == 0) return std::nullopt;
  Integer q = m;
  long v = 0;
  if (ell == 2) return static_cast<long>(mpz_scan1(q.get_mpz_t(), 0));
  while (mpz_divisible_p(q.get_mpz_t(), ell.get_mpz_t())) {
    mpz_divexact(q.get_mpz_t(), q.get_mpz_t(), ell.get_mpz_t());
    ++v;
  }
  return v;
}

long val_finite(const Integer& ell, const Integer& m) {
  auto v = val(ell, m);
  if (!v) throw std::domain_error("val_finite: valuation of zero");
  return *v;
}

long gamma(long e, long n) {
  if (e < 1 || n < 1) throw std::invalid_argument("gamma: arguments must be positive");
  return (n - 1) * e + 1;
}

namespace {

bool miller_rabin_64(const Integer& n) {
  static const unsigned long bases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  Integer d = n - 1;
  unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
  mpz_fdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);
  Integer x, nm1 = n - 1;
  for (unsigned long a : bases) {
    if (n == a) return true;
    Integer base(a);
    mpz_powm(x.get_mpz_t(), base.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    if (x == 1 || x == nm1) continue;
    bool composite = true;
    for (unsigned long r = 1; r < s; ++r) {
      x = x * x % n;
      if (x == nm1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

// Brent's variant of Pollard rho; returns a nontrivial factor of composite n.
Integer pollard_rho(const Integer& n) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  for (unsigned long c = 1;; ++c) {
    Integer y = 2, x, g = 1, q = 1, ys;
    unsigned long r = 1;
    const unsigned long m = 128;
    auto f = [&](const Integer& v) { return Integer((v * v + c) % n); };
    do {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = f(y);
      unsigned long k = 0;
      do {
        ys = y;
        for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
          y = f(y);
          q = q * abs(x - y) % n;
        }
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        k += m;
      } while (k < r && g == 1);
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        ys = f(ys);
        Integer t = abs(x - ys);
        mpz_gcd(g.get_mpz_t(), t.get_mpz_t(), n.get_mpz_t());
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void factor_into(Integer n, std::vector<Integer>& primes) {
  if (n == 1) return;
  if (is_prime(n)) {
    primes.push_back(n);
    return;
  }
  Integer d = pollard_rho(n);
  factor_into(d, primes);
  factor_into(n / d, primes);
}

}  // namespace

bool is_prime(const Integer& n) {
  if (n < 2) return false;
  for (unsigned long p : {2UL, 3UL, 5UL, 7UL, 11UL, 13UL}) {
    if (n == p) return true;
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
  }
  if (mpz_sizeinbase(n.get_mpz_t(), 2) <= 64) return miller_rabin_64(n);
  return mpz_probab_prime_p(n.get_mpz_t(), 30) > 0;
}

std::vector<std::pair<Integer, long>> factor_integer(const Integer& input) {
  if (sgn(input) == 0) throw std::invalid_argument("factor_integer: zero");
  Integer n = abs(input);
  std::vector<Integer> primes;
  for (unsigned long p = 2; p < 10000 && n > 1; p += (p == 2 ? 1 : 2)) {
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      primes.emplace_back(p);
      mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
    }
  }
  factor_into(n, primes);
  std::sort(primes.begin(), primes.end());
  std::vector<std::pair<Integer, long>> out;
  for (const auto& p : primes) {
    if (!out.empty() && out.back().first == p)
      ++out.back().second;
    else
      out.emplace_back(p, 1);
  }
  return out;
}

std::vector<Integer> prime_divisors(const Integer& n) {
  std::vector<Integer> out;
  for (auto& [p, e] : factor_integer(n)) out.push_back(p);
  return out;
}

PrimePower PrimePower::make(Integer ell, long n) {
  if (!is_prime(ell)) throw std::invalid_argument("PrimePower: " + ell.get_str() + " is not prime");
  if (n < 0) throw std::invalid_argument("PrimePower: negative exponent");
  return PrimePower{std::move(ell), n};
}

Integer PrimePower::value() const {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), ell.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

std::optional<Rational> NewtonPolygon::max_slope() const {
  if (segments.empty()) return std::nullopt;
  return segments.front().slope;
}

std::vector<Rational> NewtonPolygon::slope_multiset() const {
  std::vector<Rational> out;
  for (const auto& s : segments)
    for (long i = 0; i < s.length; ++i) out.push_back(s.slope);
  return out;
}

NewtonPolygon newton_polygon(const Integer& ell, const IntPoly& f) {
  if (f.is_zero()) throw std::invalid_argument("newton_polygon: zero polynomial");
  NewtonPolygon np;
  std::vector<std::pair<long, long>> pts;
  const auto& c = f.coeffs();
  for (std::size_t i = 0; i < c.size(); ++i)
    if (sgn(c[i]) != 0) pts.emplace_back(static_cast<long>(i), val_finite(ell, c[i]));
  np.infinite_roots = pts.front().first;
  // Monotone chain lower hull; points are already sorted by index.
  std::vector<std::pair<long, long>> hull;
  for (const auto& pt : pts) {
    while (hull.size() >= 2) {
      const auto& a = hull[hull.size() - 2];
      const auto& b = hull.back();
      // Drop b unless it lies strictly below segment a -> pt.
      Integer lhs = Integer(b.second - a.second) * (pt.first - a.first);
      Integer rhs = Integer(pt.second - a.second) * (b.first - a.first);
      if (lhs >= rhs)
        hull.pop_back();
      else
        break;
    }
    hull.push_back(pt);
  }
  np.vertices = hull;
  for (std::size_t i = 0; i + 1 < hull.size(); ++i) {
    long len = hull[i + 1].first - hull[i].first;
    Rational s(Integer(hull[i].second - hull[i + 1].second), Integer(len));
    s.canonicalize();
    np.segments.push_back({s, len});
  }
  return np;
}

long exponent_from_slope(const Rational& s) {
  if (sgn(s) < 0) throw std::invalid_argument("exponent_from_slope: negative slope");
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), s.get_num_mpz_t(), s.get_den_mpz_t());
  return q.get_si();
}

}  // namespace congruon
