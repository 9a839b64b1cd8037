// Independent reference computations shared by the unit tests.
#pragma once

#include <random>
#include <vector>

#include "congruon/intpoly.hpp"

namespace oracle {

using congruon::Integer;
using congruon::IntPoly;
using congruon::Rational;

inline IntPoly from_roots(const std::vector<long>& roots) {
  IntPoly p{1};
  for (long r : roots) p = congruon::poly_mul(p, IntPoly{-r, 1});
  return p;
}

// Resultant by the Euclidean recursion over Q, in the convention
// Res(P, Q) = lc(P)^deg Q * prod over roots a of P of Q(a).
inline Rational euclid_resultant(std::vector<Rational> a, std::vector<Rational> b) {
  auto trim = [](std::vector<Rational>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
  };
  trim(a);
  trim(b);
  if (a.empty() || b.empty()) return 0;
  long m = static_cast<long>(a.size()) - 1, n = static_cast<long>(b.size()) - 1;
  if (n == 0) {
    Rational r = 1;
    for (long i = 0; i < m; ++i) r *= b[0];
    return r;
  }
  if (m == 0) {
    Rational r = 1;
    for (long i = 0; i < n; ++i) r *= a[0];
    return r;
  }
  // Res(A, B) = (-1)^{mn} Res(B, A); Res(B, A) = lc(B)^{m - deg R} Res(B, R) with R = A mod B.
  std::vector<Rational> r = a;
  for (long i = m; i >= n; --i) {
    Rational f = r[static_cast<std::size_t>(i)] / b.back();
    for (long j = 0; j <= n; ++j) r[static_cast<std::size_t>(i - n + j)] -= f * b[static_cast<std::size_t>(j)];
  }
  r.resize(static_cast<std::size_t>(n));
  trim(r);
  if (r.empty()) return 0;
  long dr = static_cast<long>(r.size()) - 1;
  Rational scale = 1;
  for (long i = 0; i < m - dr; ++i) scale *= b.back();
  Rational sign = ((m * n) % 2 == 0) ? 1 : -1;
  return sign * scale * euclid_resultant(b, r);
}

inline Integer euclid_resultant(const IntPoly& p, const IntPoly& q) {
  std::vector<Rational> a, b;
  for (const auto& c : p.coeffs()) a.emplace_back(c);
  for (const auto& c : q.coeffs()) b.emplace_back(c);
  Rational r = euclid_resultant(a, b);
  return r.get_num();
}

inline IntPoly random_poly(std::mt19937_64& rng, int degree, long bound, bool monic) {
  std::uniform_int_distribution<long> d(-bound, bound);
  std::vector<Integer> c(static_cast<std::size_t>(degree + 1));
  for (auto& x : c) x = d(rng);
  if (monic) c.back() = 1;
  while (c.back() == 0) c.back() = d(rng);
  return IntPoly(c);
}

// Exponent of ell in n via repeated division, n != 0.
inline long valuation(long ell, long n) {
  long v = 0;
  if (n < 0) n = -n;
  while (n % ell == 0) {
    n /= ell;
    ++v;
  }
  return v;
}

// Genus of X_0(N) from the index, elliptic points and cusps.
inline long genus_x0(long n) {
  auto phi = [](long m) {
    long r = m;
    for (long p = 2; p * p <= m; ++p)
      if (m % p == 0) {
        while (m % p == 0) m /= p;
        r -= r / p;
      }
    if (m > 1) r -= r / m;
    return r;
  };
  auto gcd = [](long a, long b) {
    while (b) {
      long t = a % b;
      a = b;
      b = t;
    }
    return a;
  };
  long index = n, e2 = 1, e3 = 1, m = n;
  for (long p = 2; p <= m; ++p) {
    if (m % p) continue;
    int k = 0;
    while (m % p == 0) {
      m /= p;
      ++k;
    }
    index = index / p * (p + 1);
    long leg4 = (p == 2) ? 0 : ((p % 4 == 1) ? 2 : 0);
    long leg3 = (p == 3) ? 0 : ((p % 3 == 1) ? 2 : 0);
    e2 *= (p == 2 ? (k == 1 ? 1 : 0) : leg4);
    e3 *= (p == 3 ? (k == 1 ? 1 : 0) : leg3);
  }
  long cusps = 0;
  for (long d = 1; d <= n; ++d)
    if (n % d == 0) cusps += phi(gcd(d, n / d));
  return (12 + index - 3 * e2 - 4 * e3 - 6 * cusps) / 12;
}

}  // namespace oracle
