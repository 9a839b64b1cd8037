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
#include "congruon/factor.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "congruon/error.hpp"
#include "congruon/modpoly.hpp"

namespace congruon {

namespace {

bool factor_less(const PolyFactor& a, const PolyFactor& b) {
  if (a.poly.degree() != b.poly.degree()) return a.poly.degree() < b.poly.degree();
  const auto& x = a.poly.coeffs();
  const auto& y = b.poly.coeffs();
  return std::lexicographical_compare(x.rbegin(), x.rend(), y.rbegin(), y.rend());
}

ModPoly rewrap(const ModPoly& a, const Integer& m) { return ModPoly(m, a.coeffs()); }

// Quadratic Hensel lifting of f = g h (mod p), h monic, to modulus `target`.
std::pair<ModPoly, ModPoly> lift_pair(const IntPoly& f, const ModPoly& g0, const ModPoly& h0, const Integer& p,
                                      const Integer& target) {
  ModXgcd bez = xgcd(g0, h0);
  if (!bez.g.is_one()) throw std::logic_error("Hensel lifting: factors not coprime modulo p");
  ModPoly g = g0, h = h0, s = bez.s, t = bez.t;
  Integer m = p;
  while (m < target) {
    Integer m2 = m * m;
    g = rewrap(g, m2);
    h = rewrap(h, m2);
    s = rewrap(s, m2);
    t = rewrap(t, m2);
    ModPoly e = ModPoly(m2, f) - g * h;
    auto [q, r] = divmod(s * e, h);
    ModPoly g1 = g + t * e + q * g;
    ModPoly h1 = h + r;
    ModPoly b = s * g1 + t * h1 - ModPoly::constant(m2, 1);
    auto [c, d] = divmod(s * b, h1);
    s = s - d;
    t = t - t * b - c * g1;
    g = std::move(g1);
    h = std::move(h1);
    m = m2;
  }
  return {g, h};
}

// Lifts f = lc(f) * prod(factors) (mod p) to monic factors modulo `target`.
void lift_all(const IntPoly& f, std::vector<ModPoly> factors, const Integer& p, const Integer& target,
              std::vector<ModPoly>& out) {
  if (factors.size() == 1) {
    out.push_back(ModPoly(target, f).monic());
    return;
  }
  const std::size_t half = factors.size() / 2;
  std::vector<ModPoly> left(factors.begin(), factors.begin() + static_cast<long>(half));
  std::vector<ModPoly> right(factors.begin() + static_cast<long>(half), factors.end());
  ModPoly a = ModPoly::constant(p, 1);
  for (const auto& x : left) a = a * x;
  ModPoly b = divmod(ModPoly(p, f), a).first;
  auto [b_lift, a_lift] = lift_pair(f, b, a, p, target);
  lift_all(a_lift.symmetric_lift(), std::move(left), p, target, out);
  lift_all(b_lift.symmetric_lift(), std::move(right), p, target, out);
}

std::vector<long> odd_primes(std::size_t count) {
  std::vector<long> ps;
  for (long n = 3; ps.size() < count; n += 2) {
    bool prime = true;
    for (long d = 3; d * d <= n; d += 2)
      if (n % d == 0) {
        prime = false;
        break;
      }
    if (prime) ps.push_back(n);
  }
  return ps;
}

Integer coefficient_bound(const IntPoly& f) {
  // Any factor g of f satisfies |g_j| <= 2^deg(f) * ||f||_2; scaled by the
  // leading coefficient for the recombination trick.
  Integer mx = 0;
  for (const auto& c : f.coeffs()) mx = std::max(mx, Integer(abs(c)));
  Integer b = mx * (f.degree() + 1);
  mpz_mul_2exp(b.get_mpz_t(), b.get_mpz_t(), static_cast<mp_bitcnt_t>(f.degree()));
  return Integer(abs(f.leading())) * b * 2 + 1;
}

std::vector<IntPoly> factor_squarefree_z(const IntPoly& input, const FactorOptions& opts) {
  IntPoly f = input.primitive_part();
  if (f.degree() <= 1) return {f};
  if (f.degree() > opts.degree_cap)
    throw CapExceededError("factorization cap exceeded: squarefree component of degree " +
                           std::to_string(f.degree()) + " > cap " + std::to_string(opts.degree_cap));

  // Choose the good prime with the fewest modular factors among the first few.
  std::mt19937_64 rng(0x5eedULL + static_cast<unsigned long>(f.degree()));
  long best_p = 0;
  std::size_t best_count = 0;
  int tried = 0;
  for (long p : odd_primes(200)) {
    Integer P(p);
    if (mpz_divisible_p(f.leading().get_mpz_t(), P.get_mpz_t())) continue;
    if (!is_squarefree_mod(f, P)) continue;
    std::size_t count = 0;
    for (auto& [g, d] : distinct_degree_factor(ModPoly(P, f))) count += static_cast<std::size_t>(g.degree() / d);
    if (best_p == 0 || count < best_count) {
      best_p = p;
      best_count = count;
    }
    if (count == 1 || ++tried >= 6) break;
  }
  if (best_p == 0) throw std::logic_error("factor_over_z: no good prime found");
  if (best_count == 1) return {f};

  const Integer p(best_p);
  std::vector<ModPoly> modular = factor_squarefree_mod(ModPoly(p, f), rng);
  Integer bound = coefficient_bound(f);
  Integer target = p;
  while (target < bound) target *= target;
  std::vector<ModPoly> lifted;
  lift_all(f, modular, p, target, lifted);

  // Zassenhaus recombination over subsets of increasing size.
  std::vector<IntPoly> found;
  std::vector<ModPoly> remaining = lifted;
  IntPoly rest = f;
  std::size_t size = 1;
  while (2 * size <= remaining.size()) {
    bool progress = false;
    std::vector<std::size_t> idx(size);
    for (std::size_t i = 0; i < size; ++i) idx[i] = i;
    for (;;) {
      ModPoly prod = ModPoly::constant(target, rest.leading());
      for (std::size_t i : idx) prod = prod * remaining[i];
      IntPoly cand = prod.symmetric_lift().primitive_part();
      if (cand.degree() > 0 && cand.degree() < rest.degree() && divides(cand, rest)) {
        found.push_back(cand);
        rest = divide_exact(rest, cand).primitive_part();
        std::vector<ModPoly> keep;
        for (std::size_t i = 0; i < remaining.size(); ++i)
          if (std::find(idx.begin(), idx.end(), i) == idx.end()) keep.push_back(remaining[i]);
        remaining = std::move(keep);
        progress = true;
        break;
      }
      // Next combination in lexicographic order.
      std::size_t k = size;
      while (k > 0 && idx[k - 1] == remaining.size() - size + (k - 1)) --k;
      if (k == 0) break;
      ++idx[k - 1];
      for (std::size_t j = k; j < size; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (!progress) ++size;
  }
  found.push_back(rest);
  return found;
}

}  // namespace

std::vector<PolyFactor> squarefree_decomposition(const IntPoly& input) {
  if (input.is_zero()) throw std::invalid_argument("squarefree_decomposition: zero polynomial");
  std::vector<PolyFactor> out;
  IntPoly a = input.primitive_part();
  if (a.degree() <= 0) return out;
  IntPoly da = a.derivative();
  IntPoly b = gcd_over_q(a, da);
  IntPoly c = divide_exact(a, b);
  IntPoly d = divide_exact(da, b) - c.derivative();
  for (int i = 1; c.degree() > 0; ++i) {
    IntPoly ai = gcd_over_q(c, d);
    c = divide_exact(c, ai);
    d = divide_exact(d, ai) - c.derivative();
    if (ai.degree() > 0) out.push_back({ai, i});
  }
  return out;
}

std::vector<PolyFactor> factor_over_z(const IntPoly& p, const FactorOptions& opts) {
  if (p.is_zero()) throw std::invalid_argument("factor_over_z: zero polynomial");
  std::vector<PolyFactor> out;
  for (const auto& [part, mult] : squarefree_decomposition(p))
    for (IntPoly& g : factor_squarefree_z(part, opts)) out.push_back({std::move(g), mult});
  std::sort(out.begin(), out.end(), factor_less);
  return out;
}

bool is_irreducible(const IntPoly& p, const FactorOptions& opts) {
  if (p.degree() < 1) return false;
  auto f = factor_over_z(p, opts);
  return f.size() == 1 && f[0].multiplicity == 1;
}

}  // namespace congruon
