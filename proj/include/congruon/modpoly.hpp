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

// Polynomials over Z/mZ. Division requires an invertible leading
// coefficient; gcd and factoring require m prime.

#include <random>
#include <utility>
#include <vector>

#include "congruon/intpoly.hpp"

namespace congruon {

class ModPoly {
 public:
  ModPoly() = default;
  ModPoly(Integer modulus, std::vector<Integer> coeffs);
  /// Reduction of an integer polynomial.
  ModPoly(const Integer& modulus, const IntPoly& p);

  const Integer& modulus() const { return m_; }
  const std::vector<Integer>& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  const Integer& leading() const { return c_.back(); }

  static ModPoly zero(const Integer& m) { return ModPoly(m, std::vector<Integer>{}); }
  static ModPoly x(const Integer& m) { return ModPoly(m, std::vector<Integer>{Integer(0), Integer(1)}); }
  static ModPoly constant(const Integer& m, const Integer& c) { return ModPoly(m, std::vector<Integer>{c}); }

  ModPoly operator+(const ModPoly& o) const;
  ModPoly operator-(const ModPoly& o) const;
  ModPoly operator*(const ModPoly& o) const;
  ModPoly scaled(const Integer& c) const;
  ModPoly monic() const;
  ModPoly derivative() const;
  /// Lift with coefficients in (-m/2, m/2].
  IntPoly symmetric_lift() const;

  friend bool operator==(const ModPoly& a, const ModPoly& b) { return a.m_ == b.m_ && a.c_ == b.c_; }
  friend bool operator!=(const ModPoly& a, const ModPoly& b) { return !(a == b); }

 private:
  void normalize();
  Integer m_ = 0;
  std::vector<Integer> c_;
};

std::pair<ModPoly, ModPoly> divmod(const ModPoly& a, const ModPoly& b);
ModPoly mod(const ModPoly& a, const ModPoly& b);
/// base^e mod f.
ModPoly powmod(const ModPoly& base, const Integer& e, const ModPoly& f);
/// Monic gcd over a prime field (zero if both are zero).
ModPoly gcd(const ModPoly& a, const ModPoly& b);
/// Returns (g, s, t) with s a + t b = g monic, over a prime field.
struct ModXgcd {
  ModPoly g, s, t;
};
ModXgcd xgcd(const ModPoly& a, const ModPoly& b);

/// True iff the reduction has no repeated irreducible factor over F_p and
/// is nonzero. Constants count as squarefree.
bool is_squarefree_mod(const IntPoly& p, const Integer& prime);
/// True iff the reductions of a and b have no common factor of positive
/// degree over F_p (a zero reduction shares every factor).
bool coprime_mod(const IntPoly& a, const IntPoly& b, const Integer& prime);

/// Factor a monic squarefree polynomial over F_p (p odd) into monic
/// irreducibles, sorted by (degree, coefficients).
std::vector<ModPoly> factor_squarefree_mod(const ModPoly& f, std::mt19937_64& rng);

/// Distinct-degree splitting of a monic squarefree polynomial: pairs
/// (product of all irreducible factors of degree d, d).
std::vector<std::pair<ModPoly, int>> distinct_degree_factor(const ModPoly& f);

/// Degrees of the irreducible factors (with multiplicity) of the
/// reduction of a monic integer polynomial modulo an odd prime, sorted.
std::vector<int> factorization_pattern_mod(const IntPoly& p, const Integer& prime);

}  // namespace congruon
