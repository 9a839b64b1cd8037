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

#include <optional>
#include <utility>
#include <vector>

#include "congruon/intpoly.hpp"

namespace congruon {

/// Exponent of ell in m; std::nullopt stands for +infinity (m = 0).
std::optional<long> val(const Integer& ell, const Integer& m);
/// Same as val() but throws std::domain_error on zero.
long val_finite(const Integer& ell, const Integer& m);

/// (n - 1) e + 1, the precision needed in an extension of ramification
/// index e to see a congruence modulo ell^n.
long gamma(long e, long n);

/// Deterministic Miller-Rabin below 2^64; above, GMP's probable-prime test
/// (Baillie-PSW plus 30 Miller-Rabin rounds).
bool is_prime(const Integer& n);

/// Prime factorization of |n| (n != 0), primes ascending.
std::vector<std::pair<Integer, long>> factor_integer(const Integer& n);
std::vector<Integer> prime_divisors(const Integer& n);

struct PrimePower {
  Integer ell;
  long n = 0;
  /// Throws std::invalid_argument unless ell is prime and n >= 0.
  static PrimePower make(Integer ell, long n);
  Integer value() const;
};

struct NewtonSegment {
  Rational slope;  // common root valuation
  long length = 0;  // number of roots
  friend bool operator==(const NewtonSegment&, const NewtonSegment&) = default;
};

/// Lower convex hull of (i, v(a_i)) over the nonzero coefficients. Slopes are
/// stated as root valuations, so they decrease from left to right. Roots at
/// zero (a factor Y^k) are counted in infinite_roots and excluded from the
/// segments.
struct NewtonPolygon {
  std::vector<NewtonSegment> segments;
  std::vector<std::pair<long, long>> vertices;  // (index, valuation)
  long infinite_roots = 0;

  /// Largest finite root valuation; nullopt if there are no finite roots.
  std::optional<Rational> max_slope() const;
  /// Slopes repeated by length, descending.
  std::vector<Rational> slope_multiset() const;
};

NewtonPolygon newton_polygon(const Integer& ell, const IntPoly& f);

/// Ceiling of a nonnegative rational slope.
long exponent_from_slope(const Rational& s);

}  // namespace congruon
