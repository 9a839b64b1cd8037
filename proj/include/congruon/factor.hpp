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

#include <vector>

#include "congruon/intpoly.hpp"

namespace congruon {

inline constexpr int kDefaultFactorCap = 64;

struct FactorOptions {
  /// Largest squarefree component handed to modular factoring and
  /// recombination. Repeated factors do not count against it.
  int degree_cap = kDefaultFactorCap;
};

struct PolyFactor {
  IntPoly poly;
  int multiplicity = 1;
  friend bool operator==(const PolyFactor&, const PolyFactor&) = default;
};

/// Squarefree decomposition over Q: primitive pairwise-coprime factors with
/// positive leading coefficient whose powers multiply to +-P / content.
std::vector<PolyFactor> squarefree_decomposition(const IntPoly& p);

/// Irreducible factorization in Z[X] of a nonzero polynomial, ignoring the
/// content. Squarefree decomposition, then for each component factoring
/// modulo a good prime, Hensel lifting and subset recombination. Factors are
/// sorted by degree, then coefficients. Throws CapExceededError.
std::vector<PolyFactor> factor_over_z(const IntPoly& p, const FactorOptions& opts = {});

/// Irreducibility over Q (degree >= 1 and a single factor of multiplicity 1).
bool is_irreducible(const IntPoly& p, const FactorOptions& opts = {});

}  // namespace congruon
