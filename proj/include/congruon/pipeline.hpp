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

// Congruences between newform classes from their Hecke charpolys.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "congruon/congruence.hpp"
#include "congruon/hecke_io.hpp"
#include "congruon/modsym.hpp"

namespace congruon {

/// [SL_2(Z) : Gamma_0(N)] = N prod_{p | N} (1 + 1/p).
Integer index_gamma0(long n);

struct SturmBound {
  long level = 1;
  long weight = 2;
  Integer index;   // b
  Rational bound;  // B = k b / 12 - (b - 1) / N

  /// Primes p <= B, by exact comparison.
  std::vector<long> primes() const;
  bool insufficient_primes() const { return bound < 2; }
};

SturmBound sturm_bound(long n, long k);

/// Combines (p, c_p) so that the ell-part of the result is the least
/// v_ell(c_p) over entries with p != ell. A lone entry keeps its own p-part.
/// Throws std::invalid_argument on empty input, repeated p or c_p < 1.
Integer modified_gcd_combine(const std::vector<std::pair<long, Integer>>& entries);

/// sum_i c_i X^{dr - i} (X^2 + delta p^{k-1})^i for P = sum_i c_i X^i of
/// degree d: the charpoly of T_p on the r + 1 degeneracy images of a class
/// raised to level p^r times its own.
IntPoly oldspace_charpoly(const IntPoly& p, long r, int delta, long prime, long weight);

struct ComparisonOptions {
  /// Leave out T_ell when bounding the ell-exponent; the result is then no
  /// longer backed by the old-space argument.
  bool skip_t_ell = false;
  /// Also use p | N_f N_g (p not dividing m) as if they were good primes.
  bool include_p_dividing_levels = false;
  /// Replace the Sturm bound by this cutoff.
  std::optional<long> prime_cutoff_override;
  /// Caller vouches for residual irreducibility of f at every ell | L+, which
  /// enables the old-space step at p | m when N_g = m N_f.
  bool assert_irreducible = false;
  FactorOptions factor;
  /// Worker threads for per-prime work; output does not depend on it.
  unsigned threads = 1;
};

/// Stable hex digest of the options that affect results.
std::string options_hash(const ComparisonOptions& opts);

/// (L-, L+) for f of level N_f and g of level N_g. L- assumes the per-prime
/// root congruences come from one pair of embeddings.
/// Throws PreconditionError (weight mismatch, missing charpolys, old-space
/// step with N_f not dividing N_g) and NotCoprimeError (f and g agree at
/// every prime used).
ComparisonRecord compare_newforms(NewformClass& f, NewformClass& g, const ComparisonOptions& opts = {});

struct EisensteinEntry {
  Integer ell;
  long exponent = 0;     // min over p of the root congruence exponent
  long v_numerator = 0;  // v_ell(numerator((N - 1) / 12))
};

struct EisensteinScan {
  Rational cutoff;
  std::vector<long> primes;
  Integer numerator;  // numerator of (N - 1) / 12
  std::vector<EisensteinEntry> entries;  // ell dividing every c_p or the numerator
  bool insufficient_primes = false;
};

/// Compares f with the Eisenstein series at good primes p <= cutoff
/// (default k b / 12), using X - (1 + p) at prime level or the charpolys of
/// an ingested Eisenstein class otherwise.
EisensteinScan eisenstein_scan(NewformClass& f, NewformClass* eisenstein = nullptr,
                               std::optional<long> cutoff = std::nullopt, const FactorOptions& fopts = {});

struct LevelRaising {
  long p = 0;
  Integer ell;
  long e_minus = 0, e_plus = 0;
  Integer c_minus, c_plus;  // c(P_{f,p}, X -+ (p + 1))
  long e_square = 0;        // against X^2 - (p + 1)^2
};

/// Throws PreconditionError if p divides the level of f.
LevelRaising level_raising_check(NewformClass& f, long p, const Integer& ell, const FactorOptions& fopts = {});

}  // namespace congruon
