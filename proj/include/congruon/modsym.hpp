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

// Weight 2 modular symbols for Gamma_0(N), presented by Manin symbols
// (c : d) in P^1(Z/N) modulo x + x S = 0 and x + x T + x T^2 = 0.

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "congruon/factor.hpp"
#include "congruon/intpoly.hpp"
#include "congruon/qmatrix.hpp"

namespace congruon {

inline constexpr long kDefaultLevelCap = 300;
inline constexpr long kMaxSplittingPrime = 50;

using SparseVector = std::vector<std::pair<std::size_t, Rational>>;

struct BuildOptions {
  long level_cap = kDefaultLevelCap;
  /// Enumerate P^1(Z/N) backwards; the resulting basis differs but every
  /// Hecke invariant must not.
  bool reverse_enumeration = false;
};

class ModSymSpace {
 public:
  /// Throws CapExceededError above the cap and PreconditionError for N < 1.
  static std::shared_ptr<const ModSymSpace> build(long level, const BuildOptions& opts = {});

  long level() const { return n_; }
  std::size_t p1_size() const { return p1_.size(); }
  /// Dimension of the full space (cuspidal plus boundary part).
  std::size_t dimension() const { return gens_.size(); }
  std::size_t num_cusps() const { return cusps_.size(); }

  /// Index of (c : d) in P^1(Z/N) after reduction, npos if gcd(c, d, N) > 1.
  std::size_t p1_index(long c, long d) const;
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  /// Canonical representative of a P^1 point.
  std::pair<long, long> p1_point(std::size_t i) const { return p1_[i]; }
  /// The Manin symbol (c : d) in basis coordinates.
  const SparseVector& manin_vector(std::size_t i) const { return manin_[i]; }

  /// Every 2- and 3-term relation as a row over the Manin symbols.
  QMatrix relation_matrix() const;
  /// Rows: basis symbols; columns: Gamma_0(N) cusp classes.
  QMatrix boundary_matrix() const;
  /// T_p, or U_p when p | N, on the full space (row convention), cached.
  const QMatrix& hecke(long p) const;
  /// {alpha, beta} -> {t alpha, t beta} into the space of level N / q.
  QMatrix degeneracy_matrix(long t, const ModSymSpace& target) const;
  /// Basis coordinates of {0, a/b}; b = 0 stands for the cusp at infinity.
  SparseVector zero_to_cusp(long a, long b) const;

 private:
  ModSymSpace() = default;
  void enumerate_p1(bool reverse);
  void eliminate_relations();
  void compute_cusps();
  std::size_t cusp_class(long a, long b);

  long n_ = 1;
  std::vector<std::pair<long, long>> p1_;
  std::vector<long> index_;           // c * N + d -> P^1 index, -1 if not a point
  std::vector<std::size_t> gens_;     // P^1 index of each basis symbol
  std::vector<SparseVector> manin_;   // Manin symbol -> basis coordinates
  std::vector<std::pair<long, long>> cusps_;
  std::vector<std::pair<std::size_t, std::size_t>> boundary_;  // P^1 index -> ([a/c], [b/d])
  mutable std::mutex hecke_lock_;
  mutable std::map<long, std::unique_ptr<QMatrix>> hecke_cache_;
};

enum class SubspaceKind { Cuspidal, New, Class };

/// Row-space of a basis in reduced echelon form inside a ModSymSpace.
struct Subspace {
  std::shared_ptr<const ModSymSpace> space;
  QMatrix basis;
  std::vector<std::size_t> pivots;
  SubspaceKind kind = SubspaceKind::Cuspidal;

  static Subspace from_rows(std::shared_ptr<const ModSymSpace> space, QMatrix rows, SubspaceKind kind);
  std::size_t dimension() const { return basis.rows(); }
  /// Matrix of a full-space operator on this subspace; throws
  /// std::logic_error if the subspace is not invariant.
  QMatrix restrict(const QMatrix& op) const;
  QMatrix hecke(long p) const { return restrict(space->hecke(p)); }
};

Subspace cuspidal_subspace(const std::shared_ptr<const ModSymSpace>& space);
Subspace cuspidal_new_subspace(const std::shared_ptr<const ModSymSpace>& space, const BuildOptions& opts = {});

/// A Galois conjugacy class of newforms, described by the characteristic
/// polynomials of T_p on its span. Engine-built classes keep their symbol
/// subspace so further primes can be computed on demand.
struct NewformClass {
  std::string id;
  long level = 0;
  long weight = 2;
  int degree = 0;
  std::map<long, IntPoly> charpolys;
  std::shared_ptr<const Subspace> source;
  std::shared_ptr<std::mutex> lock = std::make_shared<std::mutex>();

  bool has(long p) const { return charpolys.count(p) != 0; }
};

/// Splits the new subspace by factoring charpolys of T_p for good p up to
/// kMaxSplittingPrime; ids are "<N>.<letters>" in (degree, charpoly) order.
/// Throws Error("class separation failed") if that is not enough.
std::vector<NewformClass> decompose_into_classes(const Subspace& new_space, const FactorOptions& fopts = {});

/// Convenience: build, take the new subspace and decompose.
std::vector<NewformClass> newform_classes(long level, const BuildOptions& opts = {}, const FactorOptions& fopts = {});

/// P_{f,p}: looked up, or computed from the source subspace and cached.
IntPoly class_charpoly(NewformClass& cls, long p);
void fill_charpolys(NewformClass& cls, const std::vector<long>& primes);

/// Monic g with g^2 = f; throws std::domain_error if none exists.
IntPoly monic_square_root(const IntPoly& f);

/// Primes in [2, bound].
std::vector<long> primes_up_to(long bound);

}  // namespace congruon
