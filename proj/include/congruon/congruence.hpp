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

// Largest n such that two coprime monic integer polynomials have roots
// alpha, beta with v_ell(alpha - beta) > n - 1.

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "congruon/factor.hpp"
#include "congruon/intpoly.hpp"

namespace congruon {

/// c = r P + s Q with c the least positive integer of that shape,
/// deg r < deg Q and deg s < deg P.
struct CongruenceNumberResult {
  Integer c;
  IntPoly r, s;
};

/// Bottom-right pivot of the Hermite form of the Sylvester matrix, with
/// cofactors from the bottom row of the transform. Throws NotCoprimeError if
/// Res(P, Q) = 0 and PreconditionError for constant input.
CongruenceNumberResult congruence_number(const IntPoly& p, const IntPoly& q);

/// ell | c(P, Q).
bool common_root_mod_ell(const IntPoly& p, const IntPoly& q, const Integer& ell);

enum class BoundCase { A, B, CI, CII, CIII, DI, DII, DIII, Factored };
/// "a", "b", "c(i)", ..., "d(iii)", "factored".
std::string to_string(BoundCase c);

struct CongruenceBounds {
  Integer ell;
  long lower = 0;
  long upper = 0;
  bool exact = true;
  BoundCase case_tag = BoundCase::A;
};

/// F(Y) = Res_X(P(X), Q(X + Y)), monic of degree deg P * deg Q, whose roots
/// are the differences beta - alpha.
IntPoly difference_root_poly(const IntPoly& p, const IntPoly& q);

enum class Method { CongruenceNumber, NewtonPolygon };
/// "cn" or "np".
std::string to_string(Method m);

struct RootCongruence {
  long n = 0;
  Method method = Method::CongruenceNumber;
  CongruenceBounds bounds;
};

/// Caches c, r, s, the factorizations and F(Y) for one pair so several
/// primes can be queried cheaply. Thread-safe after construction.
class RootCongruenceSolver {
 public:
  /// Throws NotCoprimeError or PreconditionError (non-monic, constant).
  RootCongruenceSolver(IntPoly p, IntPoly q, FactorOptions opts = {});
  ~RootCongruenceSolver();
  RootCongruenceSolver(const RootCongruenceSolver&) = delete;
  RootCongruenceSolver& operator=(const RootCongruenceSolver&) = delete;

  const IntPoly& p() const { return p_; }
  const IntPoly& q() const { return q_; }
  const CongruenceNumberResult& congruence() const { return cn_; }

  CongruenceBounds bounds(const Integer& ell) const;
  long exact_exponent_newton(const Integer& ell) const;
  RootCongruence solve(const Integer& ell) const;
  const IntPoly& difference_poly() const;

 private:
  CongruenceBounds squarefree_bounds(const Integer& ell) const;

  IntPoly p_, q_;
  FactorOptions opts_;
  CongruenceNumberResult cn_;
  bool squarefree_ = true;
  std::vector<std::unique_ptr<RootCongruenceSolver>> pairs_;  // mutual factors
  mutable std::once_flag f_once_;
  mutable IntPoly f_;
};

CongruenceBounds bounds_via_congruence_number(const IntPoly& p, const IntPoly& q, const Integer& ell,
                                              const FactorOptions& opts = {});
long exact_exponent_newton(const IntPoly& p, const IntPoly& q, const Integer& ell);
/// Congruence-number bounds when they meet, otherwise the Newton polygon
/// of F(Y).
RootCongruence max_root_congruence(const IntPoly& p, const IntPoly& q, const Integer& ell,
                                   const FactorOptions& opts = {});

}  // namespace congruon
