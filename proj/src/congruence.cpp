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
#include "congruon/congruence.hpp"

#include <algorithm>
#include <stdexcept>

#include "congruon/error.hpp"
#include "congruon/modpoly.hpp"
#include "congruon/padic.hpp"

namespace congruon {

CongruenceNumberResult congruence_number(const IntPoly& p, const IntPoly& q) {
  if (p.degree() < 1 || q.degree() < 1)
    throw PreconditionError("congruence number needs polynomials of positive degree");
  const std::size_t m = static_cast<std::size_t>(p.degree());
  const std::size_t n = static_cast<std::size_t>(q.degree());
  HermiteForm hf = hnf_with_transform(sylvester_matrix(p, q));
  const std::size_t last = m + n - 1;
  CongruenceNumberResult out;
  out.c = hf.h(last, last);
  if (sgn(out.c) == 0)
    throw NotCoprimeError("polynomials are not coprime (resultant 0); factor them first: " + p.to_string() +
                          " and " + q.to_string());
  std::vector<Integer> r(n), s(m);
  for (std::size_t i = 0; i < n; ++i) r[n - 1 - i] = hf.b(last, i);
  for (std::size_t j = 0; j < m; ++j) s[m - 1 - j] = hf.b(last, n + j);
  out.r = IntPoly(std::move(r));
  out.s = IntPoly(std::move(s));
  if (out.r * p + out.s * q != IntPoly::constant(out.c))
    throw std::logic_error("congruence_number: cofactor identity failed");
  return out;
}

bool common_root_mod_ell(const IntPoly& p, const IntPoly& q, const Integer& ell) {
  Integer c = congruence_number(p, q).c;
  return mpz_divisible_p(c.get_mpz_t(), ell.get_mpz_t()) != 0;
}

std::string to_string(BoundCase c) {
  switch (c) {
    case BoundCase::A: return "a";
    case BoundCase::B: return "b";
    case BoundCase::CI: return "c(i)";
    case BoundCase::CII: return "c(ii)";
    case BoundCase::CIII: return "c(iii)";
    case BoundCase::DI: return "d(i)";
    case BoundCase::DII: return "d(ii)";
    case BoundCase::DIII: return "d(iii)";
    case BoundCase::Factored: return "factored";
  }
  return "?";
}

std::string to_string(Method m) { return m == Method::CongruenceNumber ? "cn" : "np"; }

IntPoly difference_root_poly(const IntPoly& p, const IntPoly& q) {
  if (p.degree() < 1 || q.degree() < 1) throw PreconditionError("difference_root_poly: constant input");
  if (!p.is_monic() || !q.is_monic()) throw PreconditionError("difference_root_poly: monic input required");
  const long deg = static_cast<long>(p.degree()) * q.degree();
  // Points 0, 1, -1, 2, -2, ...; one more than needed serves as a check.
  std::vector<Integer> ys;
  std::vector<Rational> dd;
  for (long k = 0; static_cast<long>(ys.size()) <= deg; ++k) {
    Integer y = (k % 2 == 1) ? Integer((k + 1) / 2) : Integer(-(k / 2));
    ys.push_back(y);
    dd.emplace_back(resultant(p, q.shift(y)));
  }
  // Divided differences in place: dd[i] = f[y_0, ..., y_i].
  const std::size_t count = ys.size();
  for (std::size_t j = 1; j < count; ++j)
    for (std::size_t i = count - 1; i >= j; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / Rational(ys[i] - ys[i - j]);
      if (i == j) break;
    }
  // Expand the Newton form with Horner steps.
  std::vector<Rational> poly{dd[count - 1]};
  for (std::size_t i = count - 1; i-- > 0;) {
    std::vector<Rational> next(poly.size() + 1);
    for (std::size_t k = 0; k < poly.size(); ++k) {
      next[k + 1] += poly[k];
      next[k] -= poly[k] * ys[i];
    }
    next[0] += dd[i];
    poly = std::move(next);
  }
  std::vector<Integer> coeffs;
  for (const auto& x : poly) {
    if (x.get_den() != 1) throw std::logic_error("difference_root_poly: non-integral interpolation");
    coeffs.push_back(x.get_num());
  }
  IntPoly f(std::move(coeffs));
  if (f.degree() != deg || !f.is_monic()) throw std::logic_error("difference_root_poly: unexpected shape");
  return f;
}

RootCongruenceSolver::RootCongruenceSolver(IntPoly p, IntPoly q, FactorOptions opts)
    : p_(std::move(p)), q_(std::move(q)), opts_(opts) {
  if (p_.degree() < 1 || q_.degree() < 1) throw PreconditionError("polynomials must have positive degree");
  if (!p_.is_monic() || !q_.is_monic()) throw PreconditionError("polynomials must be monic");
  cn_ = congruence_number(p_, q_);
  squarefree_ = gcd_over_q(p_, p_.derivative()).degree() == 0 && gcd_over_q(q_, q_.derivative()).degree() == 0;
  if (squarefree_) return;
  auto fp = factor_over_z(p_, opts_);
  auto fq = factor_over_z(q_, opts_);
  for (const auto& a : fp)
    for (const auto& b : fq) {
      Integer res = resultant(a.poly, b.poly);
      if (abs(res) == 1) continue;
      pairs_.push_back(std::make_unique<RootCongruenceSolver>(a.poly, b.poly, opts_));
    }
}

RootCongruenceSolver::~RootCongruenceSolver() = default;

CongruenceBounds RootCongruenceSolver::squarefree_bounds(const Integer& ell) const {
  CongruenceBounds b;
  b.ell = ell;
  const long n = val_finite(ell, cn_.c);
  b.upper = n;
  b.lower = n;
  if (n == 0) {
    b.case_tag = BoundCase::A;
    return b;
  }
  if (n == 1) {
    b.case_tag = BoundCase::B;
    return b;
  }
  const bool p_sf = is_squarefree_mod(p_, ell);
  const bool q_sf = is_squarefree_mod(q_, ell);
  if (p_sf && q_sf) {
    b.case_tag = BoundCase::CI;
    return b;
  }
  const bool s_cop = coprime_mod(cn_.s, q_, ell);
  const bool r_cop = coprime_mod(cn_.r, p_, ell);
  if (q_sf && s_cop) {
    b.case_tag = BoundCase::CII;
    return b;
  }
  if (p_sf && r_cop) {
    b.case_tag = BoundCase::CIII;
    return b;
  }
  auto ceil_div = [](long a, long d) { return (a + d - 1) / d; };
  b.lower = 1;
  b.case_tag = BoundCase::DIII;
  if (s_cop) {
    b.lower = std::max(b.lower, ceil_div(n, q_.degree()));
    b.case_tag = BoundCase::DI;
  }
  if (r_cop) {
    long m = ceil_div(n, p_.degree());
    if (m > b.lower || !s_cop) b.case_tag = BoundCase::DII;
    b.lower = std::max(b.lower, m);
  }
  b.exact = b.lower == b.upper;
  return b;
}

CongruenceBounds RootCongruenceSolver::bounds(const Integer& ell) const {
  if (!is_prime(ell)) throw PreconditionError("ell = " + ell.get_str() + " is not prime");
  if (squarefree_) return squarefree_bounds(ell);
  CongruenceBounds b;
  b.ell = ell;
  b.case_tag = BoundCase::Factored;
  for (const auto& pair : pairs_) {
    CongruenceBounds sub = pair->squarefree_bounds(ell);
    b.lower = std::max(b.lower, sub.lower);
    b.upper = std::max(b.upper, sub.upper);
  }
  b.exact = b.lower == b.upper;
  return b;
}

const IntPoly& RootCongruenceSolver::difference_poly() const {
  std::call_once(f_once_, [this] { f_ = difference_root_poly(p_, q_); });
  return f_;
}

long RootCongruenceSolver::exact_exponent_newton(const Integer& ell) const {
  if (!is_prime(ell)) throw PreconditionError("ell = " + ell.get_str() + " is not prime");
  NewtonPolygon np = newton_polygon(ell, difference_poly());
  if (np.infinite_roots > 0) throw NotCoprimeError("polynomials share a root");
  auto s = np.max_slope();
  return s ? exponent_from_slope(*s) : 0;
}

RootCongruence RootCongruenceSolver::solve(const Integer& ell) const {
  RootCongruence out;
  out.bounds = bounds(ell);
  if (out.bounds.exact) {
    out.n = out.bounds.lower;
    out.method = Method::CongruenceNumber;
  } else {
    out.n = exact_exponent_newton(ell);
    out.method = Method::NewtonPolygon;
  }
  return out;
}

CongruenceBounds bounds_via_congruence_number(const IntPoly& p, const IntPoly& q, const Integer& ell,
                                              const FactorOptions& opts) {
  return RootCongruenceSolver(p, q, opts).bounds(ell);
}

long exact_exponent_newton(const IntPoly& p, const IntPoly& q, const Integer& ell) {
  if (resultant(p, q) == 0) throw NotCoprimeError("polynomials are not coprime (resultant 0)");
  if (!is_prime(ell)) throw PreconditionError("ell = " + ell.get_str() + " is not prime");
  NewtonPolygon np = newton_polygon(ell, difference_root_poly(p, q));
  auto s = np.max_slope();
  return s ? exponent_from_slope(*s) : 0;
}

RootCongruence max_root_congruence(const IntPoly& p, const IntPoly& q, const Integer& ell,
                                   const FactorOptions& opts) {
  return RootCongruenceSolver(p, q, opts).solve(ell);
}

}  // namespace congruon
