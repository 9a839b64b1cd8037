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
#include "congruon/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <cstdio>
#include <exception>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <thread>

#include "congruon/error.hpp"
#include "congruon/padic.hpp"

namespace congruon {

Integer index_gamma0(long n) {
  if (n < 1) throw PreconditionError("level must be positive");
  Integer b = n;
  for (const auto& [q, e] : factor_integer(Integer(n))) {
    (void)e;
    b = b / q * (q + 1);
  }
  return b;
}

std::vector<long> SturmBound::primes() const {
  std::vector<long> out;
  if (bound < 2) return out;
  Integer fl = bound.get_num() / bound.get_den();
  for (long p : primes_up_to(fl.get_si())) out.push_back(p);
  return out;
}

SturmBound sturm_bound(long n, long k) {
  if (n < 1 || k < 1) throw PreconditionError("Sturm bound needs N >= 1 and k >= 1");
  SturmBound s;
  s.level = n;
  s.weight = k;
  s.index = index_gamma0(n);
  s.bound = Rational(Integer(k) * s.index, 12) - Rational(s.index - 1, n);
  s.bound.canonicalize();
  return s;
}

Integer modified_gcd_combine(const std::vector<std::pair<long, Integer>>& entries) {
  if (entries.empty()) throw std::invalid_argument("modified gcd of an empty list");
  std::set<long> ps;
  for (const auto& [p, c] : entries) {
    if (c < 1) throw std::invalid_argument("modified gcd needs positive entries");
    if (!ps.insert(p).second) throw std::invalid_argument("modified gcd: repeated prime " + std::to_string(p));
  }
  if (entries.size() == 1) return entries[0].second;
  Integer g = 0;
  for (const auto& [p, c] : entries) {
    Integer rest = c;
    for (long q : ps)
      while (mpz_divisible_ui_p(rest.get_mpz_t(), static_cast<unsigned long>(q))) rest /= q;
    g = gcd(g, rest);
  }
  for (long q : ps) {
    long v = -1;
    for (const auto& [p, c] : entries) {
      if (p == q) continue;
      long w = val_finite(Integer(q), c);
      v = v < 0 ? w : std::min(v, w);
    }
    Integer pw;
    mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(q), static_cast<unsigned long>(v));
    g *= pw;
  }
  return g;
}

IntPoly oldspace_charpoly(const IntPoly& p, long r, int delta, long prime, long weight) {
  if (!p.is_monic() || p.degree() < 1) throw PreconditionError("oldspace_charpoly: P must be monic of positive degree");
  if (r < 1) throw PreconditionError("oldspace_charpoly: r must be positive");
  if (delta != 0 && delta != 1) throw PreconditionError("oldspace_charpoly: delta must be 0 or 1");
  if (weight < 1) throw PreconditionError("oldspace_charpoly: weight must be positive");
  const auto d = static_cast<std::size_t>(p.degree());
  Integer pk;
  mpz_ui_pow_ui(pk.get_mpz_t(), static_cast<unsigned long>(prime), static_cast<unsigned long>(weight - 1));
  IntPoly quad{0, 0, 1};
  if (delta) quad += IntPoly::constant(pk);
  IntPoly out, power = IntPoly::constant(1);
  for (std::size_t i = 0; i <= d; ++i) {
    const Integer& c = p.coeffs()[i];
    if (sgn(c) != 0) out += (power * c).mul_x_power(d * static_cast<std::size_t>(r) - i);
    if (i < d) power = power * quad;
  }
  return out;
}

std::string options_hash(const ComparisonOptions& opts) {
  std::string canon = "skipTl=" + std::to_string(opts.skip_t_ell) +
                      ";divlevels=" + std::to_string(opts.include_p_dividing_levels) +
                      ";cutoff=" + (opts.prime_cutoff_override ? std::to_string(*opts.prime_cutoff_override) : "-") +
                      ";irred=" + std::to_string(opts.assert_irreducible);
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char ch : canon) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

namespace {

// Runs body(i) for i < n on up to `threads` workers; the first exception by
// index is rethrown.
template <class F>
void parallel_for(std::size_t n, unsigned threads, F body) {
  if (threads <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::vector<std::exception_ptr> errs(n);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < n;) {
      try {
        body(i);
      } catch (...) {
        errs[i] = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  unsigned t = std::min<unsigned>(threads, static_cast<unsigned>(n));
  for (unsigned k = 0; k < t; ++k) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  for (auto& e : errs)
    if (e) std::rethrow_exception(e);
}

std::unique_ptr<RootCongruenceSolver> try_solver(const IntPoly& a, const IntPoly& b, const FactorOptions& fo) {
  try {
    return std::make_unique<RootCongruenceSolver>(a, b, fo);
  } catch (const NotCoprimeError&) {
    return nullptr;
  }
}

Integer prime_power(const Integer& ell, long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), ell.get_mpz_t(), static_cast<unsigned long>(e));
  return r;
}

struct PrimeWork {
  long p = 0;
  bool in_plus = false;  // steps 1 and 2
  bool old = false;      // p | m, steps 2 (raw) and 3
  IntPoly pf, pg, tilde;
  std::unique_ptr<RootCongruenceSolver> raw, oldspace;
  std::vector<long> d, d_old;  // per ell | L+, -1 for no bound
  bool newton = false, newton_old = false;
};

}  // namespace

ComparisonRecord compare_newforms(NewformClass& f, NewformClass& g, const ComparisonOptions& opts) {
  if (f.weight != g.weight)
    throw PreconditionError("weight mismatch: " + f.id + " has weight " + std::to_string(f.weight) + ", " + g.id +
                            " has weight " + std::to_string(g.weight));
  if (&f == &g || (f.id == g.id && f.level == g.level))
    throw NotCoprimeError("not coprime: " + f.id + " compared with itself");
  const long nf = f.level, ng = g.level, k = f.weight;
  if (opts.assert_irreducible && ng % nf != 0)
    throw PreconditionError("old-space step needs level(f) | level(g), got " + std::to_string(nf) + " and " +
                            std::to_string(ng));
  const bool step3 = opts.assert_irreducible;
  const long m = ng / nf;

  ComparisonRecord rec;
  rec.f_id = f.id;
  rec.g_id = g.id;
  rec.hypothesis_conditional = true;
  rec.skipped_t_ell = opts.skip_t_ell;
  rec.assert_irreducible = opts.assert_irreducible;
  rec.options_hash = options_hash(opts);

  const long lvl = std::lcm(nf, ng);
  std::vector<long> candidates;
  if (opts.prime_cutoff_override) {
    rec.sturm = Rational(*opts.prime_cutoff_override);
    candidates = primes_up_to(*opts.prime_cutoff_override);
  } else {
    SturmBound sb = sturm_bound(lvl, k);
    rec.sturm = sb.bound;
    candidates = sb.primes();
  }

  std::vector<PrimeWork> work;
  for (long p : candidates) {
    const bool bad = (nf % p == 0) || (ng % p == 0);
    PrimeWork w;
    w.p = p;
    if (!bad || opts.include_p_dividing_levels) {
      w.in_plus = true;
    } else if (step3 && m % p == 0) {
      w.old = true;
    } else {
      rec.excluded_primes.push_back(p);
      continue;
    }
    work.push_back(std::move(w));
  }

  parallel_for(work.size(), opts.threads, [&](std::size_t i) {
    PrimeWork& w = work[i];
    w.pf = class_charpoly(f, w.p);
    w.pg = class_charpoly(g, w.p);
  });

  // Identical charpolys everywhere means the classes cannot be told apart.
  if (!work.empty() && work.front().pf == work.front().pg &&
      std::all_of(work.begin(), work.end(), [](const PrimeWork& w) { return w.pf == w.pg; }))
    throw NotCoprimeError("not coprime at p=" + std::to_string(work.front().p) + ": " + f.id + " and " + g.id +
                          " have equal charpolys at every prime used");

  parallel_for(work.size(), opts.threads, [&](std::size_t i) {
    PrimeWork& w = work[i];
    w.raw = try_solver(w.pf, w.pg, opts.factor);
    if (w.old) {
      long r = 0;
      for (long t = m; t % w.p == 0; t /= w.p) ++r;
      w.tilde = oldspace_charpoly(w.pf, r, nf % w.p == 0 ? 0 : 1, w.p, k);
      w.oldspace = try_solver(w.tilde, w.pg, opts.factor);
    }
  });

  // Step 1.
  std::vector<std::pair<long, Integer>> entries;
  for (const auto& w : work)
    if (w.in_plus && w.raw) entries.emplace_back(w.p, w.raw->congruence().c);
  if (entries.empty()) {
    rec.insufficient_primes = true;
    rec.l_plus = 0;
    rec.l_minus = 1;
  } else {
    rec.single_entry_gcd = entries.size() == 1;
    rec.l_plus = modified_gcd_combine(entries);
  }
  std::vector<Integer> ells = rec.l_plus > 1 ? prime_divisors(rec.l_plus) : std::vector<Integer>{};

  // Per-prime exponents for every ell | L+.
  parallel_for(work.size(), opts.threads, [&](std::size_t i) {
    PrimeWork& w = work[i];
    for (const auto& ell : ells) {
      if (w.raw) {
        RootCongruence rc = w.raw->solve(ell);
        w.d.push_back(rc.n);
        w.newton = w.newton || rc.method == Method::NewtonPolygon;
      } else {
        w.d.push_back(-1);
      }
      if (w.old) {
        if (w.oldspace) {
          RootCongruence rc = w.oldspace->solve(ell);
          w.d_old.push_back(rc.n);
          w.newton_old = w.newton_old || rc.method == Method::NewtonPolygon;
        } else {
          w.d_old.push_back(-1);
        }
      }
    }
  });

  // Steps 2 to 4. A prime without a bound (shared root) does not constrain
  // the minimum; T_ell is dropped for ell when requested.
  Integer l_minus = 1;
  for (std::size_t j = 0; j < ells.size(); ++j) {
    const Integer& ell = ells[j];
    const long vplus = val_finite(ell, rec.l_plus);
    auto usable = [&](const PrimeWork& w) { return !(opts.skip_t_ell && ell == w.p); };
    long l1 = -1;
    for (const auto& w : work) {
      if (!usable(w) || w.d[j] < 0) continue;
      l1 = l1 < 0 ? w.d[j] : std::min(l1, w.d[j]);
    }
    if (l1 < 0) l1 = 0;
    long best = l1;
    if (step3 && l1 != vplus) {
      long l2 = -1;
      for (const auto& w : work) {
        if (!usable(w)) continue;
        long e = w.old ? w.d_old[j] : w.d[j];
        if (e < 0) continue;
        l2 = l2 < 0 ? e : std::min(l2, e);
      }
      if (l2 < 0) l2 = 0;
      best = std::max(best, l2);
    }
    l_minus *= prime_power(ell, best);
  }
  if (!entries.empty()) rec.l_minus = l_minus;

  for (const auto& w : work) {
    DetailEntry e;
    e.p = w.p;
    e.c = w.raw ? w.raw->congruence().c : Integer(0);
    e.d = w.raw ? Integer(1) : Integer(0);
    if (w.raw)
      for (std::size_t j = 0; j < ells.size(); ++j) e.d *= prime_power(ells[j], w.d[j]);
    e.method = w.newton ? DetailMethod::NewtonPolygon : DetailMethod::CongruenceNumber;
    rec.details.push_back(e);
    if (!w.old) continue;
    DetailEntry o;
    o.p = w.p;
    o.method = DetailMethod::Oldspace;
    o.c = w.oldspace ? w.oldspace->congruence().c : Integer(0);
    o.d = w.oldspace ? Integer(1) : Integer(0);
    if (w.oldspace)
      for (std::size_t j = 0; j < ells.size(); ++j) o.d *= prime_power(ells[j], w.d_old[j]);
    rec.details.push_back(o);
    // Direct evaluation of the old-space polynomial at integer eigenvalues
    // of g; reported only.
    for (const auto& fac : factor_over_z(w.pg, opts.factor)) {
      if (fac.poly.degree() != 1) continue;
      Integer t = -fac.poly.coeff(0);
      DetailEntry dg;
      dg.p = w.p;
      dg.method = DetailMethod::Oldspace;
      dg.diagnostic = true;
      dg.c = abs(w.tilde.eval(t));
      dg.d = sgn(dg.c) == 0 ? Integer(0) : Integer(1);
      if (sgn(dg.c) != 0)
        for (const auto& ell : ells) dg.d *= prime_power(ell, val_finite(ell, dg.c));
      rec.details.push_back(dg);
    }
  }
  return rec;
}

EisensteinScan eisenstein_scan(NewformClass& f, NewformClass* eisenstein, std::optional<long> cutoff,
                               const FactorOptions& fopts) {
  const long n = f.level;
  if (!eisenstein) {
    if (f.weight != 2) throw PreconditionError("Eisenstein scan without data needs weight 2");
    if (!is_prime(Integer(n)))
      throw PreconditionError("Eisenstein scan at composite level " + std::to_string(n) + " needs ingested Eisenstein data");
  } else if (eisenstein->weight != f.weight) {
    throw PreconditionError("weight mismatch between " + f.id + " and " + eisenstein->id);
  }
  EisensteinScan out;
  const Integer b = index_gamma0(n);
  if (cutoff) {
    out.cutoff = Rational(*cutoff);
  } else {
    out.cutoff = Rational(Integer(f.weight) * b, 12);
    out.cutoff.canonicalize();
  }
  Rational q(Integer(n - 1), 12);
  q.canonicalize();
  out.numerator = abs(q.get_num());
  Integer fl = out.cutoff.get_num() / out.cutoff.get_den();
  for (long p : primes_up_to(fl.get_si()))
    if (n % p != 0) out.primes.push_back(p);
  out.insufficient_primes = out.primes.empty();

  std::vector<std::unique_ptr<RootCongruenceSolver>> solvers;
  Integer g = 0;
  for (long p : out.primes) {
    IntPoly pf = class_charpoly(f, p);
    IntPoly e = eisenstein ? class_charpoly(*eisenstein, p) : IntPoly::linear_root(Integer(1 + p));
    auto s = try_solver(pf, e, fopts);
    if (s) g = gcd(g, s->congruence().c);
    solvers.push_back(std::move(s));
  }
  std::set<Integer> ells;
  if (g > 1)
    for (const auto& l : prime_divisors(g)) ells.insert(l);
  if (out.numerator > 1)
    for (const auto& l : prime_divisors(out.numerator)) ells.insert(l);
  for (const auto& ell : ells) {
    EisensteinEntry en;
    en.ell = ell;
    en.v_numerator = out.numerator > 0 ? val_finite(ell, out.numerator) : 0;
    long e = -1;
    if (g > 1 && mpz_divisible_p(g.get_mpz_t(), ell.get_mpz_t())) {
      for (const auto& s : solvers) {
        if (!s) continue;
        long x = s->solve(ell).n;
        e = e < 0 ? x : std::min(e, x);
      }
    }
    en.exponent = e < 0 ? 0 : e;
    out.entries.push_back(en);
  }
  return out;
}

LevelRaising level_raising_check(NewformClass& f, long p, const Integer& ell, const FactorOptions& fopts) {
  if (!is_prime(Integer(p))) throw PreconditionError("p = " + std::to_string(p) + " is not prime");
  if (!is_prime(ell)) throw PreconditionError("ell = " + ell.get_str() + " is not prime");
  if (f.level % p == 0)
    throw PreconditionError("p = " + std::to_string(p) + " divides the level " + std::to_string(f.level));
  LevelRaising out;
  out.p = p;
  out.ell = ell;
  IntPoly pf = class_charpoly(f, p);
  const Integer t = p + 1;
  RootCongruenceSolver minus(pf, IntPoly::linear_root(t), fopts);
  RootCongruenceSolver plus(pf, IntPoly::linear_root(-t), fopts);
  out.c_minus = minus.congruence().c;
  out.c_plus = plus.congruence().c;
  out.e_minus = minus.solve(ell).n;
  out.e_plus = plus.solve(ell).n;
  IntPoly sq = IntPoly::monomial(1, 2) - IntPoly::constant(t * t);
  out.e_square = RootCongruenceSolver(pf, sq, fopts).solve(ell).n;
  return out;
}

}  // namespace congruon
