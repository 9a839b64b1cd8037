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
#include "congruon/modsym.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <stdexcept>

#include "congruon/error.hpp"
#include "congruon/padic.hpp"

namespace congruon {

namespace {

long mod(long a, long n) {
  long r = a % n;
  return r < 0 ? r + n : r;
}

long floor_div(long a, long b) {
  long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

// x, y with x a + y b = gcd(a, b) >= 0.
long ext_gcd(long a, long b, long& x, long& y) {
  long x0 = 1, y0 = 0, x1 = 0, y1 = 1;
  while (b != 0) {
    long q = floor_div(a, b);
    long t = a - q * b;
    a = b;
    b = t;
    t = x0 - q * x1;
    x0 = x1;
    x1 = t;
    t = y0 - q * y1;
    y0 = y1;
    y1 = t;
  }
  if (a < 0) {
    a = -a;
    x0 = -x0;
    y0 = -y0;
  }
  x = x0;
  y = y0;
  return a;
}

// Lift (c : d) to [[a, b], [c', d']] in SL_2(Z) with c' = c, d' = d mod N.
std::array<long, 4> lift_to_sl2(long c, long d, long n) {
  c = mod(c, n);
  d = mod(d, n);
  if (c == 0) c = n;
  while (std::gcd(c, d) != 1) d += n;
  long x, y;
  ext_gcd(d, c, x, y);  // x d + y c = 1
  return {x, -y, c, d};
}

// Merel's matrices [[a, b], [c, d]]: a > b >= 0, d > c >= 0, ad - bc = n.
std::vector<std::array<long, 4>> merel_matrices(long n) {
  std::vector<std::array<long, 4>> out;
  for (long a = 1; a <= n; ++a)
    for (long d = 1; a + d <= n + 1; ++d) {
      long r = a * d - n;
      if (r < 0) continue;
      if (r == 0) {
        for (long c = 0; c < d; ++c) out.push_back({a, 0, c, d});
        for (long b = 1; b < a; ++b) out.push_back({a, b, 0, d});
        continue;
      }
      for (long b = 1; b < a; ++b) {
        if (r % b) continue;
        long c = r / b;
        if (c < d) out.push_back({a, b, c, d});
      }
    }
  return out;
}

void accumulate(std::vector<Rational>& dense, const SparseVector& v, long sign) {
  for (const auto& [j, x] : v) {
    if (sign > 0)
      dense[j] += x;
    else
      dense[j] -= x;
  }
}

SparseVector sparsify(const std::vector<Rational>& dense) {
  SparseVector v;
  for (std::size_t j = 0; j < dense.size(); ++j)
    if (sgn(dense[j]) != 0) v.emplace_back(j, dense[j]);
  return v;
}

}  // namespace

std::vector<long> primes_up_to(long bound) {
  std::vector<long> out;
  if (bound < 2) return out;
  std::vector<bool> sieve(static_cast<std::size_t>(bound + 1), true);
  for (long i = 2; i <= bound; ++i) {
    if (!sieve[static_cast<std::size_t>(i)]) continue;
    out.push_back(i);
    for (long j = i * i; j <= bound; j += i) sieve[static_cast<std::size_t>(j)] = false;
  }
  return out;
}

std::shared_ptr<const ModSymSpace> ModSymSpace::build(long level, const BuildOptions& opts) {
  if (level < 1) throw PreconditionError("level must be positive");
  if (level > opts.level_cap)
    throw CapExceededError("level " + std::to_string(level) + " exceeds the modular symbols cap " +
                           std::to_string(opts.level_cap));
  std::shared_ptr<ModSymSpace> s(new ModSymSpace());
  s->n_ = level;
  s->enumerate_p1(opts.reverse_enumeration);
  s->eliminate_relations();
  s->compute_cusps();
  return s;
}

void ModSymSpace::enumerate_p1(bool reverse) {
  const long n = n_;
  index_.assign(static_cast<std::size_t>(n * n), -1);
  std::vector<long> units;
  for (long u = 0; u < n; ++u)
    if (std::gcd(u, n) == 1) units.push_back(u);
  for (long k = 0; k < n * n; ++k) {
    long e = reverse ? n * n - 1 - k : k;
    long c = e / n, d = e % n;
    if (std::gcd(std::gcd(c, d), n) != 1) continue;
    if (index_[static_cast<std::size_t>(e)] >= 0) continue;
    const long i = static_cast<long>(p1_.size());
    p1_.emplace_back(c, d);
    for (long u : units) index_[static_cast<std::size_t>((u * c % n) * n + u * d % n)] = i;
  }
}

std::size_t ModSymSpace::p1_index(long c, long d) const {
  long i = index_[static_cast<std::size_t>(mod(c, n_) * n_ + mod(d, n_))];
  return i < 0 ? npos : static_cast<std::size_t>(i);
}

QMatrix ModSymSpace::relation_matrix() const {
  const std::size_t count = p1_.size();
  QMatrix r(2 * count, count);
  for (std::size_t i = 0; i < count; ++i) {
    auto [c, d] = p1_[i];
    r(i, i) += 1;
    r(i, p1_index(d, -c)) += 1;
    r(count + i, i) += 1;
    r(count + i, p1_index(d, -c - d)) += 1;
    r(count + i, p1_index(-c - d, c)) += 1;
  }
  return r;
}

void ModSymSpace::eliminate_relations() {
  const std::size_t count = p1_.size();
  // x + x S = 0: pair each symbol with its S-image; fixed points vanish.
  std::vector<int> sign(count, 0);
  std::vector<std::size_t> rep(count, 0);
  std::vector<std::size_t> gens2;
  std::vector<bool> seen(count, false);
  for (std::size_t i = 0; i < count; ++i) {
    if (seen[i]) continue;
    auto [c, d] = p1_[i];
    std::size_t j = p1_index(d, -c);
    seen[i] = seen[j] = true;
    if (i == j) continue;
    rep[i] = rep[j] = gens2.size();
    sign[i] = 1;
    sign[j] = -1;
    gens2.push_back(i);
  }
  // x + x T + x T^2 = 0, one row per T-orbit.
  std::vector<std::vector<std::pair<std::size_t, long>>> rows;
  std::fill(seen.begin(), seen.end(), false);
  for (std::size_t i = 0; i < count; ++i) {
    if (seen[i]) continue;
    auto [c, d] = p1_[i];
    std::array<std::size_t, 3> orbit = {i, p1_index(d, -c - d), p1_index(-c - d, c)};
    std::vector<std::pair<std::size_t, long>> row;
    for (std::size_t k : orbit) {
      seen[k] = true;
      if (sign[k] != 0) row.emplace_back(rep[k], sign[k]);
    }
    rows.push_back(std::move(row));
  }
  QMatrix rel(rows.size(), gens2.size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (auto [j, s] : rows[r]) rel(r, j) += s;
  RowEchelon e = row_echelon(std::move(rel));
  std::vector<long> pivot_row(gens2.size(), -1);
  for (std::size_t r = 0; r < e.pivots.size(); ++r) pivot_row[e.pivots[r]] = static_cast<long>(r);
  std::vector<std::size_t> free_pos(gens2.size(), 0);
  for (std::size_t j = 0; j < gens2.size(); ++j)
    if (pivot_row[j] < 0) {
      free_pos[j] = gens_.size();
      gens_.push_back(gens2[j]);
    }
  // Coordinates of each 2-term generator in terms of the free ones.
  std::vector<SparseVector> vec2(gens2.size());
  for (std::size_t j = 0; j < gens2.size(); ++j) {
    if (pivot_row[j] < 0) {
      vec2[j].emplace_back(free_pos[j], Rational(1));
      continue;
    }
    const auto r = static_cast<std::size_t>(pivot_row[j]);
    for (std::size_t k = 0; k < gens2.size(); ++k)
      if (pivot_row[k] < 0 && sgn(e.rref(r, k)) != 0) vec2[j].emplace_back(free_pos[k], -e.rref(r, k));
  }
  manin_.assign(count, {});
  for (std::size_t i = 0; i < count; ++i) {
    if (sign[i] == 0) continue;
    manin_[i] = vec2[rep[i]];
    if (sign[i] < 0)
      for (auto& [j, x] : manin_[i]) x = -x;
  }
}

std::size_t ModSymSpace::cusp_class(long a, long b) {
  if (b < 0) {
    a = -a;
    b = -b;
  }
  long g = std::gcd(a, b);
  if (g > 1) {
    a /= g;
    b /= g;
  }
  if (b == 0) a = 1;
  // s with a s = 1 mod b; for b = 0 the cusp is 1/0 and s = 1.
  auto inverse = [](long p, long q) -> long {
    if (q == 0) return 1;
    if (q == 1) return 0;
    long x, y;
    ext_gcd(mod(p, q), q, x, y);
    return mod(x, q);
  };
  const long s = inverse(a, b);
  for (std::size_t k = 0; k < cusps_.size(); ++k) {
    auto [a2, b2] = cusps_[k];
    const long s2 = inverse(a2, b2);
    const long m = std::gcd(b * b2, n_);
    if (mod(s * b2 - s2 * b, m) == 0) return k;
  }
  cusps_.emplace_back(a, b);
  return cusps_.size() - 1;
}

void ModSymSpace::compute_cusps() {
  boundary_.resize(p1_.size());
  for (std::size_t i = 0; i < p1_.size(); ++i) {
    auto [a, b, c, d] = lift_to_sl2(p1_[i].first, p1_[i].second, n_);
    std::size_t x = cusp_class(a, c);
    std::size_t y = cusp_class(b, d);
    boundary_[i] = {x, y};
  }
}

QMatrix ModSymSpace::boundary_matrix() const {
  QMatrix m(gens_.size(), cusps_.size());
  for (std::size_t k = 0; k < gens_.size(); ++k) {
    auto [x, y] = boundary_[gens_[k]];
    m(k, x) += 1;
    m(k, y) -= 1;
  }
  return m;
}

const QMatrix& ModSymSpace::hecke(long p) const {
  if (!is_prime(Integer(p))) throw PreconditionError("Hecke operator index " + std::to_string(p) + " is not prime");
  std::lock_guard<std::mutex> guard(hecke_lock_);
  auto it = hecke_cache_.find(p);
  if (it != hecke_cache_.end()) return *it->second;
  const auto heil = merel_matrices(p);
  const std::size_t dim = gens_.size();
  auto t = std::make_unique<QMatrix>(dim, dim);
  std::vector<Rational> row(dim);
  for (std::size_t k = 0; k < dim; ++k) {
    std::fill(row.begin(), row.end(), Rational(0));
    auto [c, d] = p1_[gens_[k]];
    for (const auto& m : heil) {
      std::size_t i = p1_index(c * m[0] + d * m[2], c * m[1] + d * m[3]);
      if (i == npos) continue;
      accumulate(row, manin_[i], 1);
    }
    for (std::size_t j = 0; j < dim; ++j) (*t)(k, j) = row[j];
  }
  return *hecke_cache_.emplace(p, std::move(t)).first->second;
}

SparseVector ModSymSpace::zero_to_cusp(long a, long b) const {
  std::vector<Rational> acc(gens_.size());
  accumulate(acc, manin_[p1_index(0, 1)], 1);
  if (b < 0) {
    a = -a;
    b = -b;
  }
  if (b != 0) {
    // Convergents p_j / q_j of a / b; {p_{j-1}/q_{j-1}, p_j/q_j} is the
    // Manin symbol (q_j : (-1)^{j-1} q_{j-1}).
    long q_prev = 0, q_prev2 = 1;  // q_{-1}, q_{-2}
    long x = a, y = b;
    long sgn_j = -1;  // (-1)^{j-1} for j = 0
    while (y != 0) {
      long digit = floor_div(x, y);
      long r = x - digit * y;
      x = y;
      y = r;
      long q = digit * q_prev + q_prev2;
      accumulate(acc, manin_[p1_index(q, sgn_j * q_prev)], 1);
      q_prev2 = q_prev;
      q_prev = q;
      sgn_j = -sgn_j;
    }
  }
  return sparsify(acc);
}

QMatrix ModSymSpace::degeneracy_matrix(long t, const ModSymSpace& target) const {
  if (n_ % target.n_ != 0 || (n_ / target.n_) % t != 0)
    throw PreconditionError("degeneracy map: incompatible levels");
  QMatrix m(gens_.size(), target.dimension());
  for (std::size_t k = 0; k < gens_.size(); ++k) {
    auto [a, b, c, d] = lift_to_sl2(p1_[gens_[k]].first, p1_[gens_[k]].second, n_);
    // g{0, oo} = {b/d, a/c} -> {t b/d, t a/c} = {0, t a/c} - {0, t b/d}.
    for (const auto& [j, x] : target.zero_to_cusp(t * a, c)) m(k, j) += x;
    for (const auto& [j, x] : target.zero_to_cusp(t * b, d)) m(k, j) -= x;
  }
  return m;
}

Subspace Subspace::from_rows(std::shared_ptr<const ModSymSpace> space, QMatrix rows, SubspaceKind kind) {
  RowEchelon e = row_echelon(std::move(rows));
  Subspace s;
  s.space = std::move(space);
  s.basis = std::move(e.rref);
  s.pivots = std::move(e.pivots);
  s.kind = kind;
  return s;
}

QMatrix Subspace::restrict(const QMatrix& op) const {
  QMatrix image = basis * op;
  QMatrix a = image.select_cols(pivots);
  if (!(a * basis == image)) throw std::logic_error("subspace is not invariant under the operator");
  return a;
}

Subspace cuspidal_subspace(const std::shared_ptr<const ModSymSpace>& space) {
  return Subspace::from_rows(space, left_kernel(space->boundary_matrix()), SubspaceKind::Cuspidal);
}

Subspace cuspidal_new_subspace(const std::shared_ptr<const ModSymSpace>& space, const BuildOptions& opts) {
  QMatrix combined = space->boundary_matrix();
  const long n = space->level();
  for (const auto& [q, e] : factor_integer(Integer(n))) {
    const long ql = q.get_si();
    BuildOptions lower = opts;
    lower.reverse_enumeration = false;
    auto target = ModSymSpace::build(n / ql, lower);
    if (target->dimension() == 0) continue;
    combined = combined.hconcat(space->degeneracy_matrix(1, *target));
    combined = combined.hconcat(space->degeneracy_matrix(ql, *target));
  }
  return Subspace::from_rows(space, left_kernel(combined), SubspaceKind::New);
}

IntPoly monic_square_root(const IntPoly& f) {
  if (!f.is_monic() || f.degree() % 2 != 0) throw std::domain_error("monic_square_root: not a monic square");
  const int d = f.degree() / 2;
  std::vector<Rational> g(static_cast<std::size_t>(d + 1));
  g[static_cast<std::size_t>(d)] = 1;
  for (int i = 1; i <= d; ++i) {
    Rational acc(f.coeff(static_cast<std::size_t>(2 * d - i)));
    for (int j = 1; j < i; ++j) acc -= g[static_cast<std::size_t>(d - j)] * g[static_cast<std::size_t>(d - i + j)];
    g[static_cast<std::size_t>(d - i)] = acc / 2;
  }
  std::vector<Integer> out;
  for (const auto& x : g) {
    if (x.get_den() != 1) throw std::domain_error("monic_square_root: not a square in Z[X]");
    out.push_back(x.get_num());
  }
  IntPoly r(std::move(out));
  if (r * r != f) throw std::domain_error("monic_square_root: not a square in Z[X]");
  return r;
}

namespace {

std::string class_label(std::size_t k) {
  std::string s;
  do {
    s.insert(s.begin(), static_cast<char>('a' + k % 26));
    k /= 26;
  } while (k > 0);
  return s;
}

bool coeff_less(const IntPoly& a, const IntPoly& b) {
  return std::lexicographical_compare(a.coeffs().begin(), a.coeffs().end(), b.coeffs().begin(), b.coeffs().end());
}

}  // namespace

IntPoly class_charpoly(NewformClass& cls, long p) {
  if (!is_prime(Integer(p))) throw PreconditionError("p = " + std::to_string(p) + " is not prime");
  std::lock_guard<std::mutex> guard(*cls.lock);
  auto it = cls.charpolys.find(p);
  if (it != cls.charpolys.end()) return it->second;
  if (!cls.source) throw PreconditionError("missing charpoly for (" + cls.id + ", p=" + std::to_string(p) + ")");
  IntPoly g = monic_square_root(charpoly(cls.source->hecke(p)));
  cls.charpolys.emplace(p, g);
  return g;
}

void fill_charpolys(NewformClass& cls, const std::vector<long>& primes) {
  for (long p : primes) class_charpoly(cls, p);
}

std::vector<NewformClass> decompose_into_classes(const Subspace& new_space, const FactorOptions& fopts) {
  const long n = new_space.space->level();
  std::vector<Subspace> pending, done;
  if (new_space.dimension() > 0) pending.push_back(new_space);
  for (long p : primes_up_to(kMaxSplittingPrime)) {
    if (pending.empty()) break;
    if (n % p == 0) continue;
    std::vector<Subspace> next;
    for (const auto& piece : pending) {
      QMatrix a = piece.hecke(p);
      auto factors = factor_over_z(charpoly(a), fopts);
      if (factors.size() == 1) {
        const auto& f = factors[0];
        if (f.multiplicity == 2 && piece.dimension() == 2 * static_cast<std::size_t>(f.poly.degree()))
          done.push_back(piece);
        else
          next.push_back(piece);
        continue;
      }
      for (const auto& f : factors) {
        const std::size_t want = static_cast<std::size_t>(f.multiplicity * f.poly.degree());
        QMatrix k = left_kernel(evaluate(f.poly, a));
        if (k.rows() != want) k = left_kernel(evaluate(poly_pow(f.poly, static_cast<unsigned>(f.multiplicity)), a));
        if (k.rows() != want) throw std::logic_error("Hecke kernel has unexpected dimension");
        Subspace sub = Subspace::from_rows(new_space.space, k * piece.basis, SubspaceKind::Class);
        if (f.multiplicity == 2 && want == 2 * static_cast<std::size_t>(f.poly.degree()))
          done.push_back(std::move(sub));
        else
          next.push_back(std::move(sub));
      }
    }
    pending = std::move(next);
  }
  if (!pending.empty())
    throw Error(ErrorCode::Internal, "class separation failed at level " + std::to_string(n) + " using T_p, p <= " +
                                         std::to_string(kMaxSplittingPrime));

  std::vector<NewformClass> classes;
  for (auto& piece : done) {
    NewformClass c;
    c.level = n;
    c.weight = 2;
    c.degree = static_cast<int>(piece.dimension() / 2);
    piece.kind = SubspaceKind::Class;
    c.source = std::make_shared<const Subspace>(std::move(piece));
    classes.push_back(std::move(c));
  }
  // Sort by degree, then by charpolys at good primes; extend the prime range
  // only while ties remain.
  std::vector<long> key_primes;
  for (long p : primes_up_to(kMaxSplittingPrime)) {
    if (n % p == 0) continue;
    key_primes.push_back(p);
  }
  auto less = [&](NewformClass& x, NewformClass& y) {
    if (x.degree != y.degree) return x.degree < y.degree;
    for (long p : key_primes) {
      IntPoly a = class_charpoly(x, p), b = class_charpoly(y, p);
      if (a != b) return coeff_less(a, b);
    }
    return false;
  };
  for (auto& c : classes)
    for (long p : key_primes)
      if (p <= 13) class_charpoly(c, p);
  std::vector<std::size_t> order(classes.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) { return less(classes[i], classes[j]); });
  std::vector<NewformClass> sorted;
  for (std::size_t k = 0; k < order.size(); ++k) {
    NewformClass c = std::move(classes[order[k]]);
    c.id = std::to_string(n) + "." + class_label(k);
    sorted.push_back(std::move(c));
  }
  return sorted;
}

std::vector<NewformClass> newform_classes(long level, const BuildOptions& opts, const FactorOptions& fopts) {
  auto space = ModSymSpace::build(level, opts);
  return decompose_into_classes(cuspidal_new_subspace(space, opts), fopts);
}

}  // namespace congruon
