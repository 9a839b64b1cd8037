#include <doctest.h>

#include <random>
#include <set>

#include "congruon/congruence.hpp"
#include "congruon/error.hpp"
#include "congruon/padic.hpp"
#include "oracles.hpp"

using namespace congruon;

namespace {

void check_identity(const IntPoly& p, const IntPoly& q, const CongruenceNumberResult& r) {
  CHECK(r.r * p + r.s * q == IntPoly::constant(r.c));
  CHECK(r.r.degree() < q.degree());
  CHECK(r.s.degree() < p.degree());
  CHECK(r.c > 0);
  Integer res = resultant(p, q);
  CHECK(mpz_divisible_p(res.get_mpz_t(), r.c.get_mpz_t()));
}

long split_oracle(const std::vector<long>& a, const std::vector<long>& b, long ell) {
  long best = 0;
  for (long x : a)
    for (long y : b) best = std::max(best, oracle::valuation(ell, y - x));
  return best;
}

}  // namespace

TEST_CASE("congruence number examples") {
  IntPoly p{12, 1};
  auto r = congruence_number(p, IntPoly{-60, 1});
  CHECK(r.c == 72);
  CHECK(r.r == IntPoly{1});
  CHECK(r.s == IntPoly{-1});
  check_identity(p, IntPoly{-60, 1}, r);
  r = congruence_number(p, IntPoly{60, 1});
  CHECK(r.c == 48);
  check_identity(p, IntPoly{60, 1}, r);
  r = congruence_number(IntPoly{1, 0, 1}, IntPoly{-2, 1});
  CHECK(r.c == 5);
  check_identity(IntPoly{1, 0, 1}, IntPoly{-2, 1}, r);
  CHECK_THROWS_AS(congruence_number(IntPoly{1, 0, 1}, IntPoly{1, 0, 1}), NotCoprimeError);
}

TEST_CASE("common root modulo ell") {
  CHECK(common_root_mod_ell(IntPoly{12, 1}, IntPoly{-60, 1}, Integer(3)));
  CHECK_FALSE(common_root_mod_ell(IntPoly{12, 1}, IntPoly{-60, 1}, Integer(5)));
  IntPoly p{0, 1}, q{1, 1};  // Res = 1
  for (long ell : {2L, 3L, 5L, 7L}) CHECK_FALSE(common_root_mod_ell(p, q, Integer(ell)));
}

TEST_CASE("bounds examples") {
  auto b = bounds_via_congruence_number(IntPoly{12, 1}, IntPoly{-60, 1}, Integer(3));
  CHECK(b.lower == 2);
  CHECK(b.upper == 2);
  CHECK(b.case_tag == BoundCase::CI);
  b = bounds_via_congruence_number(IntPoly{1, 0, 1}, IntPoly{-2, 0, 1}, Integer(3));
  CHECK(b.lower == 1);
  CHECK(b.upper == 1);
  CHECK(b.exact);
  b = bounds_via_congruence_number(IntPoly{12, 1}, IntPoly{-60, 1}, Integer(7));
  CHECK(b.lower == 0);
  CHECK(b.upper == 0);
  CHECK(b.case_tag == BoundCase::A);
  CHECK(to_string(BoundCase::CIII) == "c(iii)");
}

TEST_CASE("difference root polynomial") {
  CHECK(difference_root_poly(IntPoly{12, 1}, IntPoly{-60, 1}) == IntPoly{-72, 1});
  CHECK(difference_root_poly(IntPoly{0, 0, 1}, IntPoly{0, 0, 1}) == IntPoly{0, 0, 0, 0, 1});
  IntPoly f = difference_root_poly(IntPoly{1, 0, 1}, IntPoly{-2, 0, 1});
  CHECK(f.degree() == 4);
  CHECK(f.coeff(0) == 9);
  CHECK(f.is_monic());
}

TEST_CASE("exact exponent via Newton polygon") {
  CHECK(exact_exponent_newton(IntPoly{12, 1}, IntPoly{-60, 1}, Integer(2)) == 3);
  CHECK(exact_exponent_newton(IntPoly{12, 1}, IntPoly{-60, 1}, Integer(3)) == 2);
  CHECK(exact_exponent_newton(IntPoly{1, 0, 1}, IntPoly{-2, 0, 1}, Integer(3)) == 1);
}

TEST_CASE("max root congruence examples") {
  auto r = max_root_congruence(IntPoly{12, 1}, IntPoly{-60, 1}, Integer(3));
  CHECK(r.n == 2);
  CHECK(r.method == Method::CongruenceNumber);
  r = max_root_congruence(IntPoly{12, 1}, IntPoly{-60, 1}, Integer(7));
  CHECK(r.n == 0);
  CHECK(r.method == Method::CongruenceNumber);
  r = max_root_congruence(IntPoly{-10, 1}, IntPoly{-1, 1}, Integer(3));
  CHECK(r.n == 2);
  CHECK_THROWS_AS(max_root_congruence(poly_mul(IntPoly{-1, 1}, IntPoly{-10, 1}), IntPoly{-1, 1}, Integer(3)),
                  NotCoprimeError);
  CHECK_THROWS_AS(max_root_congruence(IntPoly{1, 2}, IntPoly{-1, 1}, Integer(3)), PreconditionError);
}

TEST_CASE("factored preprocessing") {
  // (X-1)^2 (X-10) against X+8: the pair (X-1, X+8) gives 3^2.
  RootCongruenceSolver s(poly_mul(poly_pow(IntPoly{-1, 1}, 2), IntPoly{-10, 1}), IntPoly{8, 1});
  auto b = s.bounds(Integer(3));
  CHECK(b.case_tag == BoundCase::Factored);
  CHECK(b.lower == 2);
  CHECK(b.upper == 2);
  CHECK(s.exact_exponent_newton(Integer(3)) == 2);
}

TEST_CASE("newton fallback fires on a d(iii) case") {
  IntPoly p = oracle::from_roots({1, 4, 7}), q = oracle::from_roots({28, 55});
  RootCongruenceSolver s(p, q);
  auto r = s.solve(Integer(3));
  CHECK(r.method == Method::NewtonPolygon);
  CHECK(r.n == 3);
  CHECK(r.bounds.lower <= 3);
  CHECK(r.bounds.upper >= 3);
}

TEST_CASE("split oracle, sandwich and symmetry") {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<long> root(-200, 200), deg(1, 4);
  int cases = 0;
  while (cases < 150) {
    std::vector<long> a(static_cast<std::size_t>(deg(rng))), b(static_cast<std::size_t>(deg(rng)));
    for (auto& x : a) x = root(rng);
    for (auto& x : b) x = root(rng);
    bool clash = false;
    for (long x : a)
      for (long y : b) clash |= (x == y);
    if (clash) continue;
    ++cases;
    IntPoly p = oracle::from_roots(a), q = oracle::from_roots(b);
    RootCongruenceSolver pq(p, q), qp(q, p);
    check_identity(p, q, pq.congruence());
    std::set<Integer> support_c, support_res;
    for (const auto& x : prime_divisors(pq.congruence().c)) support_c.insert(x);
    for (const auto& x : prime_divisors(resultant(p, q))) support_res.insert(x);
    CHECK(support_c == support_res);
    for (long ell : {2L, 3L, 5L, 7L}) {
      Integer L(ell);
      long expect = split_oracle(a, b, ell);
      auto r = pq.solve(L);
      CHECK(r.n == expect);
      CHECK(qp.solve(L).n == r.n);
      long newton = pq.exact_exponent_newton(L);
      CHECK(newton == expect);
      CHECK(r.bounds.lower <= newton);
      CHECK(newton <= r.bounds.upper);
      CHECK((newton >= 1) == common_root_mod_ell(p, q, L));
      CHECK(exact_exponent_newton(p.shift(5), q.shift(5), L) == newton);
    }
  }
}

TEST_CASE("sandwich on non-split polynomials") {
  std::mt19937_64 rng(4);
  int cases = 0;
  while (cases < 80) {
    IntPoly p = oracle::random_poly(rng, 1 + cases % 4, 20, true);
    IntPoly q = oracle::random_poly(rng, 1 + (cases / 4) % 3, 20, true);
    if (resultant(p, q) == 0) continue;
    ++cases;
    RootCongruenceSolver s(p, q);
    for (long ell : {2L, 3L, 5L}) {
      auto b = s.bounds(Integer(ell));
      long n = s.exact_exponent_newton(Integer(ell));
      CHECK(b.lower <= n);
      CHECK(n <= b.upper);
      if (b.exact) CHECK(b.lower == n);
    }
  }
}
