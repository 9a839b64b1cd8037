#include <doctest.h>

#include <random>

#include "congruon/padic.hpp"
#include "oracles.hpp"

using namespace congruon;

TEST_CASE("valuations") {
  CHECK(val(Integer(3), Integer(72)) == 2);
  CHECK(val(Integer(2), Integer(72)) == 3);
  CHECK_FALSE(val(Integer(5), Integer(0)).has_value());
  CHECK(val(Integer(7), Integer(-49)) == 2);
  CHECK(val(Integer(5), Integer(1)) == 0);
}

TEST_CASE("gamma") {
  for (long e = 1; e <= 8; ++e) CHECK(gamma(e, 1) == 1);
  for (long n = 1; n <= 16; ++n) CHECK(gamma(1, n) == n);
  CHECK(gamma(2, 3) == 5);
  for (long e1 = 1; e1 <= 8; ++e1)
    for (long e2 = 1; e2 <= 8; ++e2)
      for (long n = 1; n <= 16; ++n) CHECK(gamma(e1 * e2, n) == gamma(e2, gamma(e1, n)));
}

TEST_CASE("primality and factoring") {
  CHECK(is_prime(Integer(2)));
  CHECK(is_prime(Integer(257)));
  CHECK_FALSE(is_prime(Integer(1)));
  CHECK_FALSE(is_prime(Integer(561)));
  CHECK(is_prime(Integer("18446744073709551557")));
  CHECK_FALSE(is_prime(Integer("3825123056546413051")));
  CHECK(is_prime(Integer("170141183460469231731687303715884105727")));
  auto f = factor_integer(Integer(72));
  REQUIRE(f.size() == 2);
  CHECK(f[0] == std::pair<Integer, long>{2, 3});
  CHECK(f[1] == std::pair<Integer, long>{3, 2});
  Integer n = Integer("1000000007") * Integer("998244353") * 6869 * 6869;
  auto g = factor_integer(-n);
  REQUIRE(g.size() == 3);
  CHECK(g[0].first == 6869);
  CHECK(g[0].second == 2);
  CHECK(prime_divisors(Integer(1)).empty());
  CHECK_THROWS(PrimePower::make(Integer(9), 1));
  CHECK(PrimePower::make(Integer(3), 2).value() == 9);
}

TEST_CASE("newton polygon examples") {
  auto np = newton_polygon(Integer(3), IntPoly{-9, 0, 1});
  REQUIRE(np.segments.size() == 1);
  CHECK(np.segments[0] == NewtonSegment{Rational(1), 2});
  np = newton_polygon(Integer(2), IntPoly{-72, 1});
  REQUIRE(np.segments.size() == 1);
  CHECK(np.segments[0] == NewtonSegment{Rational(3), 1});
  np = newton_polygon(Integer(5), IntPoly{1, 1, 1});
  REQUIRE(np.segments.size() == 1);
  CHECK(np.segments[0] == NewtonSegment{Rational(0), 2});
  np = newton_polygon(Integer(2), IntPoly{0, 0, 4, 1});
  CHECK(np.infinite_roots == 2);
  CHECK(np.slope_multiset() == std::vector<Rational>{2});
  // Y^2 - 3: two roots of valuation 1/2.
  np = newton_polygon(Integer(3), IntPoly{-3, 0, 1});
  CHECK(np.slope_multiset() == std::vector<Rational>{Rational(1, 2), Rational(1, 2)});
}

TEST_CASE("exponent from slope") {
  CHECK(exponent_from_slope(Rational(1, 2)) == 1);
  CHECK(exponent_from_slope(Rational(2)) == 2);
  CHECK(exponent_from_slope(Rational(0)) == 0);
  CHECK(exponent_from_slope(Rational(7, 3)) == 3);
}

TEST_CASE("newton polygon invariants") {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<long> root(-200, 200), deg(1, 6);
  for (long ell : {2L, 3L, 5L, 7L}) {
    for (int t = 0; t < 100; ++t) {
      std::vector<long> roots(static_cast<std::size_t>(deg(rng)));
      for (auto& r : roots) {
        do r = root(rng);
        while (r == 0);
      }
      IntPoly f = oracle::from_roots(roots);
      auto np = newton_polygon(Integer(ell), f);
      std::vector<Rational> expect;
      for (long r : roots) expect.emplace_back(oracle::valuation(ell, r));
      std::sort(expect.rbegin(), expect.rend());
      CHECK(np.slope_multiset() == expect);
      // Balance and unit scaling.
      Rational total = 0;
      for (const auto& s : np.segments) total += s.slope * s.length;
      CHECK(total == val_finite(Integer(ell), f.coeff(0)) - val_finite(Integer(ell), f.leading()));
      long unit = (ell == 2) ? 3 : 2;
      CHECK(newton_polygon(Integer(ell), f * Integer(unit)).slope_multiset() == expect);
      for (std::size_t i = 0; i + 1 < np.segments.size(); ++i) CHECK(np.segments[i].slope > np.segments[i + 1].slope);
    }
  }
}
