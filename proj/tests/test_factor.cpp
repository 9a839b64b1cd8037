#include <doctest.h>

#include <algorithm>
#include <random>

#include "congruon/error.hpp"
#include "congruon/factor.hpp"
#include "congruon/modpoly.hpp"
#include "oracles.hpp"

using namespace congruon;

namespace {

IntPoly expand(const std::vector<PolyFactor>& fs) {
  IntPoly r{1};
  for (const auto& f : fs) r = poly_mul(r, poly_pow(f.poly, static_cast<unsigned>(f.multiplicity)));
  return r;
}

// Degrees of proper factors allowed by a mod-p factorization pattern.
std::vector<bool> subset_sums(const std::vector<int>& pattern, int total) {
  std::vector<bool> ok(static_cast<std::size_t>(total + 1), false);
  ok[0] = true;
  for (int d : pattern)
    for (int s = total; s >= d; --s)
      if (ok[static_cast<std::size_t>(s - d)]) ok[static_cast<std::size_t>(s)] = true;
  return ok;
}

}  // namespace

TEST_CASE("factor examples") {
  auto f = factor_over_z(IntPoly{-1, 0, 1});
  REQUIRE(f.size() == 2);
  CHECK(f[0] == PolyFactor{IntPoly{-1, 1}, 1});
  CHECK(f[1] == PolyFactor{IntPoly{1, 1}, 1});
  f = factor_over_z(IntPoly{1, 0, 1});
  REQUIRE(f.size() == 1);
  CHECK(f[0] == PolyFactor{IntPoly{1, 0, 1}, 1});
  f = factor_over_z(poly_pow(IntPoly{1, 1}, 80));
  REQUIRE(f.size() == 1);
  CHECK(f[0] == PolyFactor{IntPoly{1, 1}, 80});
}

TEST_CASE("hard recombination cases") {
  // Irreducible, but splits into quadratics modulo every prime.
  CHECK(is_irreducible(IntPoly{1, 0, -10, 0, 1}));
  CHECK(is_irreducible(IntPoly{1, 0, 0, 0, 0, 0, 0, 0, 1}));
  // X^8 - 1 = (X-1)(X+1)(X^2+1)(X^4+1)
  auto f = factor_over_z(IntPoly{-1, 0, 0, 0, 0, 0, 0, 0, 1});
  CHECK(f.size() == 4);
  CHECK(expand(f) == IntPoly{-1, 0, 0, 0, 0, 0, 0, 0, 1});
}

TEST_CASE("squarefree decomposition") {
  IntPoly p = poly_mul(poly_pow(IntPoly{-1, 1}, 3), poly_mul(IntPoly{1, 0, 1}, IntPoly{2, 1}));
  auto s = squarefree_decomposition(p);
  REQUIRE(s.size() == 2);
  CHECK(s[0].multiplicity == 1);
  CHECK(s[0].poly == poly_mul(IntPoly{1, 0, 1}, IntPoly{2, 1}));
  CHECK(s[1] == PolyFactor{IntPoly{-1, 1}, 3});
}

TEST_CASE("random products of known irreducibles") {
  // Eisenstein at 2, 3 or 5 and cyclotomic pieces, all irreducible.
  const std::vector<IntPoly> pool = {
      IntPoly{2, 1},         IntPoly{-3, 1},       IntPoly{1, 1, 1},        IntPoly{1, 0, 1},
      IntPoly{2, 0, 0, 1},   IntPoly{3, 3, 0, 1},  IntPoly{-5, 10, 5, 0, 1}, IntPoly{1, 1, 1, 1, 1},
      IntPoly{6, 0, 2, 0, 0, 1}, IntPoly{-2, 0, 1}, IntPoly{1, -1, 1},      IntPoly{10, 5, 0, 0, 0, 0, 1},
  };
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  std::uniform_int_distribution<int> count(1, 5), mult(1, 3);
  for (int t = 0; t < 60; ++t) {
    std::vector<PolyFactor> expect;
    int k = count(rng);
    for (int i = 0; i < k; ++i) {
      IntPoly g = pool[pick(rng)];
      auto it = std::find_if(expect.begin(), expect.end(), [&](const PolyFactor& e) { return e.poly == g; });
      if (it == expect.end())
        expect.push_back({g, mult(rng)});
      else
        ++it->multiplicity;
    }
    IntPoly p = expand(expect);
    auto got = factor_over_z(p);
    CHECK(expand(got) == p);
    CHECK(got.size() == expect.size());
    for (const auto& e : expect) CHECK(std::find(got.begin(), got.end(), e) != got.end());
    for (const auto& g : got) {
      CHECK(gcd_over_q(g.poly, g.poly.derivative()).degree() == 0);
      // No proper factor degree is allowed by all three primes unless the
      // patterns permit it; an irreducible always passes this.
      for (long pr : {101L, 103L, 107L}) {
        if (!is_squarefree_mod(g.poly, Integer(pr))) continue;
        auto sums = subset_sums(factorization_pattern_mod(g.poly, Integer(pr)), g.poly.degree());
        CHECK(sums[static_cast<std::size_t>(g.poly.degree())]);
      }
    }
  }
}

TEST_CASE("random polynomials factor back") {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 40; ++t) {
    IntPoly a = oracle::random_poly(rng, 1 + t % 4, 9, true);
    IntPoly b = oracle::random_poly(rng, 1 + t % 3, 9, false);
    IntPoly p = poly_mul(a, poly_mul(b, a)).primitive_part();
    auto got = factor_over_z(p);
    IntPoly back = expand(got);
    CHECK((back == p || back == -p));
  }
}

TEST_CASE("factor cap") {
  IntPoly big = IntPoly::monomial(1, 70) + IntPoly{2};
  FactorOptions opts;
  CHECK_THROWS_AS(factor_over_z(big, opts), CapExceededError);
  opts.degree_cap = 80;
  CHECK(factor_over_z(big, opts).size() == 1);
}

TEST_CASE("modular helpers") {
  CHECK(is_squarefree_mod(IntPoly{1, 0, 1}, Integer(3)));
  CHECK_FALSE(is_squarefree_mod(IntPoly{1, 0, 1}, Integer(2)));
  CHECK(coprime_mod(IntPoly{1, 0, 1}, IntPoly{-2, 0, 1}, Integer(5)));
  CHECK_FALSE(coprime_mod(IntPoly{1, 0, 1}, IntPoly{-2, 0, 1}, Integer(3)));
  CHECK_FALSE(coprime_mod(IntPoly{3}, IntPoly{1, 1}, Integer(3)));
  CHECK(factorization_pattern_mod(IntPoly{1, 0, 1}, Integer(3)) == std::vector<int>{2});
  CHECK(factorization_pattern_mod(IntPoly{1, 0, 1}, Integer(5)) == std::vector<int>{1, 1});
  CHECK(factorization_pattern_mod(poly_pow(IntPoly{1, 1}, 3), Integer(3)) == std::vector<int>{1, 1, 1});
  std::mt19937_64 rng(1);
  auto fs = factor_squarefree_mod(ModPoly(Integer(7), IntPoly{-1, 0, 0, 0, 0, 0, 1}), rng);
  CHECK(fs.size() == 6);
}
