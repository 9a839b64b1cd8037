#include <doctest.h>

#include "congruon/error.hpp"
#include "congruon/modsym.hpp"
#include "congruon/padic.hpp"
#include "oracles.hpp"

using namespace congruon;

namespace {

// dim S_2^new(N) = sum over M | N of beta(N / M) dim S_2(M), beta the
// multiplicative function with beta(p) = -2, beta(p^2) = 1, beta(p^k) = 0
// for k >= 3.
long new_dimension_oracle(long n) {
  auto beta = [](long m) {
    long r = 1;
    for (long p = 2; p <= m; ++p) {
      if (m % p) continue;
      int k = 0;
      while (m % p == 0) {
        m /= p;
        ++k;
      }
      r *= (k == 1) ? -2 : (k == 2 ? 1 : 0);
    }
    return r;
  };
  long total = 0;
  for (long m = 1; m <= n; ++m)
    if (n % m == 0) total += beta(n / m) * 2 * oracle::genus_x0(m);
  return total;
}

}  // namespace

TEST_CASE("cuspidal dimension is twice the genus for N <= 120") {
  for (long n = 1; n <= 120; ++n) {
    auto space = ModSymSpace::build(n);
    INFO("N = " << n);
    long g = oracle::genus_x0(n);
    CHECK(cuspidal_subspace(space).dimension() == static_cast<std::size_t>(2 * g));
    CHECK(space->dimension() == static_cast<std::size_t>(2 * g) + space->num_cusps() - 1);
    CHECK(rank(space->relation_matrix()) + space->dimension() == space->p1_size());
  }
}

TEST_CASE("new subspace dimension matches the oracle") {
  for (long n : {11L, 22L, 33L, 37L, 44L, 60L, 63L, 64L, 90L, 100L, 155L}) {
    INFO("N = " << n);
    auto space = ModSymSpace::build(n);
    CHECK(static_cast<long>(cuspidal_new_subspace(space).dimension()) == new_dimension_oracle(n));
  }
}

TEST_CASE("small levels") {
  CHECK(cuspidal_subspace(ModSymSpace::build(1)).dimension() == 0);
  CHECK(cuspidal_subspace(ModSymSpace::build(11)).dimension() == 2);
  CHECK(cuspidal_subspace(ModSymSpace::build(71)).dimension() == 12);
  CHECK(newform_classes(22).empty());
  auto c11 = newform_classes(11);
  REQUIRE(c11.size() == 1);
  CHECK(c11[0].id == "11.a");
  CHECK(class_charpoly(c11[0], 2) == IntPoly{2, 1});
  CHECK(class_charpoly(c11[0], 3) == IntPoly{1, 1});
  CHECK(class_charpoly(c11[0], 11) == IntPoly{-1, 1});  // U_11 = 1
  auto c17 = newform_classes(17);
  REQUIRE(c17.size() == 1);
  CHECK(class_charpoly(c17[0], 59) == IntPoly{12, 1});
}

TEST_CASE("level 71 has two cubic classes") {
  auto cls = newform_classes(71);
  REQUIRE(cls.size() == 2);
  CHECK(cls[0].id == "71.a");
  CHECK(cls[1].id == "71.b");
  for (auto& c : cls) {
    CHECK(c.degree == 3);
    CHECK(is_irreducible(class_charpoly(c, 2)));
  }
  CHECK(class_charpoly(cls[0], 2) == IntPoly{-3, -4, 1, 1});
  CHECK(class_charpoly(cls[1], 2) == IntPoly{3, -5, 0, 1});
}

TEST_CASE("level 155 splits into degrees 1, 1, 1, 4, 4") {
  auto cls = newform_classes(155);
  std::vector<int> degs;
  for (const auto& c : cls) degs.push_back(c.degree);
  CHECK(degs == std::vector<int>{1, 1, 1, 4, 4});
}

TEST_CASE("Hecke operators commute") {
  for (long n : {37L, 44L, 71L}) {
    auto space = ModSymSpace::build(n);
    auto ps = primes_up_to(13);
    for (std::size_t i = 0; i < ps.size(); ++i)
      for (std::size_t j = i + 1; j < ps.size(); ++j) {
        INFO("N = " << n << " p = " << ps[i] << " q = " << ps[j]);
        const QMatrix& a = space->hecke(ps[i]);
        const QMatrix& b = space->hecke(ps[j]);
        CHECK(a * b == b * a);
      }
  }
}

TEST_CASE("cuspidal and new subspaces are Hecke stable") {
  for (long n : {55L, 63L, 71L}) {
    auto space = ModSymSpace::build(n);
    Subspace cusp = cuspidal_subspace(space);
    Subspace nw = cuspidal_new_subspace(space);
    for (long p : primes_up_to(13)) {
      CHECK_NOTHROW(cusp.hecke(p));
      CHECK_NOTHROW(nw.hecke(p));
    }
  }
}

TEST_CASE("class charpolys multiply to the new subspace charpoly") {
  for (long n : {71L, 109L, 155L}) {
    auto space = ModSymSpace::build(n);
    Subspace nw = cuspidal_new_subspace(space);
    auto cls = decompose_into_classes(nw);
    for (long p : primes_up_to(13)) {
      if (n % p == 0) continue;
      IntPoly prod{1};
      for (auto& c : cls) {
        IntPoly f = class_charpoly(c, p);
        CHECK(f.is_monic());
        CHECK(f.degree() == c.degree);
        prod = prod * f * f;
      }
      INFO("N = " << n << " p = " << p);
      CHECK(prod == charpoly(nw.hecke(p)));
    }
  }
}

TEST_CASE("reverse enumeration gives the same classes") {
  for (long n : {60L, 71L, 85L}) {
    BuildOptions rev;
    rev.reverse_enumeration = true;
    auto a = newform_classes(n);
    auto b = newform_classes(n, rev);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      CHECK(a[i].id == b[i].id);
      for (long p : primes_up_to(17)) CHECK(class_charpoly(a[i], p) == class_charpoly(b[i], p));
    }
  }
}

TEST_CASE("manin symbols and cusps") {
  auto space = ModSymSpace::build(11);
  CHECK(space->p1_size() == 12);
  CHECK(space->num_cusps() == 2);
  CHECK(space->p1_index(0, 1) != ModSymSpace::npos);
  CHECK(space->p1_index(12, 1) == space->p1_index(1, 1));
  CHECK(space->p1_index(2, 2) == space->p1_index(1, 1));
  auto s12 = ModSymSpace::build(12);
  CHECK(s12->p1_index(2, 4) == ModSymSpace::npos);
}

TEST_CASE("level cap and bad input") {
  CHECK_THROWS_AS(ModSymSpace::build(301), CapExceededError);
  CHECK_THROWS_AS(ModSymSpace::build(0), PreconditionError);
  BuildOptions big;
  big.level_cap = 400;
  CHECK_NOTHROW(ModSymSpace::build(301, big));
  auto space = ModSymSpace::build(11);
  CHECK_THROWS_AS(space->hecke(4), PreconditionError);
  NewformClass data;
  data.id = "x";
  data.level = 11;
  data.degree = 1;
  CHECK_THROWS_AS(class_charpoly(data, 2), PreconditionError);
}

TEST_CASE("monic square root") {
  IntPoly f{-3, -4, 1, 1};
  CHECK(monic_square_root(f * f) == f);
  CHECK_THROWS_AS(monic_square_root(IntPoly{-2, 0, 1}), std::domain_error);
}
