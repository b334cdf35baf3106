#include "heaptl/laurent.hpp"

#include <doctest.h>

#include <random>

using heaptl::Int;
using heaptl::Laurent;

TEST_CASE("arithmetic basics") {
  Laurent v = Laurent::v(1);
  Laurent vi = Laurent::v(-1);
  CHECK(v * vi == Laurent(1));
  CHECK((v + vi) * (v + vi) == Laurent::v(2) + Laurent(2) + Laurent::v(-2));
  CHECK((v - v).is_zero());
  CHECK(Laurent(0).is_zero());
  CHECK((-v) == Laurent::monomial(-1, 1));
}

TEST_CASE("bar swaps v and v^-1") {
  Laurent p = Laurent::v(1) + Laurent(3);
  CHECK(p.bar() == Laurent::v(-1) + Laurent(3));
  Laurent sym = Laurent::v(1) + Laurent::v(-1);
  CHECK(sym.bar() == sym);
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> exp(-5, 5), coeff(-9, 9);
  for (int trial = 0; trial < 50; ++trial) {
    Laurent q;
    for (int k = 0; k < 6; ++k) q += Laurent::monomial(coeff(rng), exp(rng));
    CHECK(q.bar().bar() == q);
  }
}

TEST_CASE("lattice membership predicates") {
  CHECK(Laurent(1).in_neg());
  CHECK_FALSE(Laurent(1).in_strict_neg());
  CHECK(Laurent::v(-1).in_strict_neg());
  CHECK_FALSE(Laurent::v(1).in_neg());
  CHECK(Laurent().in_strict_neg());
  CHECK((Laurent::v(-3) + Laurent::v(-1)).in_strict_neg());
}

TEST_CASE("exact division") {
  Laurent delta = Laurent::v(1) + Laurent::v(-1);
  Laurent num = delta * delta * Laurent(3);
  Laurent q;
  REQUIRE(Laurent::divide(num, delta, q));
  CHECK(q == delta * Laurent(3));
  REQUIRE(Laurent::divide(q, delta, q));
  CHECK(q == Laurent(3));
  CHECK(q.is_constant());
  Laurent bad = delta + Laurent(1);
  CHECK_FALSE(Laurent::divide(bad, delta, q));
  // dividing by a longer polynomial fails cleanly
  CHECK_FALSE(Laurent::divide(Laurent(1) + Laurent::v(1), delta * delta, q));
}

TEST_CASE("large coefficients stay exact") {
  Laurent p = Laurent(1) + Laurent::v(1);
  Laurent pow(1);
  for (int i = 0; i < 64; ++i) pow *= p;
  // middle binomial coefficient C(64,32)
  CHECK(pow.coeff(32) == Int("1832624140942590534"));
  CHECK(pow.coeff(0) == 1);
  CHECK(pow.coeff(64) == 1);
}

TEST_CASE("rendering") {
  CHECK(Laurent().str() == "0");
  CHECK((Laurent::monomial(3, -2) + Laurent(1) + Laurent::v(2)).str() == "3v^-2 + 1 + v^2");
  CHECK((Laurent::v(1) - Laurent::v(-1)).str() == "-v^-1 + v");
  CHECK((-Laurent(2)).str() == "-2");
  CHECK(Laurent::v(1).str() == "v");
}
