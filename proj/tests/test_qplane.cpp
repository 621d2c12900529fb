// Copyright 2026 The tate Authors.
// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include "tate/qplane.hpp"
#include "test_support.hpp"

using namespace tate;

namespace {

QPlaneElement random_qp(testing::Rng& rng, int p, int terms) {
  QPlaneElement f(p);
  for (int i = 0; i < terms; ++i) {
    f.add_term(testing::uniform(rng, 0, 2 * p), testing::uniform(rng, 0, 2 * p), testing::random_cyc(rng, p, 2));
  }
  return f;
}

}  // namespace

TEST_CASE("commutation rule") {
  const int p = 3;
  const auto X = QPlaneElement::X(p), Y = QPlaneElement::Y(p);
  CHECK(Y * X == QPlaneElement::monomial(p, 1, 1, CycNumber::root(p, 2)));
  CHECK(X * Y == QPlaneElement::monomial(p, 1, 1));
  CHECK((Y * X) * X == QPlaneElement::monomial(p, 2, 1, CycNumber::root(p, 4)));
  CHECK(qp_mul(Y, X) == Y * X);
  CHECK_THROWS_AS(X * QPlaneElement::X(5), AmbientMismatch);
}

TEST_CASE("qplane identity at p = 3 expands to Y^3 - 2X^3Y^3 + X^6Y^3") {
  const auto id = verify_qplane_identity(3);
  CHECK(id.holds);
  QPlaneElement expected = QPlaneElement::monomial(3, 0, 3);
  expected += QPlaneElement::monomial(3, 3, 3, CycNumber(3, -2));
  expected += QPlaneElement::monomial(3, 6, 3);
  CHECK(id.lhs == expected);
  CHECK(id.rhs == expected);
}

TEST_CASE("qplane identity for p up to 11") {
  for (int p : {5, 7, 11}) {
    const auto id = verify_qplane_identity(p);
    CHECK(id.holds);
    CHECK(id.lhs.terms().size() == static_cast<std::size_t>(p));
  }
}

TEST_CASE("a single p-th power of Y X^i") {
  // (Y X)^p = zeta^(2(1+..+(p-1))) X^p Y^p = X^p Y^p.
  for (int p : {3, 5, 7}) {
    const auto yx = QPlaneElement::Y(p) * QPlaneElement::X(p);
    CHECK(yx.pow(p) == QPlaneElement::monomial(p, p, p));
  }
}

TEST_CASE("norm identity") {
  const auto three = verify_norm_identity(3);
  CHECK(three.holds);
  REQUIRE(three.lhs.coeffs.size() >= 7);
  CHECK(three.lhs.coeffs[0] == CycNumber(3, 1));
  CHECK(three.lhs.coeffs[3] == CycNumber(3, -2));
  CHECK(three.lhs.coeffs[6] == CycNumber(3, 1));
  for (int k : {1, 2, 4, 5}) CHECK(three.lhs.coeffs[static_cast<std::size_t>(k)].is_zero());
  for (int p : {5, 7, 11, 13}) CHECK(verify_norm_identity(p).holds);
}

TEST_CASE("associativity and centrality of p-th powers") {
  testing::Rng rng(41);
  for (int p : {3, 5}) {
    const auto Xp = QPlaneElement::monomial(p, p, 0), Yp = QPlaneElement::monomial(p, 0, p);
    for (int i = 0; i < 50; ++i) {
      const auto f = random_qp(rng, p, 3), g = random_qp(rng, p, 3), h = random_qp(rng, p, 2);
      CHECK((f * g) * h == f * (g * h));
      CHECK(Xp * f == f * Xp);
      CHECK(Yp * f == f * Yp);
    }
  }
}

TEST_CASE("embedding into the star algebra is a homomorphism") {
  testing::Rng rng(42);
  const int p = 3;
  const Basis basis = Basis::standard(p);
  const auto rho = RhoAssignment<SymbolicRing>::constant_one(SymbolicRing(p));
  for (int i = 0; i < 30; ++i) {
    const auto f = random_qp(rng, p, 2), g = random_qp(rng, p, 2);
    CHECK(to_star_algebra(f * g, basis) == star(to_star_algebra(f, basis), to_star_algebra(g, basis), rho));
  }
}
