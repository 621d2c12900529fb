// Copyright 2026 The tate Authors.
// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include "tate/errors.hpp"
#include "tate/torsion.hpp"
#include "test_support.hpp"

using namespace tate;

TEST_CASE("odd prime guard") {
  CHECK(OddPrime(3).value() == 3);
  CHECK(OddPrime(13).value() == 13);
  CHECK_THROWS_AS(OddPrime(2), std::invalid_argument);
  CHECK_THROWS_AS(OddPrime(9), std::invalid_argument);
  CHECK_THROWS_AS(OddPrime(17), std::invalid_argument);
  CHECK(OddPrime(17, 17).value() == 17);
}

TEST_CASE("points reduce and parse") {
  const TorsionPoint t(5, -1, 7);
  CHECK(t.a() == 4);
  CHECK(t.b() == 2);
  CHECK(TorsionPoint::parse(5, "4,2") == t);
  CHECK(TorsionPoint::parse(5, "-1,12") == t);
  CHECK_THROWS(TorsionPoint::parse(5, "4;2"));
  CHECK_THROWS(TorsionPoint::parse(5, "x,2"));
  CHECK((t + (-t)).is_zero());
  CHECK(TorsionPoint::from_index(5, t.index()) == t);
  CHECK_THROWS_AS(TorsionPoint(3, 1, 0) + TorsionPoint(5, 1, 0), AmbientMismatch);
}

TEST_CASE("weil pairing examples") {
  const TorsionPoint P(3, 1, 0), Q(3, 0, 1);
  CHECK(weil(Q, P) == RootOfUnity(3, 1));
  CHECK(weil(P, Q) == RootOfUnity(3, 2));
  CHECK(weil(TorsionPoint(5, 1, 2), TorsionPoint(5, 3, 4)) == RootOfUnity(5, 2));
  for (const auto& s : all_points(5)) CHECK(weil(s, s).is_one());
  CHECK_THROWS_AS(weil(P, TorsionPoint(5, 1, 0)), AmbientMismatch);
}

TEST_CASE("epsilon examples") {
  const TorsionPoint P(3, 1, 0), Q(3, 0, 1);
  // (p+1)/2 = 2 and e(Q,P) = zeta, so eps(Q,P) = zeta^2.
  CHECK(epsilon(Q, P) == RootOfUnity(3, 2));
  CHECK(epsilon(P, P).is_one());
  for (int p : {3, 5, 7}) {
    for (const auto& s : all_points(p)) {
      for (const auto& t : all_points(p)) CHECK(epsilon(s, t).pow(2) == weil(s, t));
    }
  }
}

TEST_CASE("weil laws exhaustive for small p") {
  for (int p : {3, 5, 7}) {
    const auto points = all_points(p);
    for (const auto& s : points) {
      for (const auto& t : points) {
        CHECK((weil(s, t) * weil(t, s)).is_one());
      }
    }
    for (const auto& s : points) {
      if (s.is_zero()) continue;
      bool witnessed = false;
      for (const auto& t : points) witnessed = witnessed || !weil(s, t).is_one();
      CHECK(witnessed);
    }
  }
  for (int p : {3, 5}) {
    const auto points = all_points(p);
    for (const auto& s : points) {
      for (const auto& t : points) {
        for (const auto& u : points) CHECK(weil(s + t, u) == weil(s, u) * weil(t, u));
      }
    }
  }
  testing::Rng rng(7);
  for (int i = 0; i < 2000; ++i) {
    const TorsionPoint s(7, testing::uniform(rng, 0, 6), testing::uniform(rng, 0, 6));
    const TorsionPoint t(7, testing::uniform(rng, 0, 6), testing::uniform(rng, 0, 6));
    const TorsionPoint u(7, testing::uniform(rng, 0, 6), testing::uniform(rng, 0, 6));
    CHECK(weil(s + t, u) == weil(s, u) * weil(t, u));
  }
}

TEST_CASE("w map") {
  for (const auto& value : w_map(TorsionPoint::zero(5))) CHECK(value.is_one());
  // p = 3, S = P: T -> zeta^(-b_T), from the determinant formula on all 9 points.
  const auto values = w_map(TorsionPoint(3, 1, 0));
  for (const auto& t : all_points(3)) {
    CHECK(values[static_cast<std::size_t>(t.index())] == RootOfUnity(3, -t.b()));
  }
}

TEST_CASE("basis") {
  const Basis standard = Basis::standard(5);
  CHECK(standard.coordinates(TorsionPoint(5, 3, 4)) == std::pair{3, 4});
  const Basis skew(TorsionPoint(5, 1, 2), TorsionPoint(5, 0, 3));
  for (const auto& t : all_points(5)) {
    const auto [a, b] = skew.coordinates(t);
    CHECK(skew.P() * a + skew.Q() * b == t);
  }
  CHECK_THROWS_AS(Basis(TorsionPoint(3, 1, 0), TorsionPoint(3, 2, 0)), BasisError);
  CHECK_THROWS_AS(Basis(TorsionPoint::zero(3), TorsionPoint(3, 0, 1)), BasisError);
}
