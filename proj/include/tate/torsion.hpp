// Copyright 2026 The tate Authors.
// SPDX-License-Identifier: Apache-2.0
//
// The p-torsion E[p] modeled as (Z/p)^2 with the fixed basis P = (1,0),
// Q = (0,1), and the Weil pairing as the alternating form
//
//   e_p((a,b), (c,d)) = zeta^(b*c - a*d),
//
// so that e_p(Q, P) = zeta. This is the single orientation constant of the
// library; flipping it negates every pairing value.
#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace tate {

/// Convention string echoed by every tool that reports pairing values.
inline constexpr std::string_view kConvention = "e(Q,P)=zeta";

class OddPrime {
 public:
  static constexpr int kDefaultMax = 13;

  /// Throws std::invalid_argument unless value is an odd prime in [3, max_value].
  explicit OddPrime(int value, int max_value = kDefaultMax);

  int value() const { return value_; }
  operator int() const { return value_; }

 private:
  int value_;
};

/// Reduces n into {0, ..., m-1}.
constexpr int reduce_mod(std::int64_t n, int m) {
  auto r = static_cast<int>(n % m);
  return r < 0 ? r + m : r;
}

class TorsionPoint {
 public:
  TorsionPoint(int p, std::int64_t a, std::int64_t b)
      : p_(p), a_(reduce_mod(a, p)), b_(reduce_mod(b, p)) {}

  static TorsionPoint zero(int p) { return {p, 0, 0}; }
  /// Parses "a,b".
  static TorsionPoint parse(int p, std::string_view text);

  int p() const { return p_; }
  int a() const { return a_; }
  int b() const { return b_; }
  bool is_zero() const { return a_ == 0 && b_ == 0; }

  /// Position in the canonical (a, b)-lexicographic enumeration.
  int index() const { return a_ * p_ + b_; }
  static TorsionPoint from_index(int p, int index) {
    return {p, index / p, index % p};
  }

  TorsionPoint operator+(const TorsionPoint& other) const;
  TorsionPoint operator-(const TorsionPoint& other) const;
  TorsionPoint operator-() const { return {p_, -a_, -b_}; }
  TorsionPoint operator*(std::int64_t n) const { return {p_, a_ * n, b_ * n}; }

  bool operator==(const TorsionPoint&) const = default;
  auto operator<=>(const TorsionPoint&) const = default;

  std::string to_string() const;

 private:
  int p_;
  int a_;
  int b_;
};

/// All p^2 points in canonical order, O first.
std::vector<TorsionPoint> all_points(int p);

/// zeta^exponent for the distinguished primitive p-th root of unity.
class RootOfUnity {
 public:
  RootOfUnity(int p, std::int64_t exponent)
      : p_(p), exponent_(reduce_mod(exponent, p)) {}

  static RootOfUnity one(int p) { return {p, 0}; }

  int p() const { return p_; }
  int exponent() const { return exponent_; }
  bool is_one() const { return exponent_ == 0; }

  RootOfUnity operator*(const RootOfUnity& other) const;
  RootOfUnity pow(std::int64_t n) const { return {p_, exponent_ * n}; }
  RootOfUnity inverse() const { return {p_, -exponent_}; }

  bool operator==(const RootOfUnity&) const = default;

 private:
  int p_;
  int exponent_;
};

RootOfUnity weil(const TorsionPoint& s, const TorsionPoint& t);

/// The square root e_p^((p+1)/2) of the Weil pairing inside mu_p.
RootOfUnity epsilon(const TorsionPoint& s, const TorsionPoint& t);

/// w(S): the character T -> e_p(S, T), tabulated in canonical point order.
std::vector<RootOfUnity> w_map(const TorsionPoint& s);

/// An ordered generating pair (P, Q) of E[p].
class Basis {
 public:
  /// Throws BasisError when det(P, Q) = 0 mod p.
  Basis(const TorsionPoint& p_point, const TorsionPoint& q_point);

  static Basis standard(int p) { return {{p, 1, 0}, {p, 0, 1}}; }

  int p() const { return p_.p(); }
  const TorsionPoint& P() const { return p_; }
  const TorsionPoint& Q() const { return q_; }

  /// Coordinates (a, b) in {0..p-1}^2 with t = a*P + b*Q.
  std::pair<int, int> coordinates(const TorsionPoint& t) const;

 private:
  TorsionPoint p_;
  TorsionPoint q_;
  int det_inverse_;
};

}  // namespace tate
