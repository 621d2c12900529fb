// Copyright 2026 The tate Authors.
// SPDX-License-Identifier: Apache-2.0
//
// Sparse Laurent polynomials over Q(zeta_p) in invertible formal variables
// g_T, one per nonzero torsion point T. Monomials are ordered
// lexicographically on their (point, exponent) factors with points compared
// by (a, b); every serializer relies on that order.
#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tate/cyclotomic.hpp"
#include "tate/torsion.hpp"

namespace tate {

class LaurentMonomial {
 public:
  using Factor = std::pair<TorsionPoint, int>;

  LaurentMonomial() = default;
  /// g_T^exp; T must be nonzero.
  static LaurentMonomial variable(const TorsionPoint& t, int exp = 1);

  const std::vector<Factor>& factors() const { return factors_; }
  bool is_one() const { return factors_.empty(); }
  int exponent_of(const TorsionPoint& t) const;

  LaurentMonomial operator*(const LaurentMonomial& other) const;
  LaurentMonomial inverse() const;
  LaurentMonomial pow(int n) const;

  bool operator==(const LaurentMonomial&) const = default;
  std::strong_ordering operator<=>(const LaurentMonomial& other) const;

  std::string to_string() const;

 private:
  std::vector<Factor> factors_;  // sorted by point, exponents nonzero
};

class LaurentPoly {
 public:
  using Terms = std::map<LaurentMonomial, CycNumber>;

  explicit LaurentPoly(int p) : p_(p) {}
  LaurentPoly(const LaurentMonomial& monomial, CycNumber coeff);
  explicit LaurentPoly(CycNumber constant);

  static LaurentPoly one(int p) { return LaurentPoly(CycNumber(p, 1)); }
  static LaurentPoly variable(const TorsionPoint& t, int exp = 1);

  int p() const { return p_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// A single term c * m with c nonzero.
  bool is_monomial() const { return terms_.size() == 1; }
  /// The CycNumber c when this is the constant polynomial c.
  std::optional<CycNumber> as_constant() const;

  void add_term(const LaurentMonomial& monomial, const CycNumber& coeff);

  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  friend LaurentPoly operator+(LaurentPoly lhs, const LaurentPoly& rhs) { return lhs += rhs; }
  friend LaurentPoly operator-(LaurentPoly lhs, const LaurentPoly& rhs) { return lhs -= rhs; }
  LaurentPoly operator-() const;
  LaurentPoly operator*(const LaurentPoly& other) const;
  LaurentPoly operator*(const CycNumber& scalar) const;
  LaurentPoly& operator*=(const LaurentPoly& other) { return *this = *this * other; }

  /// Defined only for single-term polynomials; throws DomainError otherwise.
  LaurentPoly inverse() const;
  LaurentPoly pow(int n) const;

  bool operator==(const LaurentPoly& other) const;

  std::string to_string() const;

 private:
  int p_;
  Terms terms_;
};

/// Exponent pair (i, j) of x^i y^j.
using XYExponent = std::pair<int, int>;

/// Laurent polynomial over Q(zeta_p) in the two commuting variables x, y.
class BivariatePoly {
 public:
  using Terms = std::map<XYExponent, CycNumber>;

  explicit BivariatePoly(int p) : p_(p) {}
  static BivariatePoly monomial(int p, XYExponent exp, CycNumber coeff);

  int p() const { return p_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(XYExponent exp, const CycNumber& coeff);
  BivariatePoly& operator+=(const BivariatePoly& other);
  BivariatePoly operator*(const BivariatePoly& other) const;
  BivariatePoly pow(int n) const;
  /// Value at x = y = 1.
  CycNumber evaluate_at_one() const;

  bool operator==(const BivariatePoly& other) const;
  std::string to_string() const;

 private:
  int p_;
  Terms terms_;
};

/// Image of a variable g_T, or nullopt when T is unmapped.
using XYMap = std::function<std::optional<XYExponent>(const TorsionPoint&)>;

/// Ring homomorphism g_T -> x^i y^j. Throws SubstitutionError when a variable
/// occurring in f is unmapped.
BivariatePoly substitute(const LaurentPoly& f, const XYMap& map);

/// g_{aP+bQ} -> x^a y^b with a, b in {0..p-1} relative to the basis.
XYMap multiplicative_map(const Basis& basis);

}  // namespace tate
