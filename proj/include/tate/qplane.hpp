// Copyright 2026 The tate Authors.
// SPDX-License-Identifier: Apache-2.0
//
// Q(zeta_p)<X, Y> / (YX - zeta^2 XY) with elements kept in the normal form
// sum c_{a,b} X^a Y^b (X before Y). Products use
//
//   (X^a Y^b)(X^c Y^d) = zeta^(2bc) X^(a+c) Y^(b+d).
#pragma once

#include <map>
#include <utility>
#include <vector>

#include "tate/algebra.hpp"
#include "tate/cyclotomic.hpp"

namespace tate {

class QPlaneElement {
 public:
  using Terms = std::map<std::pair<int, int>, CycNumber>;

  explicit QPlaneElement(int p) : p_(p) {}
  static QPlaneElement monomial(int p, int x_exp, int y_exp, CycNumber coeff);
  static QPlaneElement monomial(int p, int x_exp, int y_exp) {
    return monomial(p, x_exp, y_exp, CycNumber(p, 1));
  }
  static QPlaneElement X(int p) { return monomial(p, 1, 0); }
  static QPlaneElement Y(int p) { return monomial(p, 0, 1); }

  int p() const { return p_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(int x_exp, int y_exp, const CycNumber& coeff);
  QPlaneElement& operator+=(const QPlaneElement& other);
  friend QPlaneElement operator+(QPlaneElement lhs, const QPlaneElement& rhs) { return lhs += rhs; }
  QPlaneElement operator*(const QPlaneElement& other) const;
  QPlaneElement operator*(const CycNumber& scalar) const;
  QPlaneElement pow(int n) const;

  bool operator==(const QPlaneElement& other) const;
  std::string to_string() const;

 private:
  int p_;
  Terms terms_;
};

QPlaneElement qp_mul(const QPlaneElement& f, const QPlaneElement& g);

struct QPlaneIdentity {
  QPlaneElement lhs;  // (sum_i zeta^(-i) Y X^i)^p
  QPlaneElement rhs;  // Y^p (1 - X^p)^(p-1)
  bool holds;
};

QPlaneIdentity verify_qplane_identity(int p);

/// Dense univariate polynomial over Q(zeta_p) in t, ascending coefficients.
struct UniPoly {
  int p;
  std::vector<CycNumber> coeffs;

  UniPoly operator*(const UniPoly& other) const;
  bool operator==(const UniPoly& other) const;
  std::string to_string() const;
};

struct NormIdentity {
  UniPoly lhs;  // prod_j sum_i zeta^(ij) t^i
  UniPoly rhs;  // (1 - t^p)^(p-1)
  bool holds;
};

NormIdentity verify_norm_identity(int p);

/// X -> delta_P, Y -> delta_Q, zeta -> eps(Q, P) into the star algebra with
/// rho = 1. X^a Y^b goes to delta_P^{*a} * delta_Q^{*b}.
AlgebraElement<SymbolicRing> to_star_algebra(const QPlaneElement& f, const Basis& basis);

}  // namespace tate
