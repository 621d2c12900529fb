// Copyright 2026 The tate Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace tate {

/// Exact element of Q(zeta_p), stored in the power basis 1, zeta, ..., zeta^(p-2)
/// and kept reduced modulo Phi_p.
class CycNumber {
 public:
  explicit CycNumber(int p);
  CycNumber(int p, const mpq_class& rational);
  /// Takes coefficients of zeta^0 .. zeta^(p-2).
  CycNumber(int p, std::vector<mpq_class> coeffs);

  /// zeta^k for any integer k.
  static CycNumber root(int p, std::int64_t k);
  /// sum_k counts[k] * zeta^k, counts indexed by exponent mod p.
  static CycNumber from_root_counts(int p, std::span<const std::int64_t> counts);

  int p() const { return p_; }
  const std::vector<mpq_class>& coeffs() const { return coeffs_; }
  bool is_zero() const;
  bool is_one() const;

  CycNumber& operator+=(const CycNumber& other);
  CycNumber& operator-=(const CycNumber& other);
  CycNumber& operator*=(const CycNumber& other);
  friend CycNumber operator+(CycNumber lhs, const CycNumber& rhs) { return lhs += rhs; }
  friend CycNumber operator-(CycNumber lhs, const CycNumber& rhs) { return lhs -= rhs; }
  friend CycNumber operator*(CycNumber lhs, const CycNumber& rhs) { return lhs *= rhs; }
  CycNumber operator-() const;

  /// Multiplicative inverse by extended Euclid against Phi_p; throws
  /// DomainError on zero.
  CycNumber inverse() const;
  CycNumber pow(std::int64_t n) const;
  /// The automorphism zeta -> zeta^k, gcd(k, p) = 1.
  CycNumber galois(std::int64_t k) const;

  bool operator==(const CycNumber& other) const;

  /// Human-readable form such as "1 + 2*z - 1/3*z^2".
  std::string to_string() const;

 private:
  // Folds a length-p vector in the basis 1..zeta^(p-1) back to the power basis.
  static CycNumber reduce(int p, std::vector<mpq_class> full);

  int p_;
  std::vector<mpq_class> coeffs_;
};

}  // namespace tate
