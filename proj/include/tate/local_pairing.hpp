// Copyright 2026 The tate Authors.
// SPDX-License-Identifier: Apache-2.0
//
// Tame local-field model. K has residue field F_q (q prime, q = 1 mod p) and
// uniformizer pi; elements are pi^n [u] with [u] the Teichmuller lift of
// u in F_q^x. Because the residue characteristic differs from p, 1-units are
// p-th powers and
//
//   K^x / (K^x)^p  =  Z/p  x  F_q^x / (F_q^x)^p,
//
// so every Hilbert symbol is given by the tame formula
//
//   {a, b} = ((-1)^(v(a)v(b)) u_a^v(b) u_b^-v(a))^((q-1)/p)  in mu_p(F_q).
//
// Wildly ramified fields are outside this model.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "tate/rings.hpp"

namespace tate {

/// k/p in (1/p)Z/Z.
class PairingValue {
 public:
  PairingValue(int p, std::int64_t k) : p_(p), k_(reduce_mod(k, p)) {}

  int p() const { return p_; }
  int numerator() const { return k_; }

  PairingValue operator+(const PairingValue& other) const;
  PairingValue operator-() const { return {p_, -k_}; }
  PairingValue operator*(std::int64_t n) const { return {p_, static_cast<std::int64_t>(k_) * n}; }
  bool operator==(const PairingValue&) const = default;

  /// "k/p", e.g. "1/3" or "0/3".
  std::string to_string() const;

 private:
  int p_;
  int k_;
};

class TameFieldModel {
 public:
  /// Throws std::invalid_argument unless q is prime, p | q - 1 and g generates
  /// F_q^x. Without a generator the smallest one is chosen.
  TameFieldModel(int p, std::uint64_t q, std::optional<std::uint64_t> generator = std::nullopt);

  int p() const { return p_; }
  std::uint64_t q() const { return q_; }
  std::uint64_t generator() const { return g_; }
  /// g^((q-1)/p), identified with e_p(Q, P).
  std::uint64_t zeta() const { return zeta_; }

  /// F_q with zeta_p -> zeta(); the numeric coefficient ring of the model.
  ModularRing residue_ring() const { return {p_, q_, zeta_}; }

 private:
  int p_;
  std::uint64_t q_;
  std::uint64_t g_;
  std::uint64_t zeta_;
};

/// pi^val [unit].
class TameElement {
 public:
  /// Throws DomainError when unit = 0 mod q.
  TameElement(std::int64_t val, std::int64_t unit, const TameFieldModel& model);

  /// Parses "n:u".
  static TameElement parse(std::string_view text, const TameFieldModel& model);

  std::int64_t val() const { return val_; }
  std::uint64_t unit() const { return unit_; }
  std::uint64_t modulus() const { return q_; }

  TameElement operator*(const TameElement& other) const;
  TameElement pow(std::int64_t n) const;
  bool operator==(const TameElement&) const = default;

  std::string to_string() const;

 private:
  std::int64_t val_;
  std::uint64_t unit_;
  std::uint64_t q_;
};

/// Whether a and b have the same class in K^x / (K^x)^p.
bool same_class(const TameElement& a, const TameElement& b, const TameFieldModel& model);

/// The Hilbert symbol {a, b}, read through iota as an element of (1/p)Z/Z.
PairingValue hilbert(const TameElement& a, const TameElement& b, const TameFieldModel& model);

/// Class of 1 - a in K^x / (K^x)^p; nullopt when 1 - a = 0 exactly (a = [1]).
std::optional<TameElement> one_minus(const TameElement& a, const TameFieldModel& model);

/// zeta^k -> k/p; throws DomainError when z is not in mu_p(F_q).
PairingValue iota(std::uint64_t z, const TameFieldModel& model);

/// q_K for the full-torsion, multiplicative-gamma case:
/// iota {alpha(P), alpha(Q) (1 - alpha(P))^(p-1)}, or 0 when that element is 0.
PairingValue qk_split(const TameElement& alpha_p, const TameElement& alpha_q, const TameFieldModel& model);

/// {a, b} over the unramified extension of degree d, evaluated with the
/// exponent (q^d - 1)/p on residues in F_q. Throws std::logic_error if the
/// result disagrees with d * hilbert(a, b).
PairingValue unramified_scaling(const TameElement& a, const TameElement& b, int d, const TameFieldModel& model);

}  // namespace tate
