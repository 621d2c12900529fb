// Copyright 2026 The tate Authors.
// SPDX-License-Identifier: Apache-2.0
//
// Coefficient rings for the star algebra. A ring is a small value object that
// knows the ambient prime p, how to embed zeta_p^k, and how to do arithmetic
// on its value_type. The symbolic ring works over Laurent polynomials in the
// g_T; the modular ring evaluates in F_q with zeta_p mapped to a fixed
// element of order p.
#pragma once

#include <concepts>
#include <cstdint>
#include <span>
#include <string>

#include "tate/laurent.hpp"

namespace tate {

template <class R>
concept CoefficientRing = requires(const R& ring, const typename R::value_type& x,
                                   typename R::value_type& acc, std::int64_t k,
                                   std::span<const std::int64_t> counts) {
  { ring.prime() } -> std::convertible_to<int>;
  { ring.zero() } -> std::same_as<typename R::value_type>;
  { ring.one() } -> std::same_as<typename R::value_type>;
  { ring.root(k) } -> std::same_as<typename R::value_type>;
  { ring.from_root_counts(counts) } -> std::same_as<typename R::value_type>;
  { ring.add(x, x) } -> std::same_as<typename R::value_type>;
  { ring.mul(x, x) } -> std::same_as<typename R::value_type>;
  { ring.inv(x) } -> std::same_as<typename R::value_type>;
  { ring.pow(x, k) } -> std::same_as<typename R::value_type>;
  { ring.is_zero(x) } -> std::convertible_to<bool>;
  { ring.equal(x, x) } -> std::convertible_to<bool>;
  { ring.to_string(x) } -> std::convertible_to<std::string>;
  ring.accumulate(acc, x);
};

class SymbolicRing {
 public:
  using value_type = LaurentPoly;

  explicit SymbolicRing(int p) : p_(p) {}

  int prime() const { return p_; }
  LaurentPoly zero() const { return LaurentPoly(p_); }
  LaurentPoly one() const { return LaurentPoly::one(p_); }
  LaurentPoly root(std::int64_t k) const { return LaurentPoly(CycNumber::root(p_, k)); }
  LaurentPoly from_root_counts(std::span<const std::int64_t> counts) const {
    return LaurentPoly(CycNumber::from_root_counts(p_, counts));
  }
  LaurentPoly add(const LaurentPoly& x, const LaurentPoly& y) const { return x + y; }
  LaurentPoly mul(const LaurentPoly& x, const LaurentPoly& y) const { return x * y; }
  LaurentPoly inv(const LaurentPoly& x) const { return x.inverse(); }
  LaurentPoly pow(const LaurentPoly& x, std::int64_t n) const { return x.pow(static_cast<int>(n)); }
  bool is_zero(const LaurentPoly& x) const { return x.is_zero(); }
  bool equal(const LaurentPoly& x, const LaurentPoly& y) const { return x == y; }
  std::string to_string(const LaurentPoly& x) const { return x.to_string(); }
  void accumulate(LaurentPoly& acc, const LaurentPoly& x) const { acc += x; }

 private:
  int p_;
};

/// F_q with zeta_p -> zeta, an element of exact order p (so p | q - 1).
class ModularRing {
 public:
  using value_type = std::uint64_t;

  /// Throws std::invalid_argument unless q is a prime below 2^31 and zeta
  /// has exact multiplicative order p modulo q.
  ModularRing(int p, std::uint64_t q, std::uint64_t zeta);

  int prime() const { return p_; }
  std::uint64_t modulus() const { return q_; }
  std::uint64_t zeta() const { return zeta_; }

  std::uint64_t zero() const { return 0; }
  std::uint64_t one() const { return 1; }
  std::uint64_t root(std::int64_t k) const;
  std::uint64_t from_root_counts(std::span<const std::int64_t> counts) const;
  std::uint64_t add(std::uint64_t x, std::uint64_t y) const { return (x + y) % q_; }
  std::uint64_t mul(std::uint64_t x, std::uint64_t y) const { return x * y % q_; }
  std::uint64_t inv(std::uint64_t x) const;
  std::uint64_t pow(std::uint64_t x, std::int64_t n) const;
  bool is_zero(std::uint64_t x) const { return x == 0; }
  bool equal(std::uint64_t x, std::uint64_t y) const { return x == y; }
  std::string to_string(std::uint64_t x) const { return std::to_string(x); }
  void accumulate(std::uint64_t& acc, std::uint64_t x) const { acc = (acc + x) % q_; }

  /// Reduces an arbitrary integer into F_q.
  std::uint64_t from_int(std::int64_t n) const;

 private:
  int p_;
  std::uint64_t q_;
  std::uint64_t zeta_;
};

static_assert(CoefficientRing<SymbolicRing>);
static_assert(CoefficientRing<ModularRing>);

}  // namespace tate
