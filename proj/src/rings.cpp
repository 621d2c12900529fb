// Copyright 2026 The tate Authors.
// SPDX-License-Identifier: Apache-2.0
#include "tate/rings.hpp"

#include <stdexcept>

#include "tate/errors.hpp"
#include "tate/modarith.hpp"

namespace tate {

ModularRing::ModularRing(int p, std::uint64_t q, std::uint64_t zeta) : p_(p), q_(q), zeta_(zeta % q) {
  if (q >= (1ULL << 31) || !is_prime(static_cast<std::int64_t>(q))) {
    throw std::invalid_argument("modulus must be a prime below 2^31, got " + std::to_string(q));
  }
  if (zeta_ == 1 || mod_pow(zeta_, static_cast<std::uint64_t>(p), q) != 1) {
    throw std::invalid_argument(std::to_string(zeta) + " does not have order " +
                                std::to_string(p) + " modulo " + std::to_string(q));
  }
}

std::uint64_t ModularRing::root(std::int64_t k) const {
  return mod_pow(zeta_, static_cast<std::uint64_t>(reduce_mod(k, p_)), q_);
}

std::uint64_t ModularRing::from_root_counts(std::span<const std::int64_t> counts) const {
  std::uint64_t sum = 0;
  for (std::size_t k = 0; k < counts.size(); ++k) {
    sum = (sum + from_int(counts[k]) * root(static_cast<std::int64_t>(k))) % q_;
  }
  return sum;
}

std::uint64_t ModularRing::inv(std::uint64_t x) const { return mod_inv(x, q_); }

std::uint64_t ModularRing::pow(std::uint64_t x, std::int64_t n) const {
  if (n < 0) return mod_pow(inv(x), static_cast<std::uint64_t>(-n), q_);
  return mod_pow(x, static_cast<std::uint64_t>(n), q_);
}

std::uint64_t ModularRing::from_int(std::int64_t n) const {
  const auto m = static_cast<std::int64_t>(q_);
  auto r = n % m;
  if (r < 0) r += m;
  return static_cast<std::uint64_t>(r);
}

}  // namespace tate
