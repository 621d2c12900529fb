// Copyright 2026 The tate Authors.
// SPDX-License-Identifier: Apache-2.0
#include "tate/modarith.hpp"

#include <vector>

#include "tate/errors.hpp"

namespace tate {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1U) result = result * base % m;
    base = base * base % m;
    exp >>= 1U;
  }
  return result;
}

std::uint64_t mod_inv(std::uint64_t x, std::uint64_t m) {
  if (x % m == 0) throw DomainError("zero has no inverse modulo " + std::to_string(m));
  return mod_pow(x, m - 2, m);
}

bool is_generator(std::uint64_t g, std::uint64_t q) {
  g %= q;
  if (g == 0) return false;
  std::uint64_t n = q - 1;
  std::vector<std::uint64_t> factors;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      factors.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) factors.push_back(n);
  for (auto f : factors) {
    if (mod_pow(g, (q - 1) / f, q) == 1) return false;
  }
  return true;
}

std::uint64_t smallest_generator(std::uint64_t q) {
  for (std::uint64_t g = 1; g < q; ++g) {
    if (is_generator(g, q)) return g;
  }
  throw DomainError("no generator modulo " + std::to_string(q));
}

std::uint64_t smallest_prime_one_mod(int p) {
  for (std::uint64_t q = static_cast<std::uint64_t>(p) + 1;; q += static_cast<std::uint64_t>(p)) {
    if (is_prime(static_cast<std::int64_t>(q))) return q;
  }
}

}  // namespace tate
