// Copyright 2026 The tate Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>

namespace tate {

bool is_prime(std::int64_t n);

/// base^exp mod m for 0 <= base < m < 2^32 and any exp >= 0.
std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

/// Inverse modulo a prime m; throws DomainError on 0.
std::uint64_t mod_inv(std::uint64_t x, std::uint64_t m);

/// Whether g generates (Z/q)^x for prime q.
bool is_generator(std::uint64_t g, std::uint64_t q);

/// Smallest generator of (Z/q)^x for prime q.
std::uint64_t smallest_generator(std::uint64_t q);

/// Smallest prime q with q = 1 (mod p).
std::uint64_t smallest_prime_one_mod(int p);

}  // namespace tate
