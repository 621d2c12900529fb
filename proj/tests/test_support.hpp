// Copyright 2026 The tate Authors.
// SPDX-License-Identifier: Apache-2.0
//
// Helpers shared by the test binaries. Nothing here calls into the code
// paths it is used to check.
#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "tate/cyclotomic.hpp"

namespace tate::testing {

using Rng = std::mt19937_64;

inline int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

/// Value of x under zeta -> exp(2 pi i / p).
inline std::complex<long double> embed(const CycNumber& x) {
  const int p = x.p();
  std::complex<long double> sum = 0;
  for (std::size_t i = 0; i < x.coeffs().size(); ++i) {
    const long double angle = 2.0L * std::numbers::pi_v<long double> * static_cast<long double>(i) / p;
    sum += static_cast<long double>(x.coeffs()[i].get_d()) * std::polar(1.0L, angle);
  }
  return sum;
}

inline bool close(std::complex<long double> a, std::complex<long double> b, long double tol = 1e-9L) {
  return std::abs(a - b) <= tol * (1.0L + std::abs(a) + std::abs(b));
}

inline CycNumber random_cyc(Rng& rng, int p, int bound = 5) {
  std::vector<mpq_class> coeffs(static_cast<std::size_t>(p - 1));
  for (auto& c : coeffs) c = mpq_class(uniform(rng, -bound, bound), uniform(rng, 1, 3));
  for (auto& c : coeffs) c.canonicalize();
  return CycNumber(p, coeffs);
}

}  // namespace tate::testing
