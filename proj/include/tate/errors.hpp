// Copyright 2026 The tate Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace tate {

/// Two values built over different primes were combined.
class AmbientMismatch : public std::logic_error {
 public:
  AmbientMismatch(int lhs, int rhs)
      : std::logic_error("ambient prime mismatch: " + std::to_string(lhs) +
                         " vs " + std::to_string(rhs)) {}
};

/// The pair (P, Q) does not generate the p-torsion.
class BasisError : public std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// An argument lies outside the domain of an operation (zero element,
/// non-root of unity, non-invertible coefficient, ...).
class DomainError : public std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

class SubstitutionError : public std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A structural invariant of an input assignment does not hold.
class ValidationError : public std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

inline void require_same_prime(int lhs, int rhs) {
  if (lhs != rhs) throw AmbientMismatch(lhs, rhs);
}

}  // namespace tate
