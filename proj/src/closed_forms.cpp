// Copyright 2026 The tate Authors.
// SPDX-License-Identifier: Apache-2.0
#include "tate/closed_forms.hpp"

namespace tate {

BivariatePoly multiplicative_target(int p) {
  BivariatePoly one_minus_xp = BivariatePoly::monomial(p, {0, 0}, CycNumber(p, 1));
  one_minus_xp.add_term({p, 0}, CycNumber(p, -1));
  return BivariatePoly::monomial(p, {0, p}, CycNumber(p, 1)) * one_minus_xp.pow(p - 1);
}

MultiplicativeCheck multiplicative_specialization(int p) {
  const Basis basis = Basis::standard(p);
  const auto form = gamma_form(basis, symbolic_gamma(p));
  BivariatePoly lhs = substitute(form.o_coefficient, multiplicative_map(basis));
  BivariatePoly rhs = multiplicative_target(p);
  const bool holds = lhs == rhs;
  return {std::move(lhs), std::move(rhs), holds};
}

}  // namespace tate
