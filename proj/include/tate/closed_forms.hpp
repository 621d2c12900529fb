// Copyright 2026 The tate Authors.
// SPDX-License-Identifier: Apache-2.0
//
// Delta_{P,Q} = delta_Q + delta_{Q+P} + ... + delta_{Q+(p-1)P} and three
// index-tuple expansions of its p-th star power:
//
//   gamma form        sum over i in (Z/p)^p, p | sum i, of
//                       e(Q,P)^(sum l*i_l) * prod_l gamma(Q + i_l P)
//   rho form          same index set, weight
//                       e(Q,P)^(sum l*i_l) * prod_{j<p} rho(jQ + (i_1+..+i_j)P, Q + i_{j+1}P)
//   intermediate      all of (Z/p)^p, weight eps(Q,P)^(sum (2l-1) i_l), monomial
//                       prod_l gamma(Q + i_l P) / gamma((sum i) P) at delta_{(sum i)P}
//
// Tuples are enumerated odometer-style; for the restricted index set the last
// index is solved from the congruence, so exactly p^(p-1) tuples are visited.
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "tate/algebra.hpp"
#include "tate/laurent.hpp"

namespace tate {

template <CoefficientRing Ring>
struct ClosedFormResult {
  typename Ring::value_type o_coefficient;
  std::optional<AlgebraElement<Ring>> full_element;
  std::uint64_t tuple_count = 0;
};

template <CoefficientRing Ring>
AlgebraElement<Ring> build_delta(const Ring& ring, const Basis& basis) {
  require_same_prime(ring.prime(), basis.p());
  AlgebraElement<Ring> delta(ring);
  for (int i = 0; i < basis.p(); ++i) delta.add_term(basis.Q() + basis.P() * i, ring.one());
  return delta;
}

/// Throws BasisError unless (P, Q) generates E[p].
template <CoefficientRing Ring>
AlgebraElement<Ring> build_delta(const Ring& ring, const TorsionPoint& p_point, const TorsionPoint& q_point) {
  return build_delta(ring, Basis(p_point, q_point));
}

namespace detail {

// Advances digits[0..n) as a base-p counter; false once it wraps to zero.
inline bool odometer_step(std::vector<int>& digits, std::size_t n, int p) {
  for (std::size_t pos = 0; pos < n; ++pos) {
    if (++digits[pos] < p) return true;
    digits[pos] = 0;
  }
  return false;
}

// Collects like monomials: multiset of indices (as per-residue counts packed
// base p+1) -> histogram of root-of-unity exponents.
class MultisetAccumulator {
 public:
  explicit MultisetAccumulator(int p) : p_(p) {}

  void add(const std::vector<int>& indices, int root_exponent) {
    std::vector<int> counts(static_cast<std::size_t>(p_));
    for (int i : indices) ++counts[static_cast<std::size_t>(i)];
    std::uint64_t key = 0;
    for (int c : counts) key = key * static_cast<std::uint64_t>(p_ + 1) + static_cast<std::uint64_t>(c);
    auto [it, inserted] = buckets_.try_emplace(key);
    if (inserted) {
      it->second.counts = std::move(counts);
      it->second.roots.assign(static_cast<std::size_t>(p_), 0);
    }
    ++it->second.roots[static_cast<std::size_t>(root_exponent)];
  }

  struct Bucket {
    std::vector<int> counts;            // multiplicity of each index residue
    std::vector<std::int64_t> roots;    // occurrences of each zeta exponent
  };
  const std::map<std::uint64_t, Bucket>& buckets() const { return buckets_; }

 private:
  int p_;
  std::map<std::uint64_t, Bucket> buckets_;
};

template <CoefficientRing Ring>
typename Ring::value_type coset_product(const GammaAssignment<Ring>& gamma, const Basis& basis,
                                        const std::vector<int>& counts) {
  const Ring& ring = gamma.ring();
  auto product = ring.one();
  for (std::size_t i = 0; i < counts.size(); ++i) {
    if (counts[i] == 0) continue;
    product = ring.mul(product, ring.pow(gamma(basis.Q() + basis.P() * static_cast<int>(i)), counts[i]));
  }
  return product;
}

}  // namespace detail

/// delta_O coefficient of Delta^{*p} from gamma alone.
template <CoefficientRing Ring>
ClosedFormResult<Ring> gamma_form(const Basis& basis, const GammaAssignment<Ring>& gamma) {
  const int p = basis.p();
  require_same_prime(p, gamma.prime());
  const Ring& ring = gamma.ring();
  const int e_qp = weil(basis.Q(), basis.P()).exponent();

  detail::MultisetAccumulator acc(p);
  std::vector<int> indices(static_cast<std::size_t>(p), 0);
  std::uint64_t tuples = 0;
  do {
    int partial = 0;
    for (int l = 0; l < p - 1; ++l) partial += indices[static_cast<std::size_t>(l)];
    indices[static_cast<std::size_t>(p - 1)] = reduce_mod(-partial, p);
    std::int64_t weighted = 0;
    for (int l = 0; l < p; ++l) weighted += static_cast<std::int64_t>(l + 1) * indices[static_cast<std::size_t>(l)];
    acc.add(indices, reduce_mod(weighted * e_qp, p));
    ++tuples;
  } while (detail::odometer_step(indices, static_cast<std::size_t>(p - 1), p));

  auto total = ring.zero();
  for (const auto& [key, bucket] : acc.buckets()) {
    const auto weight = ring.from_root_counts(bucket.roots);
    if (ring.is_zero(weight)) continue;
    ring.accumulate(total, ring.mul(weight, detail::coset_product(gamma, basis, bucket.counts)));
  }
  return {total, std::nullopt, tuples};
}

/// delta_O coefficient of Delta^{*p} from rho alone. Throws ValidationError
/// when rho is not normalized.
template <CoefficientRing Ring>
ClosedFormResult<Ring> rho_form(const Basis& basis, const RhoAssignment<Ring>& rho) {
  const int p = basis.p();
  require_same_prime(p, rho.prime());
  if (!rho.is_normalized()) throw ValidationError("rho must satisfy rho(O,.) = rho(.,O) = 1");
  const Ring& ring = rho.ring();
  const int e_qp = weil(basis.Q(), basis.P()).exponent();

  // Grouped by root exponent so each tuple costs one product chain.
  std::vector<typename Ring::value_type> by_root(static_cast<std::size_t>(p), ring.zero());
  std::vector<int> indices(static_cast<std::size_t>(p), 0);
  std::uint64_t tuples = 0;
  do {
    int partial = 0;
    for (int l = 0; l < p - 1; ++l) partial += indices[static_cast<std::size_t>(l)];
    indices[static_cast<std::size_t>(p - 1)] = reduce_mod(-partial, p);

    std::int64_t weighted = 0;
    auto product = ring.one();
    TorsionPoint running = basis.Q() + basis.P() * indices[0];  // jQ + (i_1+..+i_j)P at j = 1
    for (int l = 0; l < p; ++l) {
      weighted += static_cast<std::int64_t>(l + 1) * indices[static_cast<std::size_t>(l)];
      if (l + 1 < p) {
        const TorsionPoint next = basis.Q() + basis.P() * indices[static_cast<std::size_t>(l + 1)];
        product = ring.mul(product, rho(running, next));
        running = running + next;
      }
    }
    ring.accumulate(by_root[static_cast<std::size_t>(reduce_mod(weighted * e_qp, p))], product);
    ++tuples;
  } while (detail::odometer_step(indices, static_cast<std::size_t>(p - 1), p));

  auto total = ring.zero();
  for (int k = 0; k < p; ++k) {
    const auto& part = by_root[static_cast<std::size_t>(k)];
    if (!ring.is_zero(part)) ring.accumulate(total, ring.mul(ring.root(k), part));
  }
  return {total, std::nullopt, tuples};
}

/// The full expansion over all p^p tuples, before any cancellation is assumed.
template <CoefficientRing Ring>
ClosedFormResult<Ring> intermediate_form(const Basis& basis, const GammaAssignment<Ring>& gamma) {
  const int p = basis.p();
  require_same_prime(p, gamma.prime());
  const Ring& ring = gamma.ring();
  const int eps_qp = epsilon(basis.Q(), basis.P()).exponent();

  detail::MultisetAccumulator acc(p);
  std::vector<int> indices(static_cast<std::size_t>(p), 0);
  std::uint64_t tuples = 0;
  do {
    std::int64_t weighted = 0;
    for (int l = 0; l < p; ++l) weighted += static_cast<std::int64_t>(2 * l + 1) * indices[static_cast<std::size_t>(l)];
    acc.add(indices, reduce_mod(weighted * eps_qp, p));
    ++tuples;
  } while (detail::odometer_step(indices, static_cast<std::size_t>(p), p));

  AlgebraElement<Ring> element(ring);
  for (const auto& [key, bucket] : acc.buckets()) {
    const auto weight = ring.from_root_counts(bucket.roots);
    if (ring.is_zero(weight)) continue;
    std::int64_t sum = 0;
    for (std::size_t i = 0; i < bucket.counts.size(); ++i) sum += static_cast<std::int64_t>(i) * bucket.counts[i];
    const TorsionPoint target = basis.P() * sum;
    const auto monomial = ring.mul(detail::coset_product(gamma, basis, bucket.counts), ring.inv(gamma(target)));
    element.add_term(target, ring.mul(weight, monomial));
  }
  auto o_coefficient = element.at(TorsionPoint::zero(p));
  return {std::move(o_coefficient), std::move(element), tuples};
}

struct MultiplicativeCheck {
  BivariatePoly lhs;  // gamma form under g_{aP+bQ} -> x^a y^b
  BivariatePoly rhs;  // y^p (1 - x^p)^(p-1)
  bool holds;
};

/// Specializes the symbolic gamma form (standard basis) to a multiplicative
/// gamma and compares with y^p (1 - x^p)^(p-1).
MultiplicativeCheck multiplicative_specialization(int p);

/// y^p (1 - x^p)^(p-1), expanded.
BivariatePoly multiplicative_target(int p);

}  // namespace tate
