// Copyright 2026 The tate Authors.
// SPDX-License-Identifier: Apache-2.0
//
// The algebra of maps E[p] -> coefficients with the twisted convolution
//
//   (f * g)(T) = sum_{T1 + T2 = T} eps(T1,T2) rho(T1,T2) f(T1) g(T2),
//
// indicator functions delta_T, and the compatible-representative bookkeeping
// gamma -> (alpha = gamma^p, rho = del gamma).
#pragma once

#include <functional>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "tate/errors.hpp"
#include "tate/rings.hpp"
#include "tate/torsion.hpp"

namespace tate {

/// Sparse map from torsion points to ring coefficients; zero coefficients
/// are never stored.
template <CoefficientRing Ring>
class AlgebraElement {
 public:
  using Coeff = typename Ring::value_type;

  explicit AlgebraElement(Ring ring) : ring_(std::move(ring)) {}

  static AlgebraElement indicator(const Ring& ring, const TorsionPoint& t) {
    return indicator(ring, t, ring.one());
  }
  static AlgebraElement indicator(const Ring& ring, const TorsionPoint& t, const Coeff& c) {
    AlgebraElement f(ring);
    f.add_term(t, c);
    return f;
  }

  const Ring& ring() const { return ring_; }
  int prime() const { return ring_.prime(); }
  const std::map<TorsionPoint, Coeff>& support() const { return support_; }
  bool empty() const { return support_.empty(); }

  Coeff at(const TorsionPoint& t) const {
    auto it = support_.find(t);
    return it == support_.end() ? ring_.zero() : it->second;
  }

  void add_term(const TorsionPoint& t, const Coeff& c) {
    require_same_prime(prime(), t.p());
    if (ring_.is_zero(c)) return;
    auto [it, inserted] = support_.try_emplace(t, c);
    if (!inserted) {
      ring_.accumulate(it->second, c);
      if (ring_.is_zero(it->second)) support_.erase(it);
    }
  }

  AlgebraElement& operator+=(const AlgebraElement& other) {
    require_same_prime(prime(), other.prime());
    for (const auto& [t, c] : other.support_) add_term(t, c);
    return *this;
  }
  friend AlgebraElement operator+(AlgebraElement lhs, const AlgebraElement& rhs) { return lhs += rhs; }

  AlgebraElement scaled(const Coeff& c) const {
    AlgebraElement result(ring_);
    for (const auto& [t, v] : support_) result.add_term(t, ring_.mul(c, v));
    return result;
  }

  bool operator==(const AlgebraElement& other) const {
    if (prime() != other.prime() || support_.size() != other.support_.size()) return false;
    auto it = other.support_.begin();
    for (const auto& [t, c] : support_) {
      if (!(t == it->first) || !ring_.equal(c, it->second)) return false;
      ++it;
    }
    return true;
  }

 private:
  Ring ring_;
  std::map<TorsionPoint, Coeff> support_;
};

/// gamma: E[p] -> units with gamma(O) = 1.
template <CoefficientRing Ring>
class GammaAssignment {
 public:
  using Coeff = typename Ring::value_type;

  /// values[i] is gamma at TorsionPoint::from_index(p, i). Throws
  /// ValidationError if gamma(O) != 1 or some value is not invertible.
  GammaAssignment(Ring ring, std::vector<Coeff> values) : ring_(std::move(ring)), values_(std::move(values)) {
    const int p = ring_.prime();
    if (values_.size() != static_cast<std::size_t>(p * p)) {
      throw ValidationError("gamma needs one value per torsion point");
    }
    if (!ring_.equal(values_[0], ring_.one())) throw ValidationError("gamma(O) must be 1");
    for (std::size_t i = 1; i < values_.size(); ++i) {
      bool invertible = false;
      try {
        invertible = ring_.equal(ring_.mul(values_[i], ring_.inv(values_[i])), ring_.one());
      } catch (const DomainError&) {
      }
      if (!invertible) {
        throw ValidationError("gamma(" + TorsionPoint::from_index(p, static_cast<int>(i)).to_string() +
                              ") is not invertible");
      }
    }
  }

  /// gamma(O) = 1 and gamma(T) = value(T) elsewhere.
  template <class F>
  static GammaAssignment from_function(const Ring& ring, F&& value) {
    std::vector<Coeff> values;
    values.push_back(ring.one());
    const int p = ring.prime();
    for (int i = 1; i < p * p; ++i) values.push_back(value(TorsionPoint::from_index(p, i)));
    return GammaAssignment(ring, std::move(values));
  }

  const Ring& ring() const { return ring_; }
  int prime() const { return ring_.prime(); }

  const Coeff& operator()(const TorsionPoint& t) const {
    require_same_prime(prime(), t.p());
    return values_[static_cast<std::size_t>(t.index())];
  }

 private:
  Ring ring_;
  std::vector<Coeff> values_;
};

/// rho: E[p] x E[p] -> units.
template <CoefficientRing Ring>
class RhoAssignment {
 public:
  using Coeff = typename Ring::value_type;

  template <class F>
  static RhoAssignment from_function(const Ring& ring, F&& value) {
    RhoAssignment rho(ring);
    const auto points = all_points(ring.prime());
    rho.values_.reserve(points.size() * points.size());
    for (const auto& t1 : points) {
      for (const auto& t2 : points) rho.values_.push_back(value(t1, t2));
    }
    return rho;
  }

  static RhoAssignment constant_one(const Ring& ring) {
    return from_function(ring, [&](const TorsionPoint&, const TorsionPoint&) { return ring.one(); });
  }

  const Ring& ring() const { return ring_; }
  int prime() const { return ring_.prime(); }

  const Coeff& operator()(const TorsionPoint& t1, const TorsionPoint& t2) const {
    require_same_prime(prime(), t1.p());
    require_same_prime(prime(), t2.p());
    const auto n = static_cast<std::size_t>(prime()) * static_cast<std::size_t>(prime());
    return values_[static_cast<std::size_t>(t1.index()) * n + static_cast<std::size_t>(t2.index())];
  }

  /// rho(O, T) = rho(T, O) = 1 for every T.
  bool is_normalized() const {
    const auto zero = TorsionPoint::zero(prime());
    for (const auto& t : all_points(prime())) {
      if (!ring_.equal((*this)(zero, t), ring_.one()) || !ring_.equal((*this)(t, zero), ring_.one())) {
        return false;
      }
    }
    return true;
  }

  bool is_symmetric() const {
    const auto points = all_points(prime());
    for (const auto& t1 : points) {
      for (const auto& t2 : points) {
        if (!ring_.equal((*this)(t1, t2), (*this)(t2, t1))) return false;
      }
    }
    return true;
  }

 private:
  explicit RhoAssignment(Ring ring) : ring_(std::move(ring)) {}

  Ring ring_;
  std::vector<Coeff> values_;
};

/// gamma(T) = g_T: the generic symbolic assignment.
inline GammaAssignment<SymbolicRing> symbolic_gamma(int p) {
  return GammaAssignment<SymbolicRing>::from_function(
      SymbolicRing(p), [](const TorsionPoint& t) { return LaurentPoly::variable(t); });
}

/// w(S) viewed as a gamma-shaped unit T -> e_p(S, T).
template <CoefficientRing Ring>
GammaAssignment<Ring> character_gamma(const Ring& ring, const TorsionPoint& s) {
  const auto values = w_map(s);
  return GammaAssignment<Ring>::from_function(
      ring, [&](const TorsionPoint& t) { return ring.root(values[static_cast<std::size_t>(t.index())].exponent()); });
}

/// (del gamma)(T1, T2) = gamma(T1) gamma(T2) / gamma(T1 + T2).
template <CoefficientRing Ring>
RhoAssignment<Ring> del_gamma(const GammaAssignment<Ring>& gamma) {
  const Ring& ring = gamma.ring();
  return RhoAssignment<Ring>::from_function(ring, [&](const TorsionPoint& t1, const TorsionPoint& t2) {
    return ring.mul(ring.mul(gamma(t1), gamma(t2)), ring.inv(gamma(t1 + t2)));
  });
}

template <CoefficientRing Ring>
typename Ring::value_type alpha_of(const GammaAssignment<Ring>& gamma, const TorsionPoint& t) {
  return gamma.ring().pow(gamma(t), gamma.prime());
}

/// The twisted convolution f *_rho g. Associative when rho = del gamma; for
/// other rho it is merely bilinear.
template <CoefficientRing Ring>
AlgebraElement<Ring> star(const AlgebraElement<Ring>& f, const AlgebraElement<Ring>& g, const RhoAssignment<Ring>& rho) {
  require_same_prime(f.prime(), g.prime());
  require_same_prime(f.prime(), rho.prime());
  const Ring& ring = f.ring();
  AlgebraElement<Ring> result(ring);
  for (const auto& [t1, c1] : f.support()) {
    for (const auto& [t2, c2] : g.support()) {
      const auto weight = ring.mul(ring.root(epsilon(t1, t2).exponent()), rho(t1, t2));
      result.add_term(t1 + t2, ring.mul(weight, ring.mul(c1, c2)));
    }
  }
  return result;
}

/// Left-associated n-fold product ((f * f) * f) * ...; n >= 1.
template <CoefficientRing Ring>
AlgebraElement<Ring> star_pow(const AlgebraElement<Ring>& f, int n, const RhoAssignment<Ring>& rho) {
  if (n < 1) throw std::invalid_argument("star_pow needs n >= 1");
  AlgebraElement<Ring> result = f;
  for (int i = 1; i < n; ++i) result = star(result, f, rho);
  return result;
}

/// (gamma(T) gamma(-T))^(-1) delta_{-T}, the inverse of delta_T for rho = del gamma.
template <CoefficientRing Ring>
AlgebraElement<Ring> delta_inverse(const TorsionPoint& t, const GammaAssignment<Ring>& gamma) {
  const Ring& ring = gamma.ring();
  return AlgebraElement<Ring>::indicator(ring, -t, ring.inv(ring.mul(gamma(t), gamma(-t))));
}

/// (sigma f)(T) = f(sigma^{-1} T) for a point automorphism sigma acting
/// trivially on coefficients.
template <CoefficientRing Ring, class Automorphism>
AlgebraElement<Ring> push_forward(const AlgebraElement<Ring>& f, Automorphism&& sigma) {
  AlgebraElement<Ring> result(f.ring());
  for (const auto& [t, c] : f.support()) result.add_term(sigma(t), c);
  return result;
}

/// The Galois model sigma(P) = P, sigma(Q) = Q + P for a basis (P, Q).
inline std::function<TorsionPoint(const TorsionPoint&)> unipotent_sigma(const Basis& basis) {
  return [basis](const TorsionPoint& t) {
    const auto [a, b] = basis.coordinates(t);
    return basis.P() * (a + b) + basis.Q() * b;
  };
}

}  // namespace tate
