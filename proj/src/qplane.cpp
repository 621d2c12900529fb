// Copyright 2026 The tate Authors.
// SPDX-License-Identifier: Apache-2.0
#include "tate/qplane.hpp"

#include "tate/errors.hpp"

namespace tate {

QPlaneElement QPlaneElement::monomial(int p, int x_exp, int y_exp, CycNumber coeff) {
  QPlaneElement f(p);
  f.add_term(x_exp, y_exp, coeff);
  return f;
}

void QPlaneElement::add_term(int x_exp, int y_exp, const CycNumber& coeff) {
  require_same_prime(p_, coeff.p());
  if (x_exp < 0 || y_exp < 0) throw DomainError("quantum-plane exponents must be nonnegative");
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace({x_exp, y_exp}, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

QPlaneElement& QPlaneElement::operator+=(const QPlaneElement& other) {
  require_same_prime(p_, other.p_);
  for (const auto& [exp, coeff] : other.terms_) add_term(exp.first, exp.second, coeff);
  return *this;
}

QPlaneElement QPlaneElement::operator*(const QPlaneElement& other) const {
  require_same_prime(p_, other.p_);
  QPlaneElement result(p_);
  for (const auto& [e1, c1] : terms_) {
    for (const auto& [e2, c2] : other.terms_) {
      // Y^b X^c = zeta^(2bc) X^c Y^b
      const auto twist = CycNumber::root(p_, 2LL * e1.second * e2.first);
      result.add_term(e1.first + e2.first, e1.second + e2.second, c1 * c2 * twist);
    }
  }
  return result;
}

QPlaneElement QPlaneElement::operator*(const CycNumber& scalar) const {
  QPlaneElement result(p_);
  for (const auto& [exp, coeff] : terms_) result.add_term(exp.first, exp.second, coeff * scalar);
  return result;
}

QPlaneElement QPlaneElement::pow(int n) const {
  QPlaneElement result = monomial(p_, 0, 0);
  for (int i = 0; i < n; ++i) result = result * *this;
  return result;
}

bool QPlaneElement::operator==(const QPlaneElement& other) const {
  return p_ == other.p_ && terms_ == other.terms_;
}

std::string QPlaneElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [exp, coeff] : terms_) {
    if (!out.empty()) out += " + ";
    out += "(" + coeff.to_string() + ")";
    if (exp.first != 0) out += "*X^" + std::to_string(exp.first);
    if (exp.second != 0) out += "*Y^" + std::to_string(exp.second);
  }
  return out;
}

QPlaneElement qp_mul(const QPlaneElement& f, const QPlaneElement& g) { return f * g; }

QPlaneIdentity verify_qplane_identity(int p) {
  QPlaneElement sum(p);
  const auto y = QPlaneElement::Y(p);
  for (int i = 0; i < p; ++i) {
    sum += (y * QPlaneElement::X(p).pow(i)) * CycNumber::root(p, -i);
  }
  QPlaneElement lhs = sum.pow(p);

  // X^p is central, so the binomial theorem applies to (1 - X^p)^(p-1).
  QPlaneElement rhs(p);
  mpz_class binomial = 1;
  for (int k = 0; k <= p - 1; ++k) {
    const mpq_class c = (k % 2 == 0 ? 1 : -1) * binomial;
    rhs.add_term(p * k, p, CycNumber(p, c));
    binomial = binomial * (p - 1 - k) / (k + 1);
  }
  const bool holds = lhs == rhs;
  return {std::move(lhs), std::move(rhs), holds};
}

UniPoly UniPoly::operator*(const UniPoly& other) const {
  require_same_prime(p, other.p);
  std::vector<CycNumber> result(coeffs.size() + other.coeffs.size() - 1, CycNumber(p));
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i].is_zero()) continue;
    for (std::size_t j = 0; j < other.coeffs.size(); ++j) result[i + j] += coeffs[i] * other.coeffs[j];
  }
  while (result.size() > 1 && result.back().is_zero()) result.pop_back();
  return {p, std::move(result)};
}

bool UniPoly::operator==(const UniPoly& other) const {
  return p == other.p && coeffs == other.coeffs;
}

std::string UniPoly::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + coeffs[i].to_string() + ")";
    if (i > 0) out += "*t^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

NormIdentity verify_norm_identity(int p) {
  // The conjugates of gamma(P) are zeta^j gamma(P); the norm of
  // 1 + gamma + ... + gamma^(p-1) is the product of the conjugate images.
  UniPoly lhs{p, {CycNumber(p, 1)}};
  for (int j = 0; j < p; ++j) {
    UniPoly factor{p, {}};
    for (int i = 0; i < p; ++i) factor.coeffs.push_back(CycNumber::root(p, static_cast<std::int64_t>(i) * j));
    lhs = lhs * factor;
  }
  UniPoly rhs{p, std::vector<CycNumber>(static_cast<std::size_t>(p * (p - 1) + 1), CycNumber(p))};
  mpz_class binomial = 1;
  for (int k = 0; k <= p - 1; ++k) {
    rhs.coeffs[static_cast<std::size_t>(p * k)] = CycNumber(p, mpq_class((k % 2 == 0 ? 1 : -1) * binomial));
    binomial = binomial * (p - 1 - k) / (k + 1);
  }
  const bool holds = lhs == rhs;
  return {std::move(lhs), std::move(rhs), holds};
}

AlgebraElement<SymbolicRing> to_star_algebra(const QPlaneElement& f, const Basis& basis) {
  const int p = f.p();
  require_same_prime(p, basis.p());
  const SymbolicRing ring(p);
  const auto rho = RhoAssignment<SymbolicRing>::constant_one(ring);
  const auto delta_p = AlgebraElement<SymbolicRing>::indicator(ring, basis.P());
  const auto delta_q = AlgebraElement<SymbolicRing>::indicator(ring, basis.Q());
  const int eps_qp = epsilon(basis.Q(), basis.P()).exponent();

  AlgebraElement<SymbolicRing> result(ring);
  for (const auto& [exp, coeff] : f.terms()) {
    auto word = AlgebraElement<SymbolicRing>::indicator(ring, TorsionPoint::zero(p));
    for (int i = 0; i < exp.first; ++i) word = star(word, delta_p, rho);
    for (int i = 0; i < exp.second; ++i) word = star(word, delta_q, rho);
    result += word.scaled(LaurentPoly(coeff.galois(eps_qp)));
  }
  return result;
}

}  // namespace tate
