// Copyright 2026 The tate Authors.
// SPDX-License-Identifier: Apache-2.0
#include "tate/laurent.hpp"

#include <algorithm>

#include "tate/errors.hpp"

namespace tate {

LaurentMonomial LaurentMonomial::variable(const TorsionPoint& t, int exp) {
  if (t.is_zero()) throw DomainError("g_O is not a variable (gamma(O) = 1)");
  LaurentMonomial m;
  if (exp != 0) m.factors_.emplace_back(t, exp);
  return m;
}

int LaurentMonomial::exponent_of(const TorsionPoint& t) const {
  for (const auto& [point, exp] : factors_) {
    if (point == t) return exp;
  }
  return 0;
}

LaurentMonomial LaurentMonomial::operator*(const LaurentMonomial& other) const {
  LaurentMonomial result;
  result.factors_.reserve(factors_.size() + other.factors_.size());
  auto lhs = factors_.begin();
  auto rhs = other.factors_.begin();
  while (lhs != factors_.end() || rhs != other.factors_.end()) {
    if (rhs == other.factors_.end() || (lhs != factors_.end() && lhs->first < rhs->first)) {
      result.factors_.push_back(*lhs++);
    } else if (lhs == factors_.end() || rhs->first < lhs->first) {
      result.factors_.push_back(*rhs++);
    } else {
      require_same_prime(lhs->first.p(), rhs->first.p());
      const int exp = lhs->second + rhs->second;
      if (exp != 0) result.factors_.emplace_back(lhs->first, exp);
      ++lhs;
      ++rhs;
    }
  }
  return result;
}

LaurentMonomial LaurentMonomial::inverse() const { return pow(-1); }

LaurentMonomial LaurentMonomial::pow(int n) const {
  LaurentMonomial result;
  if (n == 0) return result;
  result.factors_ = factors_;
  for (auto& factor : result.factors_) factor.second *= n;
  return result;
}

std::strong_ordering LaurentMonomial::operator<=>(const LaurentMonomial& other) const {
  return std::lexicographical_compare_three_way(
      factors_.begin(), factors_.end(), other.factors_.begin(), other.factors_.end(),
      [](const Factor& x, const Factor& y) {
        if (auto c = x.first <=> y.first; c != 0) return c;
        return x.second <=> y.second;
      });
}

std::string LaurentMonomial::to_string() const {
  if (factors_.empty()) return "1";
  std::string out;
  for (const auto& [point, exp] : factors_) {
    if (!out.empty()) out += "*";
    out += "g(" + point.to_string() + ")";
    if (exp != 1) out += "^" + std::to_string(exp);
  }
  return out;
}

LaurentPoly::LaurentPoly(const LaurentMonomial& monomial, CycNumber coeff) : p_(coeff.p()) {
  add_term(monomial, coeff);
}

LaurentPoly::LaurentPoly(CycNumber constant) : p_(constant.p()) {
  add_term(LaurentMonomial(), constant);
}

LaurentPoly LaurentPoly::variable(const TorsionPoint& t, int exp) {
  return {LaurentMonomial::variable(t, exp), CycNumber(t.p(), 1)};
}

std::optional<CycNumber> LaurentPoly::as_constant() const {
  if (terms_.empty()) return CycNumber(p_);
  if (terms_.size() == 1 && terms_.begin()->first.is_one()) return terms_.begin()->second;
  return std::nullopt;
}

void LaurentPoly::add_term(const LaurentMonomial& monomial, const CycNumber& coeff) {
  require_same_prime(p_, coeff.p());
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(monomial, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  require_same_prime(p_, other.p_);
  for (const auto& [monomial, coeff] : other.terms_) add_term(monomial, coeff);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
  require_same_prime(p_, other.p_);
  for (const auto& [monomial, coeff] : other.terms_) add_term(monomial, -coeff);
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly result(*this);
  for (auto& [monomial, coeff] : result.terms_) coeff = -coeff;
  return result;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& other) const {
  require_same_prime(p_, other.p_);
  LaurentPoly result(p_);
  for (const auto& [m1, c1] : terms_) {
    for (const auto& [m2, c2] : other.terms_) result.add_term(m1 * m2, c1 * c2);
  }
  return result;
}

LaurentPoly LaurentPoly::operator*(const CycNumber& scalar) const {
  require_same_prime(p_, scalar.p());
  LaurentPoly result(p_);
  if (scalar.is_zero()) return result;
  for (const auto& [monomial, coeff] : terms_) result.terms_.emplace_hint(result.terms_.end(), monomial, coeff * scalar);
  return result;
}

LaurentPoly LaurentPoly::inverse() const {
  if (!is_monomial()) {
    throw DomainError("only single-term Laurent polynomials are invertible: " + to_string());
  }
  const auto& [monomial, coeff] = *terms_.begin();
  return {monomial.inverse(), coeff.inverse()};
}

LaurentPoly LaurentPoly::pow(int n) const {
  if (n < 0) return inverse().pow(-n);
  LaurentPoly result = one(p_);
  LaurentPoly base(*this);
  while (n > 0) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return result;
}

bool LaurentPoly::operator==(const LaurentPoly& other) const {
  return p_ == other.p_ && terms_ == other.terms_;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [monomial, coeff] : terms_) {
    if (!out.empty()) out += " + ";
    const bool plain = coeff.is_one();
    if (!plain) out += "(" + coeff.to_string() + ")";
    if (!monomial.is_one()) {
      if (!plain) out += "*";
      out += monomial.to_string();
    } else if (plain) {
      out += "1";
    }
  }
  return out;
}

BivariatePoly BivariatePoly::monomial(int p, XYExponent exp, CycNumber coeff) {
  BivariatePoly result(p);
  result.add_term(exp, coeff);
  return result;
}

void BivariatePoly::add_term(XYExponent exp, const CycNumber& coeff) {
  require_same_prime(p_, coeff.p());
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(exp, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

BivariatePoly& BivariatePoly::operator+=(const BivariatePoly& other) {
  for (const auto& [exp, coeff] : other.terms_) add_term(exp, coeff);
  return *this;
}

BivariatePoly BivariatePoly::operator*(const BivariatePoly& other) const {
  require_same_prime(p_, other.p_);
  BivariatePoly result(p_);
  for (const auto& [e1, c1] : terms_) {
    for (const auto& [e2, c2] : other.terms_) {
      result.add_term({e1.first + e2.first, e1.second + e2.second}, c1 * c2);
    }
  }
  return result;
}

BivariatePoly BivariatePoly::pow(int n) const {
  BivariatePoly result = monomial(p_, {0, 0}, CycNumber(p_, 1));
  for (int i = 0; i < n; ++i) result = result * *this;
  return result;
}

CycNumber BivariatePoly::evaluate_at_one() const {
  CycNumber sum(p_);
  for (const auto& [exp, coeff] : terms_) sum += coeff;
  return sum;
}

bool BivariatePoly::operator==(const BivariatePoly& other) const {
  return p_ == other.p_ && terms_ == other.terms_;
}

std::string BivariatePoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [exp, coeff] : terms_) {
    if (!out.empty()) out += " + ";
    out += "(" + coeff.to_string() + ")";
    if (exp.first != 0) out += "*x^" + std::to_string(exp.first);
    if (exp.second != 0) out += "*y^" + std::to_string(exp.second);
  }
  return out;
}

BivariatePoly substitute(const LaurentPoly& f, const XYMap& map) {
  BivariatePoly result(f.p());
  for (const auto& [monomial, coeff] : f.terms()) {
    XYExponent total{0, 0};
    for (const auto& [point, exp] : monomial.factors()) {
      auto image = map(point);
      if (!image) throw SubstitutionError("variable g(" + point.to_string() + ") is unmapped");
      total.first += image->first * exp;
      total.second += image->second * exp;
    }
    result.add_term(total, coeff);
  }
  return result;
}

XYMap multiplicative_map(const Basis& basis) {
  return [basis](const TorsionPoint& t) -> std::optional<XYExponent> {
    if (t.p() != basis.p()) return std::nullopt;
    return basis.coordinates(t);
  };
}

}  // namespace tate
