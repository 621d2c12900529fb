// Copyright 2026 The tate Authors.
// SPDX-License-Identifier: Apache-2.0
#include "tate/cyclotomic.hpp"

#include <utility>

#include "tate/errors.hpp"
#include "tate/torsion.hpp"

namespace tate {

CycNumber::CycNumber(int p) : p_(p), coeffs_(static_cast<std::size_t>(p - 1)) {}

CycNumber::CycNumber(int p, const mpq_class& rational) : CycNumber(p) {
  coeffs_[0] = rational;
}

CycNumber::CycNumber(int p, std::vector<mpq_class> coeffs) : p_(p), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != static_cast<std::size_t>(p - 1)) {
    throw std::invalid_argument("CycNumber needs p-1 coefficients");
  }
}

CycNumber CycNumber::reduce(int p, std::vector<mpq_class> full) {
  // zeta^(p-1) = -(1 + zeta + ... + zeta^(p-2))
  const mpq_class top = full[static_cast<std::size_t>(p - 1)];
  full.pop_back();
  if (top != 0) {
    for (auto& c : full) c -= top;
  }
  return CycNumber(p, std::move(full));
}

CycNumber CycNumber::root(int p, std::int64_t k) {
  std::vector<mpq_class> full(static_cast<std::size_t>(p));
  full[static_cast<std::size_t>(reduce_mod(k, p))] = 1;
  return reduce(p, std::move(full));
}

CycNumber CycNumber::from_root_counts(int p, std::span<const std::int64_t> counts) {
  std::vector<mpq_class> full(static_cast<std::size_t>(p));
  for (std::size_t k = 0; k < counts.size(); ++k) {
    full[static_cast<std::size_t>(reduce_mod(static_cast<std::int64_t>(k), p))] +=
        mpz_class(static_cast<long>(counts[k]));
  }
  return reduce(p, std::move(full));
}

bool CycNumber::is_zero() const {
  for (const auto& c : coeffs_) {
    if (c != 0) return false;
  }
  return true;
}

bool CycNumber::is_one() const {
  if (coeffs_[0] != 1) return false;
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) return false;
  }
  return true;
}

CycNumber& CycNumber::operator+=(const CycNumber& other) {
  require_same_prime(p_, other.p_);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

CycNumber& CycNumber::operator-=(const CycNumber& other) {
  require_same_prime(p_, other.p_);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

CycNumber& CycNumber::operator*=(const CycNumber& other) {
  require_same_prime(p_, other.p_);
  const auto n = coeffs_.size();
  std::vector<mpq_class> full(static_cast<std::size_t>(p_));
  mpq_class term;
  for (std::size_t i = 0; i < n; ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (other.coeffs_[j] == 0) continue;
      term = coeffs_[i] * other.coeffs_[j];
      full[(i + j) % static_cast<std::size_t>(p_)] += term;
    }
  }
  *this = reduce(p_, std::move(full));
  return *this;
}

CycNumber CycNumber::operator-() const {
  CycNumber result(*this);
  for (auto& c : result.coeffs_) c = -c;
  return result;
}

namespace {

using QPoly = std::vector<mpq_class>;  // ascending coefficients

void trim(QPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

QPoly sub(const QPoly& f, const QPoly& g) {
  QPoly r(std::max(f.size(), g.size()));
  for (std::size_t i = 0; i < f.size(); ++i) r[i] += f[i];
  for (std::size_t i = 0; i < g.size(); ++i) r[i] -= g[i];
  trim(r);
  return r;
}

QPoly mul(const QPoly& f, const QPoly& g) {
  if (f.empty() || g.empty()) return {};
  QPoly r(f.size() + g.size() - 1);
  for (std::size_t i = 0; i < f.size(); ++i) {
    for (std::size_t j = 0; j < g.size(); ++j) r[i + j] += f[i] * g[j];
  }
  trim(r);
  return r;
}

// f = quotient * g + remainder, g nonzero.
std::pair<QPoly, QPoly> divmod(QPoly f, const QPoly& g) {
  QPoly quotient;
  if (f.size() >= g.size()) quotient.assign(f.size() - g.size() + 1, 0);
  while (f.size() >= g.size() && !f.empty()) {
    const std::size_t shift = f.size() - g.size();
    const mpq_class factor = f.back() / g.back();
    quotient[shift] = factor;
    for (std::size_t i = 0; i < g.size(); ++i) f[i + shift] -= factor * g[i];
    trim(f);
  }
  trim(quotient);
  return {quotient, f};
}

}  // namespace

CycNumber CycNumber::inverse() const {
  if (is_zero()) throw DomainError("zero is not invertible in Q(zeta_p)");
  // Extended Euclid: track s with s * x = r (mod Phi_p).
  QPoly phi(static_cast<std::size_t>(p_), mpq_class(1));
  QPoly x(coeffs_);
  trim(x);
  QPoly r0 = phi, r1 = x;
  QPoly s0, s1{mpq_class(1)};
  while (!r1.empty()) {
    auto [quotient, remainder] = divmod(r0, r1);
    QPoly s2 = sub(s0, mul(quotient, s1));
    r0 = std::move(r1);
    r1 = std::move(remainder);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r0 is a nonzero constant since Phi_p is irreducible.
  const mpq_class scale = 1 / r0[0];
  std::vector<mpq_class> full(static_cast<std::size_t>(p_));
  auto [unused, s] = divmod(s0, phi);
  for (std::size_t i = 0; i < s.size(); ++i) full[i] = s[i] * scale;
  return reduce(p_, std::move(full));
}

CycNumber CycNumber::pow(std::int64_t n) const {
  if (n < 0) return inverse().pow(-n);
  CycNumber result(p_, mpq_class(1));
  CycNumber base(*this);
  while (n > 0) {
    if (n & 1) result *= base;
    n >>= 1;
    if (n > 0) base *= base;
  }
  return result;
}

CycNumber CycNumber::galois(std::int64_t k) const {
  if (reduce_mod(k, p_) == 0) throw DomainError("galois exponent must be prime to p");
  std::vector<mpq_class> full(static_cast<std::size_t>(p_));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    full[static_cast<std::size_t>(reduce_mod(static_cast<std::int64_t>(i) * k, p_))] += coeffs_[i];
  }
  return reduce(p_, std::move(full));
}

bool CycNumber::operator==(const CycNumber& other) const {
  return p_ == other.p_ && coeffs_ == other.coeffs_;
}

std::string CycNumber::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const auto& c = coeffs_[i];
    if (c == 0) continue;
    mpq_class magnitude = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    const bool unit = magnitude == 1;
    if (i == 0) {
      out += magnitude.get_str();
    } else {
      if (!unit) out += magnitude.get_str() + "*";
      out += i == 1 ? "z" : "z^" + std::to_string(i);
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace tate
