// Copyright 2026 The tate Authors.
// SPDX-License-Identifier: Apache-2.0
#include "tate/local_pairing.hpp"

#include <gmpxx.h>

#include <charconv>
#include <stdexcept>

#include "tate/errors.hpp"
#include "tate/modarith.hpp"

namespace tate {

PairingValue PairingValue::operator+(const PairingValue& other) const {
  require_same_prime(p_, other.p_);
  return {p_, k_ + other.k_};
}

std::string PairingValue::to_string() const {
  return std::to_string(k_) + "/" + std::to_string(p_);
}

TameFieldModel::TameFieldModel(int p, std::uint64_t q, std::optional<std::uint64_t> generator)
    : p_(p), q_(q), g_(0), zeta_(0) {
  if (q >= (1ULL << 31) || !is_prime(static_cast<std::int64_t>(q))) {
    throw std::invalid_argument("q must be a prime below 2^31, got " + std::to_string(q));
  }
  if ((q - 1) % static_cast<std::uint64_t>(p) != 0) {
    throw std::invalid_argument("q = " + std::to_string(q) + " is not 1 mod p = " + std::to_string(p));
  }
  if (generator) {
    if (!is_generator(*generator, q)) {
      throw std::invalid_argument(std::to_string(*generator) + " does not generate F_" + std::to_string(q) + "^x");
    }
    g_ = *generator % q;
  } else {
    g_ = smallest_generator(q);
  }
  zeta_ = mod_pow(g_, (q - 1) / static_cast<std::uint64_t>(p), q);
}

TameElement::TameElement(std::int64_t val, std::int64_t unit, const TameFieldModel& model)
    : val_(val), unit_(0), q_(model.q()) {
  const auto m = static_cast<std::int64_t>(q_);
  auto r = unit % m;
  if (r < 0) r += m;
  if (r == 0) throw DomainError("the unit part of a tame element must be nonzero mod q");
  unit_ = static_cast<std::uint64_t>(r);
}

TameElement TameElement::parse(std::string_view text, const TameFieldModel& model) {
  auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw std::invalid_argument("tame element must be 'n:u': '" + std::string(text) + "'");
  }
  auto parse_int = [&](std::string_view part) {
    std::int64_t value = 0;
    auto first = part.data();
    auto last = part.data() + part.size();
    if (first != last && *first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last || first == last) {
      throw std::invalid_argument("malformed tame element '" + std::string(text) + "'");
    }
    return value;
  };
  return {parse_int(text.substr(0, colon)), parse_int(text.substr(colon + 1)), model};
}

TameElement TameElement::operator*(const TameElement& other) const {
  if (q_ != other.q_) throw AmbientMismatch(static_cast<int>(q_), static_cast<int>(other.q_));
  TameElement result(*this);
  result.val_ += other.val_;
  result.unit_ = unit_ * other.unit_ % q_;
  return result;
}

TameElement TameElement::pow(std::int64_t n) const {
  TameElement result(*this);
  result.val_ = val_ * n;
  result.unit_ = n >= 0 ? mod_pow(unit_, static_cast<std::uint64_t>(n), q_)
                        : mod_pow(mod_inv(unit_, q_), static_cast<std::uint64_t>(-n), q_);
  return result;
}

std::string TameElement::to_string() const {
  return std::to_string(val_) + ":" + std::to_string(unit_);
}

bool same_class(const TameElement& a, const TameElement& b, const TameFieldModel& model) {
  const auto p = static_cast<std::uint64_t>(model.p());
  if (reduce_mod(a.val() - b.val(), model.p()) != 0) return false;
  const auto ratio = a.unit() * mod_inv(b.unit(), model.q()) % model.q();
  return mod_pow(ratio, (model.q() - 1) / p, model.q()) == 1;
}

namespace {

// (-1)^(v(a)v(b)) u_a^v(b) u_b^-v(a) in F_q^x: the tame symbol before the
// power map to mu_p.
std::uint64_t tame_base(const TameElement& a, const TameElement& b, std::uint64_t q) {
  const std::int64_t m = a.val();
  const std::int64_t n = b.val();
  auto power = [q](std::uint64_t u, std::int64_t e) {
    return e >= 0 ? mod_pow(u, static_cast<std::uint64_t>(e), q)
                  : mod_pow(mod_inv(u, q), static_cast<std::uint64_t>(-e), q);
  };
  std::uint64_t base = power(a.unit(), n) * power(b.unit(), -m) % q;
  if ((m * n) % 2 != 0) base = (q - base) % q;
  return base;
}

}  // namespace

PairingValue hilbert(const TameElement& a, const TameElement& b, const TameFieldModel& model) {
  if (a.modulus() != model.q() || b.modulus() != model.q()) {
    throw AmbientMismatch(static_cast<int>(a.modulus()), static_cast<int>(model.q()));
  }
  const auto q = model.q();
  const auto symbol = mod_pow(tame_base(a, b, q), (q - 1) / static_cast<std::uint64_t>(model.p()), q);
  return iota(symbol, model);
}

std::optional<TameElement> one_minus(const TameElement& a, const TameFieldModel& model) {
  const auto q = static_cast<std::int64_t>(model.q());
  const auto u = static_cast<std::int64_t>(a.unit());
  if (a.val() > 0) return TameElement(0, 1, model);  // a 1-unit
  if (a.val() < 0) return TameElement(a.val(), q - u, model);  // -a (1 - a^-1)
  if (u == 1) return std::nullopt;
  return TameElement(0, 1 - u, model);
}

PairingValue iota(std::uint64_t z, const TameFieldModel& model) {
  std::uint64_t power = 1;
  for (int k = 0; k < model.p(); ++k) {
    if (power == z % model.q()) return {model.p(), k};
    power = power * model.zeta() % model.q();
  }
  throw DomainError(std::to_string(z) + " is not a p-th root of unity mod " + std::to_string(model.q()));
}

PairingValue qk_split(const TameElement& alpha_p, const TameElement& alpha_q, const TameFieldModel& model) {
  const auto factor = one_minus(alpha_p, model);
  if (!factor) return {model.p(), 0};
  const TameElement delta_pth = alpha_q * factor->pow(model.p() - 1);
  return hilbert(alpha_p, delta_pth, model);
}

PairingValue unramified_scaling(const TameElement& a, const TameElement& b, int d, const TameFieldModel& model) {
  if (d < 1) throw std::invalid_argument("extension degree must be positive");
  const auto q = model.q();
  // (q^d - 1)/p reduced mod q - 1, valid since the base lies in F_q^x.
  mpz_class exponent;
  mpz_ui_pow_ui(exponent.get_mpz_t(), q, static_cast<unsigned long>(d));
  exponent = (exponent - 1) / model.p();
  exponent %= static_cast<unsigned long>(q - 1);
  const auto symbol = mod_pow(tame_base(a, b, q), exponent.get_ui(), q);
  const PairingValue value = iota(symbol, model);
  if (!(value == hilbert(a, b, model) * d)) {
    throw std::logic_error("unramified scaling law violated for " + a.to_string() + ", " + b.to_string());
  }
  return value;
}

}  // namespace tate
