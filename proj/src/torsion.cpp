// Copyright 2026 The tate Authors.
// SPDX-License-Identifier: Apache-2.0
#include "tate/torsion.hpp"

#include <charconv>
#include <stdexcept>

#include "tate/errors.hpp"
#include "tate/modarith.hpp"

namespace tate {

OddPrime::OddPrime(int value, int max_value) : value_(value) {
  if (value < 3 || value % 2 == 0 || !is_prime(value)) {
    throw std::invalid_argument("p must be an odd prime, got " + std::to_string(value));
  }
  if (value > max_value) {
    throw std::invalid_argument("p = " + std::to_string(value) + " exceeds the guard " +
                                std::to_string(max_value));
  }
}

namespace {

std::int64_t parse_int(std::string_view text) {
  std::int64_t value = 0;
  auto first = text.data();
  auto last = text.data() + text.size();
  if (first != last && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || first == last) {
    throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

TorsionPoint TorsionPoint::parse(int p, std::string_view text) {
  auto comma = text.find(',');
  if (comma == std::string_view::npos) {
    throw std::invalid_argument("point must be 'a,b': '" + std::string(text) + "'");
  }
  return {p, parse_int(text.substr(0, comma)), parse_int(text.substr(comma + 1))};
}

TorsionPoint TorsionPoint::operator+(const TorsionPoint& other) const {
  require_same_prime(p_, other.p_);
  return {p_, a_ + other.a_, b_ + other.b_};
}

TorsionPoint TorsionPoint::operator-(const TorsionPoint& other) const {
  require_same_prime(p_, other.p_);
  return {p_, a_ - other.a_, b_ - other.b_};
}

std::string TorsionPoint::to_string() const {
  return std::to_string(a_) + "," + std::to_string(b_);
}

std::vector<TorsionPoint> all_points(int p) {
  std::vector<TorsionPoint> points;
  points.reserve(static_cast<std::size_t>(p) * p);
  for (int i = 0; i < p * p; ++i) points.push_back(TorsionPoint::from_index(p, i));
  return points;
}

RootOfUnity RootOfUnity::operator*(const RootOfUnity& other) const {
  require_same_prime(p_, other.p_);
  return {p_, exponent_ + other.exponent_};
}

RootOfUnity weil(const TorsionPoint& s, const TorsionPoint& t) {
  require_same_prime(s.p(), t.p());
  return {s.p(), static_cast<std::int64_t>(s.b()) * t.a() - static_cast<std::int64_t>(s.a()) * t.b()};
}

RootOfUnity epsilon(const TorsionPoint& s, const TorsionPoint& t) {
  return weil(s, t).pow((s.p() + 1) / 2);
}

std::vector<RootOfUnity> w_map(const TorsionPoint& s) {
  std::vector<RootOfUnity> values;
  for (const auto& t : all_points(s.p())) values.push_back(weil(s, t));
  return values;
}

Basis::Basis(const TorsionPoint& p_point, const TorsionPoint& q_point)
    : p_(p_point), q_(q_point), det_inverse_(0) {
  require_same_prime(p_point.p(), q_point.p());
  const int p = p_point.p();
  const int det = reduce_mod(static_cast<std::int64_t>(p_.a()) * q_.b() -
                                 static_cast<std::int64_t>(p_.b()) * q_.a(), p);
  if (det == 0) {
    throw BasisError("points (" + p_.to_string() + ") and (" + q_.to_string() +
                     ") do not generate E[p]");
  }
  det_inverse_ = static_cast<int>(mod_inv(static_cast<std::uint64_t>(det), static_cast<std::uint64_t>(p)));
}

std::pair<int, int> Basis::coordinates(const TorsionPoint& t) const {
  require_same_prime(t.p(), p());
  // Solve t = a*P + b*Q by Cramer's rule mod p.
  const int p = this->p();
  const std::int64_t a = static_cast<std::int64_t>(t.a()) * q_.b() - static_cast<std::int64_t>(t.b()) * q_.a();
  const std::int64_t b = static_cast<std::int64_t>(p_.a()) * t.b() - static_cast<std::int64_t>(p_.b()) * t.a();
  return {reduce_mod(a * det_inverse_, p), reduce_mod(b * det_inverse_, p)};
}

}  // namespace tate
