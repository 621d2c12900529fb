// Copyright 2026 The tate Authors.
// SPDX-License-Identifier: Apache-2.0
#include "tate/verify.hpp"

#include <random>
#include <stdexcept>
#include <utility>

#include "tate/algebra.hpp"
#include "tate/closed_forms.hpp"
#include "tate/local_pairing.hpp"
#include "tate/modarith.hpp"
#include "tate/qplane.hpp"

namespace tate {

std::vector<Suite> parse_suites(std::string_view name) {
  if (name == "all") return {Suite::kStar, Suite::kClosed, Suite::kQPlane, Suite::kNorm, Suite::kLocal};
  if (name == "star") return {Suite::kStar};
  if (name == "closed") return {Suite::kClosed};
  if (name == "qplane") return {Suite::kQPlane};
  if (name == "norm") return {Suite::kNorm};
  if (name == "local") return {Suite::kLocal};
  throw std::invalid_argument("unknown suite '" + std::string(name) + "'");
}

std::string_view suite_name(Suite suite) {
  switch (suite) {
    case Suite::kStar: return "star";
    case Suite::kClosed: return "closed";
    case Suite::kQPlane: return "qplane";
    case Suite::kNorm: return "norm";
    case Suite::kLocal: return "local";
  }
  return "?";
}

bool closed_symbolic_is_slow(int p) { return p >= 7; }

bool suite_is_refused(Suite suite, int p, bool allow_slow) {
  return suite == Suite::kClosed && p >= 11 && !allow_slow;
}

namespace {

using Rng = std::mt19937_64;

// Accumulates a single named check; keeps the first failure message.
class Check {
 public:
  explicit Check(std::string name) { result_.name = std::move(name); }

  void expect(bool ok, const std::string& what) {
    ++result_.cases;
    if (!ok && result_.passed) {
      result_.passed = false;
      result_.detail = what;
    }
  }
  template <class F>
  void expect_lazy(bool ok, F&& describe) {
    if (ok) {
      ++result_.cases;
    } else {
      expect(false, describe());
    }
  }

  CheckResult done() { return std::move(result_); }

 private:
  CheckResult result_;
};

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

TorsionPoint random_point(Rng& rng, int p) { return {p, uniform(rng, 0, p - 1), uniform(rng, 0, p - 1)}; }

// All ordered pairs for p = 3, otherwise `samples` random pairs.
std::vector<std::pair<TorsionPoint, TorsionPoint>> point_pairs(Rng& rng, int p, int samples) {
  std::vector<std::pair<TorsionPoint, TorsionPoint>> pairs;
  if (p == 3) {
    for (const auto& s : all_points(p)) {
      for (const auto& t : all_points(p)) pairs.emplace_back(s, t);
    }
  } else {
    for (int i = 0; i < samples; ++i) pairs.emplace_back(random_point(rng, p), random_point(rng, p));
  }
  return pairs;
}

LaurentPoly random_coefficient(Rng& rng, int p) {
  std::vector<mpq_class> coeffs(static_cast<std::size_t>(p - 1));
  for (auto& c : coeffs) c = uniform(rng, -2, 2);
  if (coeffs[0] == 0) coeffs[0] = 1;
  LaurentPoly f(LaurentMonomial(), CycNumber(p, coeffs));
  const TorsionPoint t = random_point(rng, p);
  if (!t.is_zero()) f = f * LaurentPoly::variable(t, uniform(rng, -1, 2) == 0 ? 1 : uniform(rng, -1, 2));
  return f;
}

AlgebraElement<SymbolicRing> random_element(Rng& rng, int p, int terms) {
  AlgebraElement<SymbolicRing> f{SymbolicRing(p)};
  for (int i = 0; i < terms; ++i) f.add_term(random_point(rng, p), random_coefficient(rng, p));
  return f;
}

std::vector<CheckResult> star_suite(const VerifyOptions& options) {
  const int p = options.p;
  Rng rng(options.seed);
  const SymbolicRing ring(p);
  const auto gamma = symbolic_gamma(p);
  const auto rho = del_gamma(gamma);
  const auto zero = TorsionPoint::zero(p);
  const auto delta = [&](const TorsionPoint& t) { return AlgebraElement<SymbolicRing>::indicator(ring, t); };
  std::vector<CheckResult> results;

  {
    Check check("weil-laws");
    for (const auto& [s, t] : point_pairs(rng, p, 200)) {
      const TorsionPoint u = random_point(rng, p);
      check.expect((weil(s, t) * weil(t, s)).is_one() && weil(s, s).is_one(), "alternating fails at " + s.to_string());
      check.expect(weil(s + t, u) == weil(s, u) * weil(t, u), "bilinearity fails at " + s.to_string());
      check.expect(epsilon(s, t).pow(2) == weil(s, t), "eps^2 != e at " + s.to_string() + " / " + t.to_string());
    }
    for (const auto& s : all_points(p)) {
      if (s.is_zero()) continue;
      bool witnessed = false;
      for (const auto& t : all_points(p)) witnessed = witnessed || !weil(s, t).is_one();
      check.expect(witnessed, "degenerate at " + s.to_string());
    }
    check.expect(weil(Basis::standard(p).Q(), Basis::standard(p).P()) == RootOfUnity(p, 1), "e(Q,P) != zeta");
    results.push_back(check.done());
  }
  {
    Check check("w-map-cocycle");
    std::vector<TorsionPoint> points = p <= 5 ? all_points(p) : std::vector<TorsionPoint>{};
    for (int i = 0; p > 5 && i < 20; ++i) points.push_back(random_point(rng, p));
    for (const auto& s : points) {
      const auto d = del_gamma(character_gamma(ring, s));
      bool trivial = true;
      for (const auto& t1 : all_points(p)) {
        for (const auto& t2 : all_points(p)) trivial = trivial && d(t1, t2) == ring.one();
      }
      check.expect(trivial, "del(w(" + s.to_string() + ")) != 1");
    }
    results.push_back(check.done());
  }
  {
    Check check("rho-normalized-symmetric");
    check.expect(rho.is_normalized(), "del gamma not normalized");
    check.expect(rho.is_symmetric(), "del gamma not symmetric");
    results.push_back(check.done());
  }
  {
    Check products("delta-product");
    Check commutation("commutation");
    for (const auto& [t, s] : point_pairs(rng, p, 100)) {
      const auto lhs = star(delta(t), delta(s), rho);
      const auto expected = AlgebraElement<SymbolicRing>::indicator(
          ring, t + s, ring.mul(ring.root(epsilon(t, s).exponent()), rho(t, s)));
      products.expect(lhs == expected, "delta_" + t.to_string() + " * delta_" + s.to_string());
      const auto swapped = star(delta(s), delta(t), rho).scaled(ring.root(weil(t, s).exponent()));
      commutation.expect(lhs == swapped, "delta_" + t.to_string() + ", delta_" + s.to_string());
    }
    results.push_back(products.done());
    results.push_back(commutation.done());
  }
  {
    Check power("delta-power");
    Check inverse("delta-inverse");
    std::vector<TorsionPoint> points = p == 3 ? all_points(p) : std::vector<TorsionPoint>{};
    for (int i = 0; p != 3 && i < 100; ++i) points.push_back(random_point(rng, p));
    for (const auto& t : points) {
      power.expect(star_pow(delta(t), p, rho) == AlgebraElement<SymbolicRing>::indicator(ring, zero, alpha_of(gamma, t)),
                   "delta_" + t.to_string() + "^{*p}");
      const auto inv = delta_inverse(t, gamma);
      inverse.expect(star(delta(t), inv, rho) == delta(zero) && star(inv, delta(t), rho) == delta(zero),
                     "delta_" + t.to_string());
    }
    results.push_back(power.done());
    results.push_back(inverse.done());
  }
  {
    Check unit("unit");
    Check assoc("associativity");
    const int samples = p == 3 ? 100 : 100;
    for (int i = 0; i < samples; ++i) {
      const auto f = random_element(rng, p, 3);
      unit.expect(star(delta(zero), f, rho) == f && star(f, delta(zero), rho) == f, "random element " + std::to_string(i));
      const auto g = random_element(rng, p, 2);
      const auto h = random_element(rng, p, 2);
      assoc.expect(star(star(f, g, rho), h, rho) == star(f, star(g, h, rho), rho), "random triple " + std::to_string(i));
    }
    AlgebraElement<SymbolicRing> empty(ring);
    unit.expect(star(empty, random_element(rng, p, 2), rho).empty(), "empty operand");
    results.push_back(unit.done());
    results.push_back(assoc.done());
  }
  {
    Check check("galois-model");
    const Basis basis = Basis::standard(p);
    const auto sigma = unipotent_sigma(basis);
    for (const auto& t : all_points(p)) {
      check.expect(push_forward(delta(t), sigma) == delta(sigma(t)), "sigma(delta_" + t.to_string() + ")");
    }
    check.expect(sigma(basis.P()) == basis.P() && sigma(basis.Q()) == basis.Q() + basis.P(), "sigma on basis");
    const auto d = build_delta(ring, basis);
    check.expect(push_forward(d, sigma) == d, "sigma(Delta) != Delta");
    results.push_back(check.done());
  }
  return results;
}

template <CoefficientRing Ring>
void closed_equivalence(Check& check, const Basis& basis, const GammaAssignment<Ring>& gamma, const std::string& label) {
  const Ring& ring = gamma.ring();
  const int p = basis.p();
  const auto zero = TorsionPoint::zero(p);
  const auto rho = del_gamma(gamma);
  const auto brute = star_pow(build_delta(ring, basis), p, rho);
  const auto inter = intermediate_form(basis, gamma);
  const auto gform = gamma_form(basis, gamma);
  const auto rform = rho_form(basis, rho);
  const auto at_o = AlgebraElement<Ring>::indicator(ring, zero, gform.o_coefficient);
  check.expect(brute == *inter.full_element, label + ": star_pow != intermediate");
  check.expect(*inter.full_element == at_o, label + ": intermediate != gamma form at delta_O");
  check.expect(ring.equal(rform.o_coefficient, gform.o_coefficient), label + ": rho form != gamma form");
  bool only_o = true;
  for (const auto& [t, c] : brute.support()) only_o = only_o && t.is_zero();
  check.expect(only_o, label + ": nonzero component away from delta_O");
  std::uint64_t expected_tuples = 1;
  for (int i = 0; i < p - 1; ++i) expected_tuples *= static_cast<std::uint64_t>(p);
  check.expect(gform.tuple_count == expected_tuples, label + ": tuple count");
}

std::vector<CheckResult> closed_suite(const VerifyOptions& options) {
  const int p = options.p;
  Rng rng(options.seed);
  std::vector<CheckResult> results;
  const Basis basis = Basis::standard(p);

  if (!closed_symbolic_is_slow(p) || options.allow_slow) {
    Check check("equivalence-symbolic");
    closed_equivalence(check, basis, symbolic_gamma(p), "p=" + std::to_string(p));
    results.push_back(check.done());

    Check invariance("basis-invariance");
    const auto reference = gamma_form(basis, symbolic_gamma(p)).o_coefficient;
    for (int n = 1; n < p; ++n) {
      const Basis shifted(basis.P(), basis.Q() + basis.P() * n);
      invariance.expect(gamma_form(shifted, symbolic_gamma(p)).o_coefficient == reference,
                        "Q -> Q+" + std::to_string(n) + "P");
      invariance.expect(build_delta(SymbolicRing(p), shifted) == build_delta(SymbolicRing(p), basis), "Delta shift");
    }
    results.push_back(invariance.done());

    Check mult("multiplicative-specialization");
    const auto special = multiplicative_specialization(p);
    mult.expect_lazy(special.holds, [&] { return special.lhs.to_string() + " != " + special.rhs.to_string(); });
    results.push_back(mult.done());
  }

  if (closed_symbolic_is_slow(p)) {
    const TameFieldModel model(p, options.q.value_or(smallest_prime_one_mod(p)), options.generator);
    const auto ring = model.residue_ring();
    Check check("equivalence-numeric");
    for (int trial = 0; trial < 20; ++trial) {
      const auto gamma = GammaAssignment<ModularRing>::from_function(ring, [&](const TorsionPoint&) {
        return static_cast<std::uint64_t>(uniform(rng, 1, static_cast<int>(model.q()) - 1));
      });
      closed_equivalence(check, basis, gamma, "F_" + std::to_string(model.q()) + " trial " + std::to_string(trial));
    }
    results.push_back(check.done());
  }
  return results;
}

std::vector<CheckResult> qplane_suite(const VerifyOptions& options) {
  const int p = options.p;
  Rng rng(options.seed);
  std::vector<CheckResult> results;
  {
    Check check("identity");
    const auto id = verify_qplane_identity(p);
    check.expect_lazy(id.holds, [&] { return id.lhs.to_string() + " != " + id.rhs.to_string(); });
    results.push_back(check.done());
  }
  auto random_qp = [&](int max_terms, int max_exp) {
    QPlaneElement f(p);
    const int terms = uniform(rng, 1, max_terms);
    for (int i = 0; i < terms; ++i) {
      f.add_term(uniform(rng, 0, max_exp), uniform(rng, 0, max_exp), CycNumber::root(p, uniform(rng, 0, p - 1)) * CycNumber(p, uniform(rng, 1, 3)));
    }
    return f;
  };
  {
    Check check("associativity");
    for (int i = 0; i < 200; ++i) {
      const auto f = random_qp(1, 2 * p);
      const auto g = random_qp(1, 2 * p);
      const auto h = random_qp(1, 2 * p);
      check.expect((f * g) * h == f * (g * h), "random monomial triple " + std::to_string(i));
    }
    results.push_back(check.done());
  }
  {
    Check check("centrality");
    const auto xp = QPlaneElement::monomial(p, p, 0);
    const auto yp = QPlaneElement::monomial(p, 0, p);
    for (int i = 0; i < 50; ++i) {
      const auto f = random_qp(4, 2 * p);
      check.expect(xp * f == f * xp && yp * f == f * yp, "random element " + std::to_string(i));
    }
    results.push_back(check.done());
  }
  if (p <= 7) {
    Check check("star-embedding");
    const Basis basis = Basis::standard(p);
    for (int i = 0; i < 50; ++i) {
      const auto f = random_qp(2, 2);
      const auto g = random_qp(2, 2);
      const auto rho = RhoAssignment<SymbolicRing>::constant_one(SymbolicRing(p));
      check.expect(to_star_algebra(f * g, basis) == star(to_star_algebra(f, basis), to_star_algebra(g, basis), rho),
                   "random word pair " + std::to_string(i));
    }
    results.push_back(check.done());

    Check mult("multiplicative-specialization");
    const auto special = multiplicative_specialization(p);
    mult.expect_lazy(special.holds, [&] { return special.lhs.to_string() + " != " + special.rhs.to_string(); });
    results.push_back(mult.done());
  }
  return results;
}

std::vector<CheckResult> norm_suite(const VerifyOptions& options) {
  Check check("norm-identity");
  const auto id = verify_norm_identity(options.p);
  check.expect_lazy(id.holds, [&] { return id.lhs.to_string() + " != " + id.rhs.to_string(); });
  return {check.done()};
}

std::vector<CheckResult> local_suite(const VerifyOptions& options) {
  const int p = options.p;
  const TameFieldModel model(p, options.q.value_or(smallest_prime_one_mod(p)), options.generator);
  const auto q = model.q();
  Rng rng(options.seed);
  std::vector<TameElement> reps;
  for (int n = 0; n < p; ++n) {
    for (int k = 0; k < p; ++k) reps.emplace_back(n, static_cast<std::int64_t>(mod_pow(model.generator(), static_cast<std::uint64_t>(k), q)), model);
  }
  std::vector<CheckResult> results;
  const PairingValue zero(p, 0);
  auto name = [](const TameElement& a, const TameElement& b) { return "{" + a.to_string() + ", " + b.to_string() + "}"; };

  Check bilinear("hilbert-bilinear");
  Check antisym("hilbert-antisymmetric");
  Check degenerate("hilbert-pth-power");
  Check scaling("unramified-scaling");
  for (const auto& a : reps) {
    for (const auto& b : reps) {
      const auto ab = hilbert(a, b, model);
      antisym.expect(ab + hilbert(b, a, model) == zero, name(a, b));
      // Exhaustive third argument for p <= 5, a random sample beyond.
      const std::size_t samples = p <= 5 ? reps.size() : 8;
      for (std::size_t i = 0; i < samples; ++i) {
        const auto& c = p <= 5 ? reps[i] : reps[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(reps.size()) - 1))];
        bilinear.expect(hilbert(a * c, b, model) == ab + hilbert(c, b, model) &&
                            hilbert(a, b * c, model) == ab + hilbert(a, c, model),
                        name(a, b) + " with " + c.to_string());
        degenerate.expect(hilbert(c.pow(p) * a, b, model) == ab, name(a, b));
      }
      for (int d = 1; d <= 6; ++d) {
        bool ok = false;
        try {
          ok = unramified_scaling(a, b, d, model) == ab * d;
        } catch (const std::logic_error&) {
        }
        scaling.expect(ok, name(a, b) + " d=" + std::to_string(d));
      }
    }
  }
  results.push_back(bilinear.done());
  results.push_back(antisym.done());
  results.push_back(degenerate.done());
  results.push_back(scaling.done());

  Check steinberg("hilbert-steinberg");
  for (std::int64_t n = -p; n <= p; ++n) {
    for (std::uint64_t u = 1; u < q; ++u) {
      const TameElement a(n, static_cast<std::int64_t>(u), model);
      if (const auto b = one_minus(a, model)) steinberg.expect(hilbert(a, *b, model) == zero, "a = " + a.to_string());
    }
  }
  results.push_back(steinberg.done());

  Check pairing("qk-split");
  pairing.expect(iota(model.zeta(), model) == PairingValue(p, 1), "iota(zeta) != 1/p");
  for (const auto& b : reps) {
    pairing.expect(qk_split(TameElement(0, 1, model), b, model) == zero, "alpha(P) = [1]");
    for (const auto& x : reps) pairing.expect(qk_split(x.pow(p), b, model) == zero, "p-th power alpha(P)");
  }
  results.push_back(pairing.done());
  return results;
}

}  // namespace

std::vector<CheckResult> run_suite(Suite suite, const VerifyOptions& options) {
  switch (suite) {
    case Suite::kStar: return star_suite(options);
    case Suite::kClosed: return closed_suite(options);
    case Suite::kQPlane: return qplane_suite(options);
    case Suite::kNorm: return norm_suite(options);
    case Suite::kLocal: return local_suite(options);
  }
  return {};
}

}  // namespace tate
