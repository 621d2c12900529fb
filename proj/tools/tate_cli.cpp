// Copyright 2026 The tate Authors.
// SPDX-License-Identifier: Apache-2.0
//
// tate: expand closed forms for Delta_{P,Q}^{*p}, run verification suites,
// and evaluate local pairings in the tame model.
//
// Exit codes: 0 success / all checks pass, 1 a check failed, 2 usage error.
#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>

#include "tate/closed_forms.hpp"
#include "tate/local_pairing.hpp"
#include "tate/modarith.hpp"
#include "tate/serialize.hpp"
#include "tate/verify.hpp"

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

// Expansion beyond this prime enumerates at least 11^10 tuples.
constexpr int kSlowExpansionPrime = 11;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  int p = 0;
  int max_p = tate::OddPrime::kDefaultMax;
  std::string form = "gamma";
  std::string format;
  std::string suite = "all";
  bool allow_slow = false;
  std::optional<std::uint64_t> q;
  std::optional<std::uint64_t> gen;
  std::string alpha_p, alpha_q, a, b;
};

int checked_prime(const RunConfig& cfg) {
  try {
    return tate::OddPrime(cfg.p, cfg.max_p).value();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

tate::TameFieldModel checked_model(const RunConfig& cfg, int p) {
  if (!cfg.q) throw UsageError("--q is required");
  try {
    return tate::TameFieldModel(p, *cfg.q, cfg.gen);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

tate::TameElement checked_element(const std::string& text, const tate::TameFieldModel& model) {
  try {
    return tate::TameElement::parse(text, model);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

int cmd_expand(RunConfig cfg) {
  const int p = checked_prime(cfg);
  if (cfg.form == "latex") {  // shorthand for --form gamma --format latex
    cfg.form = "gamma";
    cfg.format = "latex";
  }
  if (p >= kSlowExpansionPrime && !cfg.allow_slow) {
    throw UsageError("expansion at p = " + std::to_string(p) + " enumerates " + std::to_string(p) + "^" +
                     std::to_string(p - 1) + " tuples; pass --allow-slow to run it anyway");
  }
  const tate::Basis basis = tate::Basis::standard(p);
  const auto gamma = tate::symbolic_gamma(p);
  const tate::FormKind kind = cfg.form == "rho"            ? tate::FormKind::kRho
                              : cfg.form == "intermediate" ? tate::FormKind::kIntermediate
                                                           : tate::FormKind::kGamma;
  const auto result = [&] {
    switch (kind) {
      case tate::FormKind::kRho: return tate::rho_form(basis, tate::del_gamma(gamma));
      case tate::FormKind::kIntermediate: return tate::intermediate_form(basis, gamma);
      case tate::FormKind::kGamma: break;
    }
    return tate::gamma_form(basis, gamma);
  }();

  const std::string format = cfg.format.empty() ? "json" : cfg.format;
  if (format == "json") {
    tate::Json out{{"p", p},
                   {"form", cfg.form},
                   {"convention", std::string(tate::kConvention)},
                   {"terms", tate::to_json(result.o_coefficient)}};
    if (result.full_element) out["element"] = tate::to_json(*result.full_element);
    std::cout << out.dump() << "\n";
  } else if (format == "latex") {
    std::cout << "% convention " << tate::kConvention << "\n"
              << tate::latex_closed_form(kind, basis, result.o_coefficient) << "\n";
  } else {
    std::cout << "# Delta_{P,Q}^{*" << p << "} " << cfg.form << " form, convention " << tate::kConvention << ", "
              << result.tuple_count << " tuples\n";
    for (const auto& [monomial, coeff] : result.o_coefficient.terms()) {
      std::cout << "(" << coeff.to_string() << ") * " << monomial.to_string() << "\n";
    }
  }
  return 0;
}

int cmd_verify(const RunConfig& cfg) {
  const int p = checked_prime(cfg);
  std::vector<tate::Suite> suites;
  try {
    suites = tate::parse_suites(cfg.suite);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (cfg.q) checked_model(cfg, p);
  if (suites.size() == 1 && tate::suite_is_refused(suites.front(), p, cfg.allow_slow)) {
    throw UsageError("suite closed at p = " + std::to_string(p) + " needs --allow-slow");
  }
  tate::VerifyOptions options;
  options.p = p;
  options.allow_slow = cfg.allow_slow;
  options.q = cfg.q;
  options.generator = cfg.gen;

  std::cout << "# tate verify p=" << p << " convention " << tate::kConvention << "\n";
  bool all_passed = true;
  std::string first_failure;
  for (auto suite : suites) {
    const auto name = std::string(tate::suite_name(suite));
    if (tate::suite_is_refused(suite, p, cfg.allow_slow)) {
      std::cout << "SKIP " << name << " (needs --allow-slow at p=" << p << ")\n";
      continue;
    }
    for (const auto& check : tate::run_suite(suite, options)) {
      std::cout << (check.passed ? "PASS " : "FAIL ") << name << "/" << check.name << " (" << check.cases
                << " cases)";
      if (!check.passed) {
        std::cout << ": " << check.detail;
        if (all_passed) first_failure = name + "/" + check.name + ": " + check.detail;
        all_passed = false;
      }
      std::cout << "\n";
    }
  }
  if (!all_passed) {
    std::cout << "first counterexample: " << first_failure << "\n";
    return kExitFailure;
  }
  return 0;
}

void print_pairing(const tate::PairingValue& value, const tate::TameFieldModel& model, const std::string& format) {
  if (format == "text") {
    std::cout << value.to_string() << "\n";
  } else {
    std::cout << tate::to_json(value, model).dump() << "\n";
  }
}

int cmd_pair(const RunConfig& cfg) {
  const int p = checked_prime(cfg);
  const auto model = checked_model(cfg, p);
  const auto alpha_p = checked_element(cfg.alpha_p, model);
  const auto alpha_q = checked_element(cfg.alpha_q, model);
  print_pairing(tate::qk_split(alpha_p, alpha_q, model), model, cfg.format);
  return 0;
}

int cmd_hilbert(const RunConfig& cfg) {
  const int p = checked_prime(cfg);
  const auto model = checked_model(cfg, p);
  print_pairing(tate::hilbert(checked_element(cfg.a, model), checked_element(cfg.b, model), model), model,
                cfg.format);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Twisted group algebra on E[p], closed forms for Delta^{*p}, and tame local pairings"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_prime = [&](CLI::App* sub) {
    sub->add_option("--p", cfg.p, "odd prime p")->required();
    sub->add_option("--max-p", cfg.max_p, "upper guard on p")->capture_default_str();
  };
  auto add_model = [&](CLI::App* sub, bool required) {
    auto* q = sub->add_option("--q", cfg.q, "residue field size, a prime = 1 mod p");
    if (required) q->required();
    sub->add_option("--gen", cfg.gen, "generator of F_q^x (default: smallest)");
  };

  auto* expand = app.add_subcommand("expand", "expand Delta_{P,Q}^{*p} symbolically");
  add_prime(expand);
  expand->add_option("--form", cfg.form, "gamma | rho | intermediate")
      ->check(CLI::IsMember({"gamma", "rho", "intermediate", "latex"}));
  expand->add_option("--format", cfg.format, "json | latex | text")->check(CLI::IsMember({"json", "latex", "text"}));
  expand->add_flag("--allow-slow", cfg.allow_slow, "permit expansions at p >= 11");

  auto* verify = app.add_subcommand("verify", "run verification suites");
  add_prime(verify);
  verify->add_option("--suite", cfg.suite, "all | star | closed | qplane | norm | local")
      ->check(CLI::IsMember({"all", "star", "closed", "qplane", "norm", "local"}));
  verify->add_flag("--allow-slow", cfg.allow_slow, "permit the symbolic closed-form path at p >= 7");
  add_model(verify, false);

  auto* pair = app.add_subcommand("pair", "evaluate q_K(alpha) from alpha(P), alpha(Q)");
  add_prime(pair);
  add_model(pair, true);
  pair->add_option("--alpha-p", cfg.alpha_p, "alpha(P) as n:u")->required();
  pair->add_option("--alpha-q", cfg.alpha_q, "alpha(Q) as n:u")->required();
  pair->add_option("--format", cfg.format, "json | text")->check(CLI::IsMember({"json", "text"}));

  auto* hilbert = app.add_subcommand("hilbert", "evaluate the tame Hilbert symbol {a, b}");
  add_prime(hilbert);
  add_model(hilbert, true);
  hilbert->add_option("--a", cfg.a, "a as n:u")->required();
  hilbert->add_option("--b", cfg.b, "b as n:u")->required();
  hilbert->add_option("--format", cfg.format, "json | text")->check(CLI::IsMember({"json", "text"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*expand) return cmd_expand(cfg);
    if (*verify) return cmd_verify(cfg);
    if (*pair) return cmd_pair(cfg);
    if (*hilbert) return cmd_hilbert(cfg);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }
  return kExitUsage;
}
