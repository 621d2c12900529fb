// Copyright 2026 The tate Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace tate {

enum class Suite { kStar, kClosed, kQPlane, kNorm, kLocal };

/// Suites in declaration order; "all" expands to every suite.
std::vector<Suite> parse_suites(std::string_view name);
std::string_view suite_name(Suite suite);

struct VerifyOptions {
  int p = 3;
  bool allow_slow = false;
  std::optional<std::uint64_t> q;
  std::optional<std::uint64_t> generator;
  std::uint64_t seed = 20140901;
};

struct CheckResult {
  std::string name;
  bool passed = true;
  std::uint64_t cases = 0;
  std::string detail;  // first counterexample on failure
};

/// Whether the suite at this p needs --allow-slow. The symbolic closed-form
/// path is slow from p = 7; every closed-form path is slow from p = 11.
bool closed_symbolic_is_slow(int p);
bool suite_is_refused(Suite suite, int p, bool allow_slow);

/// Runs one suite. Deterministic for fixed options.
std::vector<CheckResult> run_suite(Suite suite, const VerifyOptions& options);

}  // namespace tate
