// Copyright 2026 The realvar Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Acceptance harness shared by `realvar bench` and the acceptance test.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "realvar/pp.hpp"

namespace realvar::bench {

inline constexpr int kCriteria = 10;

struct CriterionReport {
  int id = 0;
  std::string title;
  bool pass = false;
  /// One line per failed check, plus a few informational lines.
  std::vector<std::string> notes;
  double seconds = 0.0;
};

/// Runs one acceptance criterion (1..kCriteria). Solves are memoized per
/// process, so criteria sharing a system only pay for it once.
CriterionReport run_criterion(int id);

/// "PASS  3  <title>  (1.2 s)" followed by indented notes.
std::string format_report(const CriterionReport& r, bool with_notes = true);

/// Random system whose real variety is known exactly.
struct OracleSystem {
  PolySystem system;
  std::vector<Eigen::VectorXd> roots;
  /// Univariate only: the generator is a product of the root factors, sometimes
  /// times a quadratic without real zeros.
  bool univariate = false;
};

/// Deterministic family of product-of-linear-forms systems in 1 to 3
/// variables with 1 to 4 half-integer real roots each.
std::vector<OracleSystem> oracle_systems(std::uint64_t seed, int count);

/// Real roots of a univariate polynomial from the eigenvalues of its companion
/// matrix; eigenvalues with |imag| > imag_tol * (1 + |z|) are dropped.
std::vector<double> companion_real_roots(const Polynomial& p, double imag_tol = 1e-6);

/// Cached solve of a corpus system (criterion Both in real mode, Dims in complex).
const SolveResult& corpus_solve(const std::string& name, Mode mode);

}  // namespace realvar::bench
