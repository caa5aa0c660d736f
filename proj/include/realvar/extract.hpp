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

#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "realvar/moment.hpp"
#include "realvar/polycore.hpp"
#include "realvar/quotient.hpp"

namespace realvar {

struct Root {
  Eigen::VectorXcd coords;
  double residual = 0.0;  // max_j |h_j(v)| over the original generators
  bool is_real = false;
  int cluster_size = 1;
};

struct ExtractOptions {
  double cluster_tol = 1e-6;
  int max_retries = 3;
  /// Relative spread of a cluster's coordinate eigenvalues above which the
  /// cluster is considered to hold distinct roots.
  double merge_tol = 1e-4;
};

class ExtractError : public Error {
 public:
  using Error::Error;
};

/// Roots of the quotient algebra from a random combination of X_i^T.
/// Residuals are left at zero; see verify_roots.
std::vector<Root> extract_roots(const MultiplicationSystem& ms, const QuotientBasis& qb,
                                std::uint64_t seed, const ExtractOptions& opts = {});

struct VerifyOptions {
  double imag_tol = 1e-6;      // scaled by 1 + |v|
  double residual_tol = 1e-4;  // scaled per generator, see scaled_residual
  bool refine = true;
};

struct Verification {
  std::vector<Root> accepted;
  std::vector<Root> rejected;
};

/// max_j |h_j(v)| / (||h_j||_1 * max(1, |v|_inf)^deg h_j).
double scaled_residual(const PolySystem& sys, const Eigen::VectorXcd& v);

/// Real mode keeps real roots that pass the residual gate after optional
/// Gauss-Newton polish. Complex mode keeps every root and only records residuals.
Verification verify_roots(const std::vector<Root>& roots, const PolySystem& sys, Mode mode,
                          const VerifyOptions& opts = {});

}  // namespace realvar
