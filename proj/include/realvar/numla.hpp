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
#include <optional>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "realvar/polycore.hpp"

namespace realvar {

class LinalgError : public Error {
 public:
  using Error::Error;
};

/// Rank threshold: absolute when set, else
/// relative * max(sigma_max, sigma_floor) * max(rows, cols).
struct RankTolerance {
  double relative = 1e-8;
  std::optional<double> absolute;
  /// Lower bound on the scale used by the relative rule, so a matrix that is
  /// pure rounding noise is not mistaken for a full-rank one.
  double sigma_floor = 0.0;

  /// When positive, singular values in (tau, gap_band * scale] are treated as
  /// noise if a relative gap of at least gap_ratio separates them from the
  /// values above. Used where the input carries interior-point error.
  double gap_band = 0.0;
  double gap_ratio = 1e3;

  RankTolerance with_floor(double floor) const {
    RankTolerance t = *this;
    t.sigma_floor = floor;
    return t;
  }
  RankTolerance with_gap_band(double band) const {
    RankTolerance t = *this;
    t.gap_band = band;
    return t;
  }

  /// Default tolerance, honoring the REALVAR_RANK_TOL environment variable.
  static RankTolerance from_env();
  double threshold(double sigma_max, Eigen::Index rows, Eigen::Index cols) const;
};

struct RankDecision {
  int rank = 0;
  std::vector<double> singular_values;  // descending
  double threshold_used = 0.0;
  /// Largest ratio sigma_k / sigma_{k+1} at the cut; infinity when the cut is at an end.
  double gap() const;
};

/// Singular values (descending, padded with zeros to cols) and the full set of
/// right singular vectors. Tall inputs are reduced by QR first.
struct RightSvd {
  Eigen::VectorXd sigma;
  Eigen::MatrixXd V;
};
RightSvd right_svd(const Eigen::Ref<const Eigen::MatrixXd>& A);

/// Singular values of A in descending order. Tall inputs are reduced by QR first.
Eigen::VectorXd singular_values(const Eigen::Ref<const Eigen::MatrixXd>& A);

RankDecision numeric_rank(const Eigen::Ref<const Eigen::MatrixXd>& A,
                          const RankTolerance& tol = {});

/// Orthonormal rows spanning the numerical kernel of A.
Eigen::MatrixXd nullspace_basis(const Eigen::Ref<const Eigen::MatrixXd>& A,
                                const RankTolerance& tol = {},
                                RankDecision* decision = nullptr);

/// Orthonormal rows spanning the numerical row space of A.
Eigen::MatrixXd rowspace_basis(const Eigen::Ref<const Eigen::MatrixXd>& A,
                               const RankTolerance& tol = {},
                               RankDecision* decision = nullptr);

struct RrefResult {
  Eigen::MatrixXd R;
  std::vector<int> pivot_cols;
};

/// Gauss-Jordan elimination with partial pivoting. A column is accepted as a
/// pivot when its best remaining entry exceeds the same threshold tau that
/// numeric_rank would use for A.
RrefResult rref_partial_pivot(const Eigen::Ref<const Eigen::MatrixXd>& A,
                              const RankTolerance& tol = {});

struct SymmetricEig {
  Eigen::VectorXd values;   // ascending
  Eigen::MatrixXd vectors;  // columns
};

SymmetricEig symmetric_eig(const Eigen::Ref<const Eigen::MatrixXd>& A);

struct EigenCluster {
  std::complex<double> mean;
  int size = 0;  // algebraic multiplicity; for a conjugate pair, of one member
  /// Real orthonormal basis of the invariant subspace (2*size columns for a pair).
  Eigen::MatrixXd basis;
  /// Complex orthonormal basis for the member with Im(mean) >= 0.
  Eigen::MatrixXcd complex_basis;
  bool conjugate_pair = false;
};

/// Groups eigenvalues whose distance is within cluster_tol * (1 + ||A||),
/// closed transitively, and returns an orthonormal basis of each cluster's
/// invariant subspace via a reordered Schur form. Conjugate clusters of a
/// real matrix are reported once with conjugate_pair set.
std::vector<EigenCluster> clustered_schur(const Eigen::Ref<const Eigen::MatrixXd>& A,
                                          double cluster_tol);

/// Complex Schur form with a cluster moved to the leading block.
/// Exposed for testing the reordering primitive.
struct ComplexSchur {
  Eigen::MatrixXcd T;
  Eigen::MatrixXcd U;  // A = U T U^H
};
ComplexSchur complex_schur(const Eigen::Ref<const Eigen::MatrixXd>& A);
/// Moves the diagonal entry at position from to position to (< from) by
/// adjacent Givens swaps, updating T and U.
void schur_move_up(ComplexSchur& S, Eigen::Index from, Eigen::Index to);

}  // namespace realvar
