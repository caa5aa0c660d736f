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

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "realvar/moment.hpp"
#include "realvar/numla.hpp"
#include "realvar/polycore.hpp"

namespace realvar {

class SdpError : public Error {
 public:
  using Error::Error;
};

/// Dense SDP in the form
///   max b^T y  s.t.  Z = C - sum_i y_i A_i >= 0,
/// with primal  min <C, X>  s.t.  <A_i, X> = b_i, X >= 0.
struct DenseSdp {
  Eigen::MatrixXd C;
  std::vector<Eigen::MatrixXd> A;
  Eigen::VectorXd b;
};

struct IpmOptions {
  double gap_tol = 1e-10;
  double feas_tol = 1e-9;
  int max_iter = 200;
  /// Fraction of the distance to the boundary taken by each corrector step.
  double step_fraction = 0.97;
};

struct IpmResult {
  Eigen::MatrixXd X;
  Eigen::VectorXd y;
  Eigen::MatrixXd Z;
  double primal_obj = 0.0;
  double dual_obj = 0.0;
  double gap = 0.0;
  int iterations = 0;
  /// False when the iteration stalled short of gap_tol but within 1e-6.
  bool converged = false;
};

/// Primal-dual path following with the HKM direction and Mehrotra
/// predictor-corrector steps. X0 and y0 must be strictly feasible for the
/// conic constraints (X0 > 0, C - A*(y0) > 0); linear residuals are allowed.
IpmResult solve_dense_sdp(const DenseSdp& sdp, const Eigen::MatrixXd& X0,
                          const Eigen::VectorXd& y0, const IpmOptions& opts = {});

/// Solver used for each facial-reduction subproblem. The default is
/// solve_dense_sdp; an external backend can be plugged in (see sdpa.hpp).
using SdpBackend = std::function<IpmResult(const DenseSdp&, const Eigen::MatrixXd& X0,
                                           const Eigen::VectorXd& y0, const IpmOptions&)>;

/// K_{t,psd} = { L in H_t^perp : M_{floor(t/2)}(L) >= 0 }, parametrized by an
/// orthonormal basis of ker H_t.
struct MomentConeProblem {
  int t = 0;
  int n = 0;
  int moment_order = 0;
  /// Rows z_k span ker H_t; columns indexed by T_t in graded order.
  Eigen::MatrixXd kernel_basis;
  RankDecision h_rank;
};

MomentConeProblem build_cone_problem(const PolySystem& sys, int t, const RankTolerance& tol = {});

struct SdpOptions {
  RankTolerance rank_tol;
  IpmOptions ipm;
  int max_face_reductions = 200;
  /// Relative threshold for the linear constraints added by a reduction step.
  /// Kernel directions read off an interior-point certificate are accurate to
  /// roughly the square root of the duality gap, so this is looser than the
  /// rank tolerance; the face is then polished to full accuracy.
  double face_tol = 1e-4;
  /// Cap on alternating refinement sweeps per reduction step.
  int polish_iterations = 2000;
  /// When set, the max-min-eigenvalue objective uses a random positive
  /// definite weight instead of the identity. Used to sample other relative
  /// interior points of the same cone.
  std::optional<std::uint64_t> weight_seed;
  SdpBackend backend;
};

struct GenericSolution {
  LinearFunctional functional;
  Eigen::MatrixXd moment_matrix;  // M_{floor(t/2)}(L*)
  std::vector<int> rank_profile;  // rank M_s(L*), s = 0..floor(t/2)
  /// Orthonormal columns over T_{floor(t/2)} spanning ker M_{floor(t/2)}(L*).
  Eigen::MatrixXd kernel_vectors;
  /// The same kernel as polynomials, each scaled to max |coefficient| = 1.
  std::vector<Polynomial> kernel_polys;
  int face_reductions = 0;
  int ipm_iterations = 0;
  /// Smallest eigenvalue of the final restricted moment matrix.
  double min_eigenvalue = 0.0;
  bool cone_trivial = false;
};

/// Maximum-rank element of K_{t,psd}, normalized to trace M = 1.
GenericSolution generic_element(const MomentConeProblem& prob, const SdpOptions& opts = {});

/// rank M_s(L*) for s = 0..floor(t/2) from the leading principal blocks.
std::vector<int> rank_profile(const GenericSolution& sol, const RankTolerance& tol = {});

}  // namespace realvar
