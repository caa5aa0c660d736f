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
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "realvar/extract.hpp"
#include "realvar/moment.hpp"
#include "realvar/numla.hpp"
#include "realvar/polycore.hpp"
#include "realvar/quotient.hpp"
#include "realvar/sdp.hpp"

namespace realvar {

/// dims_G[s] = dim pi_s(G_t^perp) for s = 0..t and
/// dims_Gplus[s] = dim pi_s((G_t^+)^perp) for s = 0..t+1.
struct DimensionTable {
  int t = 0;
  std::vector<int> dims_G;
  std::vector<int> dims_Gplus;
};

enum class StopKind { Empty, DimConditions, StrongDimConditions, RankCondition, NotYet };
enum class Policy { Strict, Extended };
enum class Criterion { Dims, Rank, Both };
enum class Selector { Greedy, Pivots };

const char* to_string(StopKind k);
const char* to_string(Policy p);
const char* to_string(Criterion c);

struct StopVerdict {
  StopKind kind = StopKind::NotYet;
  int s = -1;
  bool s_below_D = false;
  /// Strong pair dims_G[2s] == dims_G[s-1] == dims_Gplus[2s] at this s.
  bool strong = false;
  /// Every s in range that satisfies the conditions.
  std::vector<int> all_s;

  bool success() const {
    return kind == StopKind::DimConditions || kind == StopKind::StrongDimConditions ||
           kind == StopKind::RankCondition;
  }
};

/// Rank of the kernel rows truncated to the coordinates of degree <= s.
int projection_dimension(const Eigen::MatrixXd& kernel_rows, int n, int s,
                         const RankTolerance& tol = {});

/// Kernel bases of G_t and G_t^+ together with the table they induce.
struct KernelPair {
  Eigen::MatrixXd g;      // rows over T_t
  Eigen::MatrixXd gplus;  // rows over T_{t+1}
};

DimensionTable dimension_table(const GtSystem& gt, const RankTolerance& tol = {},
                               KernelPair* kernels = nullptr);
DimensionTable dimension_table(const KernelPair& kernels, int n, int t,
                               const RankTolerance& tol = {});

/// (ZRa)/(ZRb) scan. Strict: D <= s <= floor(t/2). Extended: 1 <= s <= t.
StopVerdict check_stop(const DimensionTable& table, int D, Policy policy = Policy::Extended);

/// Whether dims_G[2s] == dims_G[s-1] == dims_Gplus[2s] (false when 2s > t).
bool strong_conditions(const DimensionTable& table, int s);

/// First s with rank M_s(L*) == rank M_{s-1}(L*). Strict: D <= s <= floor(t/2);
/// extended: 1 <= s <= floor(t/2).
StopVerdict rank_criterion(const std::vector<int>& profile, int D, Policy policy = Policy::Extended);
StopVerdict rank_criterion(const GenericSolution& sol, int D, Policy policy = Policy::Extended);

struct SolveConfig {
  Mode mode = Mode::Real;
  Criterion criterion = Criterion::Dims;
  Policy policy = Policy::Extended;
  Selector selector = Selector::Greedy;
  int t_start = -1;  // default D
  int t_max = -1;    // default t_start + 6
  /// Additional orders to try when extraction fails at a stopping order.
  int t_extra = 1;
  RankTolerance rank_tol = RankTolerance::from_env();
  ExtractOptions extract;
  VerifyOptions verify;
  /// Gate on c(X) relative to max ||X_i||.
  double commutativity_tol = 1e-5;
  std::uint64_t seed = 1;
  SdpOptions sdp;
};

struct IterationRecord {
  int t = 0;
  DimensionTable table;
  StopVerdict verdict;
  /// Present when the moment-matrix criterion was evaluated.
  std::optional<StopVerdict> rank_verdict;
  std::vector<int> rank_profile;
  std::vector<Polynomial> kernel_polys;
  int face_reductions = 0;
  std::size_t h_rows = 0;
  std::size_t s_rows = 0;
  double seconds = 0.0;
  /// The max-rank point computed at this order (real mode or rank criterion).
  std::optional<GenericSolution> generic;
};

struct ExtractionAttempt {
  int t = 0;
  int s = 0;
  bool ok = false;
  std::string message;
  double commutativity_error = 0.0;
  double max_residual = 0.0;
  std::size_t verified = 0;
};

struct SolveResult {
  bool success = false;
  bool empty_certificate = false;
  bool t_max_exhausted = false;
  StopVerdict verdict;
  int t = -1;
  int s = -1;
  std::vector<IterationRecord> iterations;
  QuotientBasis basis;
  BorderBasis border;
  MultiplicationSystem mult;
  std::vector<Root> roots;
  std::vector<Root> rejected;
  bool radical_certified = false;
  /// First order at which each criterion fired, when evaluated.
  std::optional<std::pair<int, int>> dims_first;
  std::optional<std::pair<int, int>> rank_first;
  std::vector<ExtractionAttempt> attempts;
  std::uint64_t seed = 0;
  std::string message;
};

/// The prolongation-projection loop.
SolveResult solve(const PolySystem& sys, const SolveConfig& config = {});

}  // namespace realvar
