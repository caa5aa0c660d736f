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

#include "realvar/pp.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

namespace realvar {

const char* to_string(StopKind k) {
  switch (k) {
    case StopKind::Empty: return "empty";
    case StopKind::DimConditions: return "dims";
    case StopKind::StrongDimConditions: return "strong-dims";
    case StopKind::RankCondition: return "rank";
    case StopKind::NotYet: return "not-yet";
  }
  return "?";
}

const char* to_string(Policy p) { return p == Policy::Strict ? "strict" : "extended"; }

const char* to_string(Criterion c) {
  switch (c) {
    case Criterion::Dims: return "dims";
    case Criterion::Rank: return "rank";
    case Criterion::Both: return "both";
  }
  return "?";
}

int projection_dimension(const Eigen::MatrixXd& kernel_rows, int n, int s, const RankTolerance& tol) {
  if (kernel_rows.rows() == 0) return 0;
  const Eigen::Index k = static_cast<Eigen::Index>(count_monomials(n, s));
  if (k > kernel_rows.cols()) throw Error("projection_dimension: s exceeds the kernel order");
  // Kernel rows inherit the accuracy of the SDP solution, so values between the
  // rank threshold and sqrt(relative) are settled by the widest gap.
  RankDecision d = numeric_rank(kernel_rows.leftCols(k),
                                tol.with_floor(1.0).with_gap_band(std::sqrt(tol.relative)));
  return d.rank;
}

DimensionTable dimension_table(const KernelPair& kernels, int n, int t, const RankTolerance& tol) {
  DimensionTable table;
  table.t = t;
  for (int s = 0; s <= t; ++s) table.dims_G.push_back(projection_dimension(kernels.g, n, s, tol));
  for (int s = 0; s <= t + 1; ++s)
    table.dims_Gplus.push_back(projection_dimension(kernels.gplus, n, s, tol));
  return table;
}

DimensionTable dimension_table(const GtSystem& gt, const RankTolerance& tol, KernelPair* out) {
  KernelPair kp;
  kp.g = kernel_G(gt, tol);
  kp.gplus = kernel_Gplus(gt, kp.g, tol);
  DimensionTable table = dimension_table(kp, gt.n, gt.t, tol);
  if (out) *out = std::move(kp);
  return table;
}

bool strong_conditions(const DimensionTable& table, int s) {
  if (s < 1 || 2 * s > table.t) return false;
  return table.dims_G[2 * s] == table.dims_G[s - 1] && table.dims_Gplus[2 * s] == table.dims_G[s - 1];
}

StopVerdict check_stop(const DimensionTable& table, int D, Policy policy) {
  StopVerdict v;
  for (int d : table.dims_G)
    if (d == 0) {
      v.kind = StopKind::Empty;
      return v;
    }
  const int lo = policy == Policy::Strict ? std::max(1, D) : 1;
  const int hi = policy == Policy::Strict ? table.t / 2 : table.t;
  for (int s = lo; s <= hi; ++s) {
    if (table.dims_G[s] == table.dims_G[s - 1] && table.dims_G[s] == table.dims_Gplus[s])
      v.all_s.push_back(s);
  }
  if (v.all_s.empty()) return v;
  v.s = v.all_s.front();
  v.strong = strong_conditions(table, v.s);
  v.kind = v.strong ? StopKind::StrongDimConditions : StopKind::DimConditions;
  v.s_below_D = v.s < D;
  return v;
}

StopVerdict rank_criterion(const std::vector<int>& profile, int D, Policy policy) {
  StopVerdict v;
  if (profile.empty()) return v;
  if (profile.front() == 0) {
    v.kind = StopKind::Empty;
    return v;
  }
  const int top = static_cast<int>(profile.size()) - 1;
  const int lo = policy == Policy::Strict ? std::max(1, D) : 1;
  for (int s = lo; s <= top; ++s)
    if (profile[s] == profile[s - 1]) v.all_s.push_back(s);
  if (v.all_s.empty()) return v;
  v.s = v.all_s.front();
  v.kind = StopKind::RankCondition;
  v.s_below_D = v.s < D;
  return v;
}

StopVerdict rank_criterion(const GenericSolution& sol, int D, Policy policy) {
  return rank_criterion(sol.rank_profile, D, policy);
}

namespace {

struct Extraction {
  ExtractionAttempt attempt;
  QuotientBasis basis;
  BorderBasis border;
  MultiplicationSystem mult;
  Verification roots;
};

Extraction try_extract(const PolySystem& sys, const SolveConfig& cfg, int t, int s,
                       const Eigen::MatrixXd& Ysource, bool from_rank) {
  Extraction ex;
  ex.attempt.t = t;
  ex.attempt.s = s;
  try {
    const Eigen::Index k = static_cast<Eigen::Index>(count_monomials(sys.nvars(), s));
    Eigen::MatrixXd Y = rowspace_basis(Ysource.leftCols(k), cfg.rank_tol.with_floor(from_rank ? 0.0 : 1.0));
    ex.basis = cfg.selector == Selector::Greedy
                   ? select_basis_greedy(Y, sys.nvars(), s, cfg.rank_tol)
                   : select_basis_pivots(Y, sys.nvars(), s, cfg.rank_tol);
    ex.border = border_basis(ex.basis, cfg.rank_tol);
    ex.mult = multiplication_matrices(ex.basis, ex.border);
    ex.attempt.commutativity_error = ex.mult.commutativity_error;
    if (ex.mult.commutativity_error > cfg.commutativity_tol * std::max(1.0, ex.mult.max_norm())) {
      ex.attempt.message = "commutativity error too large; conditions insufficient";
      return ex;
    }
    std::vector<Root> raw = extract_roots(ex.mult, ex.basis, cfg.seed, cfg.extract);
    ex.roots = verify_roots(raw, sys, cfg.mode, cfg.verify);
    for (const auto& r : ex.roots.accepted)
      ex.attempt.max_residual = std::max(ex.attempt.max_residual, r.residual);
    ex.attempt.verified = ex.roots.accepted.size();
    // Non-real points of V_C(J) are simply not part of the answer. A real
    // candidate that misses the residual gate means the quotient is off.
    const auto bad = std::count_if(ex.roots.rejected.begin(), ex.roots.rejected.end(),
                                   [](const Root& r) { return r.is_real; });
    if (cfg.mode == Mode::Real && bad > 0) {
      ex.attempt.message = std::to_string(bad) + " real candidate root(s) failed verification";
      return ex;
    }
    if (!ex.roots.rejected.empty())
      ex.attempt.message = std::to_string(ex.roots.rejected.size()) + " non-real candidate(s) discarded";
    ex.attempt.ok = true;
  } catch (const Error& e) {
    ex.attempt.message = e.what();
  }
  return ex;
}

}  // namespace

SolveResult solve(const PolySystem& sys, const SolveConfig& cfg) {
  const int D = sys.max_degree();
  const int t0 = cfg.t_start < 0 ? D : cfg.t_start;
  if (t0 < D) throw Error("t_start must be at least the maximum generator degree");
  const int tmax = cfg.t_max < 0 ? t0 + 6 : cfg.t_max;
  if (tmax < t0) throw Error("t_max must be at least t_start");
  const bool need_sdp = cfg.mode == Mode::Real || cfg.criterion != Criterion::Dims;
  const bool need_dims = cfg.criterion != Criterion::Rank;
  const bool need_rank = cfg.criterion != Criterion::Dims;

  SdpOptions sdp_opts = cfg.sdp;
  sdp_opts.rank_tol = cfg.rank_tol;

  SolveResult result;
  result.seed = cfg.seed;
  std::optional<int> first_fire;
  bool extracted = false;

  for (int t = t0; t <= tmax; ++t) {
    auto start = std::chrono::steady_clock::now();
    IterationRecord rec;
    rec.t = t;
    MomentConeProblem prob;
    GenericSolution sol;
    if (need_sdp) {
      prob = build_cone_problem(sys, t, cfg.rank_tol);
      sol = generic_element(prob, sdp_opts);
      rec.rank_profile = sol.rank_profile;
      rec.face_reductions = sol.face_reductions;
      if (cfg.mode == Mode::Real) rec.kernel_polys = sol.kernel_polys;
      rec.generic = sol;
    }
    KernelPair kernels;
    if (need_dims) {
      GtSystem gt = assemble_G(sys, t, rec.kernel_polys, cfg.mode);
      if (need_sdp) gt.h_kernel = prob.kernel_basis;
      rec.h_rows = static_cast<std::size_t>(gt.h_rows.rows());
      rec.s_rows = static_cast<std::size_t>(gt.s_rows.rows());
      rec.table = dimension_table(gt, cfg.rank_tol, &kernels);
      rec.verdict = check_stop(rec.table, D, cfg.policy);
    }
    if (need_rank) rec.rank_verdict = rank_criterion(sol.rank_profile, D, cfg.policy);
    rec.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    result.iterations.push_back(rec);

    const bool dims_empty = need_dims && rec.verdict.kind == StopKind::Empty;
    const bool rank_empty = need_rank && rec.rank_verdict->kind == StopKind::Empty;
    if ((dims_empty || (!need_dims && rank_empty)) && !extracted) {
      result.success = true;
      result.empty_certificate = true;
      result.verdict = dims_empty ? rec.verdict : *rec.rank_verdict;
      result.t = t;
      result.message = "real variety is empty";
      return result;
    }
    if (need_dims && rec.verdict.success() && !result.dims_first) result.dims_first = {{t, rec.verdict.s}};
    if (need_rank && rec.rank_verdict->success() && !result.rank_first)
      result.rank_first = {{t, rec.rank_verdict->s}};

    if (!extracted) {
      const StopVerdict* drive = nullptr;
      bool from_rank = false;
      if (need_dims && rec.verdict.success()) {
        drive = &rec.verdict;
      } else if (need_rank && rec.rank_verdict->success()) {
        drive = &*rec.rank_verdict;
        from_rank = true;
      }
      if (drive) {
        if (!first_fire) first_fire = t;
        const int s = drive->s;
        Eigen::MatrixXd Ysource = from_rank ? Eigen::MatrixXd(sol.moment_matrix) : kernels.g;
        Extraction ex = try_extract(sys, cfg, t, s, Ysource, from_rank);
        result.attempts.push_back(ex.attempt);
        if (ex.attempt.ok) {
          extracted = true;
          result.success = true;
          result.verdict = *drive;
          result.t = t;
          result.s = s;
          result.basis = std::move(ex.basis);
          result.border = std::move(ex.border);
          result.mult = std::move(ex.mult);
          result.roots = std::move(ex.roots.accepted);
          result.rejected = std::move(ex.roots.rejected);
          const int dim = from_rank ? sol.rank_profile[s] : rec.table.dims_G[s];
          result.radical_certified =
              cfg.mode == Mode::Real && static_cast<int>(result.roots.size()) == dim;
        } else if (t - *first_fire >= cfg.t_extra) {
          result.verdict = *drive;
          result.t = t;
          result.s = s;
          result.message = "extraction failed at (" + std::to_string(t) + "," + std::to_string(s) +
                           "): " + ex.attempt.message;
          return result;
        }
      }
    }
    if (extracted) {
      const bool waiting_for_rank = cfg.criterion == Criterion::Both && !result.rank_first;
      const bool waiting_for_dims = cfg.criterion == Criterion::Both && !result.dims_first;
      if (!waiting_for_rank && !waiting_for_dims) return result;
    }
  }
  if (!extracted) {
    result.t_max_exhausted = true;
    result.message = "no stopping order found up to t = " + std::to_string(tmax);
  }
  return result;
}

}  // namespace realvar
