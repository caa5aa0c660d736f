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

#include "realvar/sdp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <random>
#include <sstream>

namespace realvar {

namespace {

using Mat = Eigen::MatrixXd;
using Vec = Eigen::VectorXd;

Vec vec_of(const Mat& M) { return Eigen::Map<const Vec>(M.data(), M.size()); }

Mat unvec(const Eigen::Ref<const Vec>& v, Eigen::Index r) {
  return Eigen::Map<const Mat>(v.data(), r, r);
}

Mat sym(const Mat& M) { return 0.5 * (M + M.transpose()); }

// Largest alpha with X + alpha dX >= 0, given the Cholesky factor of X.
double max_step(const Eigen::LLT<Mat>& chol, const Mat& dX) {
  Mat W = chol.matrixL().solve(dX);
  W = chol.matrixL().solve(W.transpose()).transpose();
  Eigen::SelfAdjointEigenSolver<Mat> es(sym(W), Eigen::EigenvaluesOnly);
  double lmin = es.eigenvalues()[0];
  return lmin < 0.0 ? -1.0 / lmin : std::numeric_limits<double>::infinity();
}

}  // namespace

IpmResult solve_dense_sdp(const DenseSdp& sdp, const Mat& X0, const Vec& y0,
                          const IpmOptions& opts) {
  const Eigen::Index r = sdp.C.rows();
  const Eigen::Index m = static_cast<Eigen::Index>(sdp.A.size());
  if (sdp.b.size() != m) throw SdpError("SDP: b has wrong length");
  Mat Amat(m, r * r);
  for (Eigen::Index i = 0; i < m; ++i) Amat.row(i) = vec_of(sdp.A[i]).transpose();
  auto Aop = [&](const Mat& W) -> Vec { return Amat * vec_of(W); };
  auto Aadj = [&](const Vec& y) -> Mat { return unvec(Amat.transpose() * y, r); };

  IpmResult res;
  res.X = X0;
  res.y = y0;
  res.Z = sdp.C - Aadj(y0);
  Mat& X = res.X;
  Vec& y = res.y;
  Mat& Z = res.Z;
  const double bnorm = sdp.b.norm(), cnorm = sdp.C.norm();
  const Mat I = Mat::Identity(r, r);

  int stalls = 0;
  for (int it = 0; it <= opts.max_iter; ++it) {
    res.iterations = it;
    Vec rp = sdp.b - Aop(X);
    Mat Rd = sdp.C - Aadj(y) - Z;
    res.primal_obj = (sdp.C.cwiseProduct(X)).sum();
    res.dual_obj = sdp.b.dot(y);
    res.gap = (X.cwiseProduct(Z)).sum();
    const double scale = 1.0 + std::abs(res.primal_obj) + std::abs(res.dual_obj);
    const bool feasible = rp.norm() <= opts.feas_tol * (1.0 + bnorm) &&
                          Rd.norm() <= opts.feas_tol * (1.0 + cnorm);
    if (feasible && res.gap <= opts.gap_tol * scale) {
      res.converged = true;
      return res;
    }
    if (it == opts.max_iter) break;

    Eigen::LLT<Mat> cx(sym(X)), cz(sym(Z));
    if (cx.info() != Eigen::Success || cz.info() != Eigen::Success) break;
    const double mu = res.gap / static_cast<double>(r);
    Mat Lz_inv = cz.matrixL().solve(I);
    Mat Zinv = Lz_inv.transpose() * Lz_inv;
    Mat Lx = cx.matrixL();

    // Schur complement H_ij = <A_i X A_j Z^-1> = <Lx^T A_i S, Lx^T A_j S>, S = Lz^-T.
    Mat G(m, r * r);
    for (Eigen::Index i = 0; i < m; ++i) {
      Mat Gi = Lx.transpose() * sdp.A[i] * Lz_inv.transpose();
      G.row(i) = vec_of(Gi).transpose();
    }
    Mat H = G * G.transpose();
    Eigen::LDLT<Mat> schur(H);
    if (schur.info() != Eigen::Success) break;

    const Mat XRdZinv = X * Rd * Zinv;
    auto direction = [&](const Mat& Rc, Mat& dX, Vec& dy, Mat& dZ) {
      Mat RcZinv = Rc * Zinv;
      Vec rhs = rp - Aop(RcZinv) + Aop(XRdZinv);
      dy = schur.solve(rhs);
      dZ = Rd - Aadj(dy);
      dX = sym(RcZinv - X * dZ * Zinv);
    };

    Mat dXa, dZa;
    Vec dya;
    direction(-X * Z, dXa, dya, dZa);
    double ap = std::min(1.0, max_step(cx, dXa));
    double ad = std::min(1.0, max_step(cz, dZa));
    double mu_aff = ((X + ap * dXa).cwiseProduct(Z + ad * dZa)).sum() / static_cast<double>(r);
    double sigma = std::clamp(std::pow(mu_aff / std::max(mu, 1e-300), 3.0), 0.0, 1.0);

    Mat dX, dZ;
    Vec dy;
    direction(sigma * mu * I - X * Z - dXa * dZa, dX, dy, dZ);
    ap = std::min(1.0, opts.step_fraction * max_step(cx, dX));
    ad = std::min(1.0, opts.step_fraction * max_step(cz, dZ));
    if (ap < 1e-10 && ad < 1e-10) {
      if (++stalls >= 3) break;
    } else {
      stalls = 0;
    }
    X = sym(X + ap * dX);
    y += ad * dy;
    Z = sym(Z + ad * dZ);
  }

  const double scale = 1.0 + std::abs(res.primal_obj) + std::abs(res.dual_obj);
  if (res.gap <= 1e-6 * scale) return res;
  std::ostringstream os;
  os << "interior point did not converge after " << res.iterations << " iterations (size " << r
     << ", " << m << " constraints, gap " << res.gap << ", primal " << res.primal_obj
     << ", dual " << res.dual_obj << ")";
  throw SdpError(os.str());
}

MomentConeProblem build_cone_problem(const PolySystem& sys, int t, const RankTolerance& tol) {
  MomentConeProblem prob;
  prob.t = t;
  prob.n = sys.nvars();
  prob.moment_order = t / 2;
  MonomialIndex idx(sys.nvars(), t);
  Mat H = coefficient_matrix(prolong_generators(sys, t), idx);
  prob.kernel_basis = nullspace_basis(H, tol.with_floor(H.rowwise().norm().maxCoeff()), &prob.h_rank);
  return prob;
}

namespace {

Mat orthonormalize(const Mat& U) {
  if (U.cols() == 0) return U;
  Eigen::HouseholderQR<Mat> qr(U);
  return qr.householderQ() * Mat::Identity(U.rows(), U.cols());
}

// Orthonormal basis of the complement of span(U) in R^N.
Mat complement(const Mat& U, Eigen::Index N) {
  if (U.cols() == 0) return Mat::Identity(N, N);
  Eigen::HouseholderQR<Mat> qr(U);
  Mat Q = qr.householderQ();
  return Q.rightCols(N - U.cols());
}

GenericSolution trivial_solution(const MomentConeProblem& prob, Eigen::Index N0, int rounds) {
  GenericSolution sol;
  sol.functional = LinearFunctional::zero(prob.n, prob.t);
  sol.moment_matrix = Mat::Zero(N0, N0);
  sol.rank_profile.assign(prob.moment_order + 1, 0);
  sol.kernel_vectors = Mat::Identity(N0, N0);
  for (const Monomial& m : monomials_up_to(prob.n, prob.moment_order))
    sol.kernel_polys.push_back(Polynomial::monomial(m));
  sol.face_reductions = rounds;
  sol.cone_trivial = true;
  return sol;
}

// Number of trailing singular values treated as zero. Values below `strict`
// always count; above that the cut goes at the widest relative gap among values
// within a factor 100 of `loose`, falling back to `loose` when no gap stands out.
Eigen::Index face_dimension(const Vec& sigma, double strict, double loose) {
  const Eigen::Index m = sigma.size();
  auto at = [&](Eigen::Index i) { return std::max(sigma[i], strict); };
  Eigen::Index q = 0;
  for (Eigen::Index i = 0; i < m; ++i)
    if (sigma[i] <= loose) ++q;
  double best = 100.0;
  for (Eigen::Index i = 1; i < m; ++i) {
    if (at(i) > 100.0 * loose || at(i - 1) < loose / 100.0) continue;
    const double ratio = at(i - 1) / at(i);
    if (ratio > best) {
      best = ratio;
      q = m - i;
    }
  }
  return q;
}

}  // namespace

GenericSolution generic_element(const MomentConeProblem& prob, const SdpOptions& opts) {
  const int s0 = prob.moment_order;
  const Eigen::Index N0 = static_cast<Eigen::Index>(count_monomials(prob.n, s0));
  const Mat& K = prob.kernel_basis;
  const Eigen::Index p = K.rows();
  MonomialIndex small(prob.n, s0);

  GenericSolution sol;
  int rounds = 0;
  int iterations = 0;
  if (p == 0) return trivial_solution(prob, N0, 0);

  MomentLayout layout(prob.n, s0, prob.t);
  // Row k holds vec(M_{s0}(z_k)).
  Mat Amat(p, N0 * N0);
  for (Eigen::Index k = 0; k < p; ++k) Amat.row(k) = vec_of(layout.build(K.row(k).transpose())).transpose();

  Mat P = Mat::Identity(p, p);  // current face: lambda = P mu
  Mat U(N0, 0);                 // accumulated kernel directions
  SdpBackend backend = opts.backend ? opts.backend : SdpBackend(solve_dense_sdp);

  double ascale = 0.0;
  for (Eigen::Index k = 0; k < p; ++k) ascale = std::max(ascale, Amat.row(k).norm());
  // Columns vec(M(z_k) V) for every kernel basis element z_k.
  auto constraint = [&](const Mat& V) {
    Mat C(N0 * V.cols(), p);
    for (Eigen::Index k = 0; k < p; ++k) C.col(k) = vec_of(unvec(Amat.row(k).transpose(), N0) * V);
    return C;
  };
  // Face = { lambda : M(lambda) U = 0 }. The dimension is read at the widest
  // singular-value gap near face_tol, then U and P are refined by alternating least squares so that the face
  // constraints hold to rounding level.
  auto restrict_face = [&]() {
    if (U.cols() == 0) return;
    const Eigen::Index k = U.cols();
    RightSvd cs = right_svd(constraint(U));
    const double strict = opts.rank_tol.with_floor(ascale).threshold(cs.sigma[0], N0 * k, p);
    const Eigen::Index q = face_dimension(cs.sigma, strict, opts.face_tol * ascale);
    P = cs.V.rightCols(q);
    double resid = cs.sigma.tail(q).norm();
    for (int it = 0; it < opts.polish_iterations && q > 0 && resid > 1e-15 * ascale; ++it) {
      Mat PA = P.transpose() * Amat;
      Mat stacked(q * N0, N0);
      for (Eigen::Index j = 0; j < q; ++j) stacked.middleRows(j * N0, N0) = unvec(PA.row(j).transpose(), N0);
      U = right_svd(stacked).V.rightCols(k);
      cs = right_svd(constraint(U));
      P = cs.V.rightCols(q);
      double next = cs.sigma.tail(q).norm();
      if (next > 0.99 * resid) {
        resid = next;
        break;
      }
      resid = next;
    }
  };

  // Directions where both X* and Z* are small (no strict complementarity) are
  // taken on trial. If the face they cut out turns out trivial, the reduction
  // is replayed from the saved state with the firm directions only.
  struct Trial { Mat U, P, firm; int rounds; };
  std::optional<Trial> trial;
  auto backtrack = [&]() {
    if (!trial) return false;
    U = orthonormalize((Mat(N0, trial->U.cols() + trial->firm.cols()) << trial->U, trial->firm).finished());
    P = trial->P;
    rounds = trial->rounds;
    trial.reset();
    restrict_face();
    return true;
  };

  Vec c_final;
  double gamma = 0.0;
  for (;;) {
    if (rounds > opts.max_face_reductions)
      throw SdpError("facial reduction did not terminate after " + std::to_string(rounds) + " rounds");
    const Eigen::Index q = P.cols();
    const Eigen::Index r = N0 - U.cols();
    if (q == 0 || r == 0) {
      if (backtrack()) continue;
      return trivial_solution(prob, N0, rounds);
    }
    Mat Q = complement(U, N0);
    Mat PA = P.transpose() * Amat;
    std::vector<Mat> B(q);
    Mat stacked(q * r, r);
    Vec tr(q);
    double bscale = 0.0;
    for (Eigen::Index j = 0; j < q; ++j) {
      B[j] = sym(Q.transpose() * unvec(PA.row(j).transpose(), N0) * Q);
      stacked.middleRows(j * r, r) = B[j];
      tr[j] = B[j].trace();
      bscale = std::max(bscale, B[j].norm());
    }
    Mat common = nullspace_basis(stacked, opts.rank_tol.with_floor(bscale));
    if (common.rows() > 0) {
      U = orthonormalize((Mat(N0, U.cols() + common.rows()) << U, Q * common.transpose()).finished());
      restrict_face();
      ++rounds;
      continue;
    }
    if (tr.norm() <= 1e-14 * std::max(1.0, bscale)) {
      if (backtrack()) continue;
      return trivial_solution(prob, N0, rounds);
    }

    // Directions of the face that leave the moment matrix unchanged (moments
    // of degree above 2*s0) are dropped so the SDP constraints are independent.
    Mat Bmat(r * r, q);
    for (Eigen::Index j = 0; j < q; ++j) Bmat.col(j) = vec_of(B[j]);
    Mat R = rowspace_basis(Bmat, opts.rank_tol.with_floor(bscale)).transpose();  // q x q'
    const Eigen::Index qr = R.cols();
    std::vector<Mat> BR(qr, Mat::Zero(r, r));
    for (Eigen::Index i = 0; i < qr; ++i)
      for (Eigen::Index j = 0; j < q; ++j)
        if (R(j, i) != 0.0) BR[i] += R(j, i) * B[j];
    Vec trR = R.transpose() * tr;

    // max gamma s.t. sum_i c_i BR_i - gamma D >= 0, tr(sum_i c_i BR_i) = 1,
    // with c = c0 + N mu and N spanning trR^perp.
    Vec c0 = trR / trR.squaredNorm();
    Mat Nt = nullspace_basis(trR.transpose(), opts.rank_tol);  // (q'-1) x q'
    auto combine = [&](const Vec& c) {
      Mat S = Mat::Zero(r, r);
      for (Eigen::Index i = 0; i < qr; ++i)
        if (c[i] != 0.0) S += c[i] * BR[i];
      return S;
    };
    Mat D = Mat::Identity(r, r);
    if (opts.weight_seed) {
      std::mt19937_64 rng(*opts.weight_seed + static_cast<std::uint64_t>(rounds));
      std::normal_distribution<double> nd;
      Mat Rw(r, r);
      for (Eigen::Index i = 0; i < Rw.size(); ++i) Rw.data()[i] = nd(rng);
      D += Rw * Rw.transpose() / static_cast<double>(r);
    }
    DenseSdp sdp;
    sdp.C = combine(c0);
    for (Eigen::Index k = 0; k < Nt.rows(); ++k) sdp.A.push_back(-combine(Nt.row(k).transpose()));
    sdp.A.push_back(D);
    sdp.b = Vec::Zero(static_cast<Eigen::Index>(sdp.A.size()));
    sdp.b[sdp.b.size() - 1] = 1.0;
    Mat X0 = Mat::Identity(r, r) / D.trace();
    Vec y0 = Vec::Zero(sdp.b.size());
    double lmin = symmetric_eig(sdp.C).values[0];
    y0[y0.size() - 1] = std::min(0.0, lmin) - 1.0;

    IpmResult ipm = backend(sdp, X0, y0, opts.ipm);
    iterations += ipm.iterations;
    gamma = ipm.y[ipm.y.size() - 1];
    const double tau = opts.rank_tol.threshold(1.0, r, r);

    if (gamma > tau) {
      c_final = R * (c0 + Nt.transpose() * ipm.y.head(Nt.rows()));
      break;
    }
    if (gamma < -std::max(tau, 1e-6)) {
      if (backtrack()) continue;
      return trivial_solution(prob, N0, rounds);
    }

    // range(X*) lies in the kernel of every feasible moment matrix on this face.
    SymmetricEig ex = symmetric_eig(sym(ipm.X));
    const double xmax = ex.values[r - 1];
    std::vector<Eigen::Index> pick, maybe;
    for (Eigen::Index i = 0; i < r; ++i) {
      Vec v = ex.vectors.col(i);
      double xi = ex.values[i];
      double zeta = std::max(0.0, v.dot(ipm.Z * v));
      if (xi < 1e-6 * xmax) continue;
      if (xi > 1e3 * zeta) pick.push_back(i);
      else if (xi > zeta) maybe.push_back(i);
    }
    if (pick.empty()) pick.push_back(r - 1);
    auto columns = [&](const std::vector<Eigen::Index>& idx) {
      Mat out(N0, static_cast<Eigen::Index>(idx.size()));
      for (std::size_t i = 0; i < idx.size(); ++i) out.col(static_cast<Eigen::Index>(i)) = Q * ex.vectors.col(idx[i]);
      return out;
    };
    Mat add = columns(pick);
    if (!maybe.empty() && !trial) {
      trial = Trial{U, P, add, rounds + 1};
      Mat extra = columns(maybe);
      add = (Mat(N0, add.cols() + extra.cols()) << add, extra).finished();
    }
    U = orthonormalize((Mat(N0, U.cols() + add.cols()) << U, add).finished());
    restrict_face();
    ++rounds;
  }

  Vec lambda = P * c_final;
  Vec y = K.transpose() * lambda;
  sol.functional = LinearFunctional(prob.n, prob.t, y);
  sol.moment_matrix = sym(layout.build(y));
  sol.face_reductions = rounds;
  sol.ipm_iterations = iterations;
  const Eigen::Index kdim = U.cols();
  SymmetricEig em = symmetric_eig(sol.moment_matrix);
  // U carries the polished face constraints, so it is a sharper kernel basis
  // than the eigenvectors of M* (whose small eigenvalues carry IPM error).
  sol.kernel_vectors = U;
  sol.min_eigenvalue = em.values[kdim];
  for (Eigen::Index j = 0; j < kdim; ++j) {
    Vec v = sol.kernel_vectors.col(j);
    Eigen::Index arg;
    v.cwiseAbs().maxCoeff(&arg);
    v /= v[arg];
    sol.kernel_polys.push_back(Polynomial::from_coefficients(small, v, 1e-12));
  }
  sol.rank_profile = rank_profile(sol, opts.rank_tol);
  return sol;
}

std::vector<int> rank_profile(const GenericSolution& sol, const RankTolerance& tol) {
  const Mat& M = sol.moment_matrix;
  const int n = sol.functional.n;
  const int s0 = sol.functional.order / 2;
  std::vector<int> out;
  for (int s = 0; s <= s0; ++s) {
    const Eigen::Index k = static_cast<Eigen::Index>(count_monomials(n, s));
    if (M.isZero(0.0)) {
      out.push_back(0);
      continue;
    }
    out.push_back(numeric_rank(M.topLeftCorner(k, k), tol).rank);
  }
  return out;
}

}  // namespace realvar
