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

#include "realvar/extract.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "realvar/numla.hpp"

namespace realvar {

namespace {

using cd = std::complex<double>;

double spread(const Eigen::VectorXcd& ev, cd center) {
  double r = 0.0;
  for (Eigen::Index i = 0; i < ev.size(); ++i) r = std::max(r, std::abs(ev[i] - center));
  return r;
}

}  // namespace

std::vector<Root> extract_roots(const MultiplicationSystem& ms, const QuotientBasis& qb,
                                std::uint64_t seed, const ExtractOptions& opts) {
  const int n = static_cast<int>(ms.matrices.size());
  if (n == 0) throw ExtractError("no multiplication matrices");
  const Eigen::Index k = ms.matrices.front().rows();
  if (static_cast<std::size_t>(k) != qb.monomials.size())
    throw ExtractError("multiplication matrices do not match the quotient basis");
  std::vector<Eigen::MatrixXcd> XT;
  std::vector<double> norms;
  for (const auto& X : ms.matrices) {
    XT.push_back(X.transpose().cast<cd>());
    norms.push_back(X.norm());
  }

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> nd;
  for (int attempt = 0; attempt <= opts.max_retries; ++attempt) {
    Eigen::VectorXd c(n);
    for (int i = 0; i < n; ++i) c[i] = nd(rng);
    c /= c.norm();
    Eigen::MatrixXd A = Eigen::MatrixXd::Zero(k, k);
    for (int i = 0; i < n; ++i) A += c[i] * ms.matrices[i].transpose();

    std::vector<EigenCluster> clusters = clustered_schur(A, opts.cluster_tol);
    std::vector<Root> roots;
    bool merged = false;
    const Eigen::MatrixXcd Ac = A.cast<cd>();
    for (const auto& cl : clusters) {
      const Eigen::MatrixXcd& U = cl.complex_basis;
      const double sz = static_cast<double>(cl.size);
      Eigen::MatrixXcd TA = U.adjoint() * Ac * U;
      const double rho = spread(TA.eigenvalues(), cl.mean);
      Root root;
      root.coords.resize(n);
      root.cluster_size = cl.size;
      for (int j = 0; j < n; ++j) {
        Eigen::MatrixXcd T = U.adjoint() * XT[j] * U;
        cd v = T.trace() / sz;
        root.coords[j] = v;
        if (cl.size > 1) {
          double sj = spread(T.eigenvalues(), v);
          if (sj > opts.merge_tol * (1.0 + norms[j]) && sj > 10.0 * rho * (1.0 + norms[j])) merged = true;
        }
      }
      roots.push_back(root);
      if (cl.conjugate_pair) {
        Root other = root;
        other.coords = root.coords.conjugate();
        roots.push_back(other);
      }
    }
    if (!merged) return roots;
  }
  throw ExtractError("random combination kept merging distinct roots after " +
                     std::to_string(opts.max_retries) + " retries");
}

double scaled_residual(const PolySystem& sys, const Eigen::VectorXcd& v) {
  const double vmax = std::max(1.0, v.cwiseAbs().maxCoeff());
  double r = 0.0;
  for (const auto& h : sys.generators()) {
    double scale = h.l1_norm() * std::pow(vmax, h.degree());
    r = std::max(r, std::abs(h.evaluate(v)) / scale);
  }
  return r;
}

namespace {

template <typename Vec>
double residual_of(const PolySystem& sys, const Vec& x) {
  double r = 0.0;
  for (const auto& h : sys.generators()) r = std::max(r, std::abs(h.evaluate(x)));
  return r;
}

// Gauss-Newton over all generators; a step is kept only if it lowers the residual.
template <typename Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, 1> polish(const PolySystem& sys,
                                               const std::vector<std::vector<Polynomial>>& grad,
                                               Eigen::Matrix<Scalar, Eigen::Dynamic, 1> x) {
  using V = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
  using M = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  const Eigen::Index m = static_cast<Eigen::Index>(sys.size()), n = sys.nvars();
  double best = residual_of(sys, x);
  for (int it = 0; it < 8 && best > 0.0; ++it) {
    V F(m);
    M J(m, n);
    for (Eigen::Index j = 0; j < m; ++j) {
      F[j] = sys[j].evaluate(x);
      for (Eigen::Index i = 0; i < n; ++i) J(j, i) = grad[j][i].evaluate(x);
    }
    V dx = Eigen::CompleteOrthogonalDecomposition<M>(J).solve(-F);
    if (!dx.allFinite()) break;
    V next = x + dx;
    double r = residual_of(sys, next);
    if (!(r < best)) break;
    x = next;
    best = r;
  }
  return x;
}

}  // namespace

Verification verify_roots(const std::vector<Root>& roots, const PolySystem& sys, Mode mode,
                          const VerifyOptions& opts) {
  std::vector<std::vector<Polynomial>> grad;
  for (const auto& h : sys.generators()) {
    std::vector<Polynomial> g;
    for (int i = 0; i < sys.nvars(); ++i) g.push_back(h.derivative(i));
    grad.push_back(std::move(g));
  }
  Verification out;
  for (Root r : roots) {
    const double vabs = r.coords.cwiseAbs().maxCoeff();
    const double imag = r.coords.imag().cwiseAbs().maxCoeff();
    r.is_real = imag <= opts.imag_tol * (1.0 + vabs);
    if (mode == Mode::Complex) {
      if (opts.refine && r.cluster_size == 1) r.coords = polish<cd>(sys, grad, r.coords);
      r.residual = residual_of(sys, Eigen::VectorXcd(r.coords));
      out.accepted.push_back(r);
      continue;
    }
    if (!r.is_real) {
      r.residual = residual_of(sys, Eigen::VectorXcd(r.coords));
      out.rejected.push_back(r);
      continue;
    }
    Eigen::VectorXd x = r.coords.real();
    if (opts.refine) x = polish<double>(sys, grad, x);
    r.coords = x.cast<cd>();
    r.residual = residual_of(sys, x);
    if (scaled_residual(sys, r.coords) <= opts.residual_tol)
      out.accepted.push_back(r);
    else
      out.rejected.push_back(r);
  }
  return out;
}

}  // namespace realvar
