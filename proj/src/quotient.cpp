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

#include "realvar/quotient.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace realvar {

std::vector<int> QuotientBasis::columns() const {
  MonomialIndex idx(n, s);
  std::vector<int> out;
  for (const auto& m : monomials) out.push_back(idx.at(m));
  return out;
}

namespace {

Eigen::MatrixXd gather(const Eigen::MatrixXd& Y, const std::vector<int>& cols) {
  Eigen::MatrixXd out(Y.rows(), static_cast<Eigen::Index>(cols.size()));
  for (std::size_t k = 0; k < cols.size(); ++k) out.col(static_cast<Eigen::Index>(k)) = Y.col(cols[k]);
  return out;
}

void check_shape(const Eigen::MatrixXd& Y, int n, int s) {
  if (s < 1) throw QuotientError("basis selection needs s >= 1");
  if (Y.rows() == 0) throw QuotientError("basis selection: Y is empty");
  if (static_cast<std::size_t>(Y.cols()) != count_monomials(n, s))
    throw QuotientError("basis selection: Y must have one column per monomial of degree <= s");
}

QuotientBasis finish(const Eigen::MatrixXd& Y, int n, int s, const std::vector<int>& cols,
                     double threshold) {
  MonomialIndex idx(n, s);
  QuotientBasis qb;
  qb.n = n;
  qb.s = s;
  qb.Y = Y;
  qb.threshold = threshold;
  for (int c : cols) qb.monomials.push_back(idx[c]);
  if (!is_connected_to_1(qb.monomials))
    throw QuotientError("selected quotient basis is not connected to 1");
  Eigen::VectorXd sv = singular_values(gather(Y, cols));
  qb.condition = sv.size() ? sv[0] / sv[sv.size() - 1] : 0.0;
  return qb;
}

}  // namespace

QuotientBasis select_basis_greedy(const Eigen::MatrixXd& Y, int n, int s, const RankTolerance& tol) {
  check_shape(Y, n, s);
  const Eigen::Index k = static_cast<Eigen::Index>(count_monomials(n, s - 1));
  RankDecision d = numeric_rank(Y.leftCols(k), tol);
  RankTolerance fixed;
  fixed.absolute = d.threshold_used;
  std::vector<int> cols;
  for (Eigen::Index j = 0; j < k && static_cast<int>(cols.size()) < d.rank; ++j) {
    std::vector<int> trial(cols);
    trial.push_back(static_cast<int>(j));
    if (numeric_rank(gather(Y, trial), fixed).rank == static_cast<int>(trial.size())) cols = trial;
  }
  return finish(Y, n, s, cols, d.threshold_used);
}

QuotientBasis select_basis_pivots(const Eigen::MatrixXd& Y, int n, int s, const RankTolerance& tol) {
  check_shape(Y, n, s);
  const Eigen::Index k = static_cast<Eigen::Index>(count_monomials(n, s - 1));
  RankDecision d = numeric_rank(Y.leftCols(k), tol);
  RrefResult rr = rref_partial_pivot(Y.leftCols(k), tol);
  return finish(Y, n, s, rr.pivot_cols, d.threshold_used);
}

Polynomial BorderBasis::element(std::size_t k, const MonomialSet& B) const {
  Polynomial f = Polynomial::monomial(border[k]);
  for (std::size_t b = 0; b < B.size(); ++b) {
    double c = phi[k][static_cast<Eigen::Index>(b)];
    if (c != 0.0) f = f - Polynomial::monomial(B[b], c);
  }
  return f;
}

std::vector<Polynomial> BorderBasis::elements(const MonomialSet& B) const {
  std::vector<Polynomial> out;
  for (std::size_t k = 0; k < border.size(); ++k) out.push_back(element(k, B));
  return out;
}

int BorderBasis::find(const Monomial& m) const {
  auto it = std::lower_bound(border.begin(), border.end(), m);
  if (it == border.end() || !(*it == m)) return -1;
  return static_cast<int>(it - border.begin());
}

BorderBasis border_basis(const QuotientBasis& qb, const RankTolerance& tol) {
  MonomialIndex idx(qb.n, qb.s);
  BorderBasis bb;
  bb.border = border(qb.monomials);
  Eigen::MatrixXd YB = gather(qb.Y, qb.columns());
  Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod(YB);
  const double ynorm = qb.Y.norm();
  double tau = qb.threshold > 0.0 ? qb.threshold : numeric_rank(qb.Y, tol).threshold_used;
  for (const Monomial& m : bb.border) {
    int col = idx.find(m);
    if (col < 0)
      throw QuotientError("border monomial " + m.to_string() + " has degree above s = " +
                          std::to_string(qb.s));
    Eigen::VectorXd rhs = qb.Y.col(col);
    Eigen::VectorXd lam = cod.solve(rhs);
    double res = (YB * lam - rhs).norm();
    bb.phi.push_back(lam);
    bb.residuals.push_back(res);
    bb.max_residual = std::max(bb.max_residual, res);
  }
  if (bb.max_residual > 10.0 * tau * std::max(1.0, ynorm)) {
    throw QuotientError("border basis residual " + std::to_string(bb.max_residual) +
                        " exceeds the rank threshold; the stopping conditions do not hold numerically");
  }
  return bb;
}

MultiplicationSystem multiplication_matrices(const QuotientBasis& qb, const BorderBasis& bb) {
  const MonomialSet& B = qb.monomials;
  const Eigen::Index k = static_cast<Eigen::Index>(B.size());
  MultiplicationSystem ms;
  for (int i = 0; i < qb.n; ++i) {
    Eigen::MatrixXd X = Eigen::MatrixXd::Zero(k, k);
    for (Eigen::Index j = 0; j < k; ++j) {
      Monomial m = B[j].times_var(i);
      auto it = std::lower_bound(B.begin(), B.end(), m);
      if (it != B.end() && *it == m) {
        X(it - B.begin(), j) = 1.0;
        continue;
      }
      int p = bb.find(m);
      if (p < 0) throw QuotientError("x_i * b is neither in B nor in its border");
      X.col(j) = bb.phi[p];
    }
    ms.matrices.push_back(std::move(X));
  }
  ms.commutativity_error = commutativity_error(ms.matrices);
  return ms;
}

double MultiplicationSystem::max_norm() const {
  double r = 0.0;
  for (const auto& X : matrices) r = std::max(r, X.norm());
  return r;
}

double commutativity_error(const std::vector<Eigen::MatrixXd>& X) {
  double c = 0.0;
  for (std::size_t i = 0; i < X.size(); ++i)
    for (std::size_t j = i + 1; j < X.size(); ++j)
      c = std::max(c, (X[i] * X[j] - X[j] * X[i]).cwiseAbs().maxCoeff());
  return c;
}

}  // namespace realvar
