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

#include "realvar/moment.hpp"

#include <string>

namespace realvar {

LinearFunctional::LinearFunctional(int n_, int order_, Eigen::VectorXd v)
    : order(order_), n(n_), values(std::move(v)) {
  if (static_cast<std::size_t>(values.size()) != count_monomials(n, order))
    throw Error("linear functional length does not match order " + std::to_string(order));
}

LinearFunctional LinearFunctional::zero(int n, int order) {
  return LinearFunctional(n, order,
                          Eigen::VectorXd::Zero(static_cast<Eigen::Index>(count_monomials(n, order))));
}

LinearFunctional LinearFunctional::evaluation(const Eigen::VectorXd& v, int order) {
  const int n = static_cast<int>(v.size());
  MonomialIndex idx(n, order);
  Eigen::VectorXd y(idx.size());
  for (std::size_t k = 0; k < idx.size(); ++k) y[k] = Polynomial::monomial(idx[k]).evaluate(v);
  return LinearFunctional(n, order, std::move(y));
}

double LinearFunctional::apply(const Polynomial& p) const {
  if (p.degree() > order) throw Error("apply: polynomial degree exceeds functional order");
  MonomialIndex idx(n, order);
  double s = 0.0;
  for (const auto& [m, c] : p.terms()) s += c * values[idx.at(m)];
  return s;
}

LinearFunctional LinearFunctional::truncate(int s) const {
  if (s > order || s < 0) throw Error("truncate: order out of range");
  return LinearFunctional(n, s, values.head(static_cast<Eigen::Index>(count_monomials(n, s))));
}

MomentLayout::MomentLayout(int n, int s, int order) : n_(n), s_(s), order_(order) {
  if (2 * s > order)
    throw Error("moment matrix of order " + std::to_string(s) + " needs a functional of order >= " +
                std::to_string(2 * s));
  MonomialIndex big(n, order);
  MonomialIndex small(n, s);
  const int k = static_cast<int>(small.size());
  pos_.resize(k, k);
  for (int a = 0; a < k; ++a)
    for (int b = a; b < k; ++b) pos_(a, b) = pos_(b, a) = big.at(small[a] * small[b]);
}

Eigen::MatrixXd MomentLayout::build(const Eigen::Ref<const Eigen::VectorXd>& y) const {
  const int k = size();
  Eigen::MatrixXd M(k, k);
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) M(a, b) = y[pos_(a, b)];
  return M;
}

Eigen::MatrixXd moment_matrix(const LinearFunctional& L, int s) {
  return MomentLayout(L.n, s, L.order).build(L.values);
}

std::vector<Polynomial> build_St(const std::vector<Polynomial>& kernel_polys, int t) {
  std::vector<Polynomial> out;
  const int half = t / 2;
  for (const auto& g : kernel_polys) {
    if (g.degree() > half)
      throw Error("kernel polynomial of degree " + std::to_string(g.degree()) +
                  " exceeds floor(t/2) = " + std::to_string(half));
    for (const Monomial& a : monomials_up_to(g.nvars(), half)) out.push_back(g.times(a));
  }
  return out;
}

Eigen::MatrixXd st_matrix(const std::vector<Polynomial>& kernel_polys, int n, int t) {
  const int half = t / 2;
  MonomialIndex idx(n, t);
  std::vector<Monomial> shifts = monomials_up_to(n, half);
  Eigen::MatrixXd S = Eigen::MatrixXd::Zero(
      static_cast<Eigen::Index>(kernel_polys.size() * shifts.size()),
      static_cast<Eigen::Index>(idx.size()));
  Eigen::Index r = 0;
  for (const auto& g : kernel_polys) {
    if (g.degree() > half) throw Error("kernel polynomial degree exceeds floor(t/2)");
    for (const Monomial& a : shifts) {
      for (const auto& [m, c] : g.terms()) S(r, idx.at(m * a)) = c;
      ++r;
    }
  }
  return S;
}

Eigen::MatrixXd GtSystem::g_rows() const {
  Eigen::MatrixXd G(h_rows.rows() + s_rows.rows(), h_rows.cols());
  G << h_rows, s_rows;
  return G;
}

Eigen::MatrixXd GtSystem::g_plus() const {
  MonomialIndex lo(n, t);
  MonomialIndex hi(n, t + 1);
  Eigen::MatrixXd G = g_rows();
  const Eigen::Index r = G.rows();
  Eigen::MatrixXd P = Eigen::MatrixXd::Zero(r * (n + 1), static_cast<Eigen::Index>(hi.size()));
  P.topLeftCorner(r, G.cols()) = G;
  for (int i = 0; i < n; ++i) {
    std::vector<int> target(lo.size());
    for (std::size_t k = 0; k < lo.size(); ++k) target[k] = hi.at(lo[k].times_var(i));
    for (Eigen::Index row = 0; row < r; ++row)
      for (Eigen::Index k = 0; k < G.cols(); ++k)
        if (G(row, k) != 0.0) P(r * (i + 1) + row, target[k]) = G(row, k);
  }
  return P;
}

GtSystem assemble_G(const PolySystem& sys, int t, const std::vector<Polynomial>& kernel_polys,
                    Mode mode) {
  GtSystem gt;
  gt.t = t;
  gt.n = sys.nvars();
  gt.mode = mode;
  MonomialIndex idx(sys.nvars(), t);
  gt.h_rows = coefficient_matrix(prolong_generators(sys, t), idx);
  if (mode == Mode::Real && !kernel_polys.empty())
    gt.s_rows = st_matrix(kernel_polys, sys.nvars(), t);
  else
    gt.s_rows = Eigen::MatrixXd(0, gt.h_rows.cols());
  return gt;
}

Eigen::MatrixXd kernel_G(const GtSystem& gt, const RankTolerance& tol) {
  Eigen::MatrixXd KH = gt.h_kernel ? *gt.h_kernel : nullspace_basis(gt.h_rows, tol);
  if (gt.s_rows.rows() == 0 || KH.rows() == 0) return KH;
  Eigen::MatrixXd restricted = gt.s_rows * KH.transpose();
  const double floor = gt.s_rows.rowwise().norm().maxCoeff();
  Eigen::MatrixXd N = nullspace_basis(restricted, tol.with_floor(floor));
  return N * KH;
}

Eigen::MatrixXd kernel_Gplus(const GtSystem& gt, const Eigen::MatrixXd& Z,
                             const RankTolerance& tol) {
  const int n = gt.n, t = gt.t;
  MonomialIndex lo(n, t);
  MonomialIndex hi(n, t + 1);
  const Eigen::Index M = Z.rows();
  if (M == 0) return Eigen::MatrixXd(0, static_cast<Eigen::Index>(hi.size()));

  const std::size_t below = count_monomials(n, t - 1);
  const std::size_t top_begin = lo.size();
  std::vector<std::vector<int>> top_terms;  // per top monomial: variables i with beta_i > 0
  for (std::size_t k = top_begin; k < hi.size(); ++k) {
    std::vector<int> vars;
    for (int i = 0; i < n; ++i)
      if (hi[k][i] > 0) vars.push_back(i);
    top_terms.push_back(std::move(vars));
  }
  Eigen::Index eqs = static_cast<Eigen::Index>(n * below);
  for (const auto& v : top_terms) eqs += static_cast<Eigen::Index>(v.size()) - 1;

  // Unknown layout: [c, d_1, ..., d_n], each of length M.
  Eigen::MatrixXd E = Eigen::MatrixXd::Zero(eqs, (n + 1) * M);
  Eigen::Index row = 0;
  for (int i = 0; i < n; ++i) {
    for (std::size_t a = 0; a < below; ++a) {
      E.row(row).segment(0, M) = Z.col(lo.at(lo[a].times_var(i))).transpose();
      E.row(row).segment((i + 1) * M, M) = -Z.col(static_cast<Eigen::Index>(a)).transpose();
      ++row;
    }
  }
  for (std::size_t k = 0; k < top_terms.size(); ++k) {
    const Monomial& beta = hi[top_begin + k];
    const auto& vars = top_terms[k];
    const int i0 = vars.front();
    const int p0 = lo.at(beta / Monomial::variable(n, i0));
    for (std::size_t q = 1; q < vars.size(); ++q) {
      const int i = vars[q];
      const int p = lo.at(beta / Monomial::variable(n, i));
      E.row(row).segment((i0 + 1) * M, M) = Z.col(p0).transpose();
      E.row(row).segment((i + 1) * M, M) = -Z.col(p).transpose();
      ++row;
    }
  }

  Eigen::MatrixXd W = nullspace_basis(E, tol.with_floor(1.0));
  if (W.rows() == 0) return Eigen::MatrixXd(0, static_cast<Eigen::Index>(hi.size()));
  Eigen::MatrixXd Y = Eigen::MatrixXd::Zero(W.rows(), static_cast<Eigen::Index>(hi.size()));
  Y.leftCols(lo.size()) = W.leftCols(M) * Z;
  for (std::size_t k = 0; k < top_terms.size(); ++k) {
    const Monomial& beta = hi[top_begin + k];
    const int i0 = top_terms[k].front();
    const int p0 = lo.at(beta / Monomial::variable(n, i0));
    Y.col(static_cast<Eigen::Index>(top_begin + k)) = W.middleCols((i0 + 1) * M, M) * Z.col(p0);
  }
  return rowspace_basis(Y, tol.with_floor(1.0));
}

Eigen::MatrixXd kernel_Gplus_direct(const GtSystem& gt, const RankTolerance& tol) {
  return nullspace_basis(gt.g_plus(), tol);
}

bool flat_extension_check(const LinearFunctional& L, int s, const RankTolerance& tol) {
  if (s < 1) throw Error("flat_extension_check: s must be >= 1");
  Eigen::MatrixXd Ms = moment_matrix(L, s);
  const Eigen::Index k = static_cast<Eigen::Index>(count_monomials(L.n, s - 1));
  int r1 = numeric_rank(Ms, tol).rank;
  int r0 = numeric_rank(Ms.topLeftCorner(k, k), tol).rank;
  return r1 == r0;
}

}  // namespace realvar
