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

#include "realvar/numla.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <string>
#include <vector>

#include <lapacke.h>

namespace realvar {

namespace {

std::string dims(const Eigen::Ref<const Eigen::MatrixXd>& A) {
  return std::to_string(A.rows()) + "x" + std::to_string(A.cols());
}

void require_finite(const Eigen::Ref<const Eigen::MatrixXd>& A, const char* what) {
  if (!A.allFinite())
    throw LinalgError(std::string(what) + ": non-finite entry in " + dims(A) + " matrix");
}

// Dense SVD through LAPACK's QR-iteration driver. The divide-and-conquer
// drivers (Eigen's BDCSVD and LAPACK's gesdd) were both observed to return
// wrong factors on rank-deficient matrices with clustered singular values.
// Returns the singular values and, when V is given, the full n x n V.
Eigen::VectorXd lapack_svd(Eigen::MatrixXd work, Eigen::MatrixXd* V) {
  const lapack_int m = static_cast<lapack_int>(work.rows());
  const lapack_int n = static_cast<lapack_int>(work.cols());
  const lapack_int k = std::min(m, n);
  Eigen::VectorXd sigma(k);
  Eigen::MatrixXd vt;
  double dummy = 0.0;
  if (V) vt.resize(n, n);
  std::vector<double> superb(static_cast<std::size_t>(std::max<lapack_int>(1, k)));
  const lapack_int info = LAPACKE_dgesvd(LAPACK_COL_MAJOR, 'N', V ? 'A' : 'N', m, n, work.data(), m,
                                         sigma.data(), &dummy, 1, V ? vt.data() : &dummy,
                                         V ? n : 1, superb.data());
  if (info != 0)
    throw LinalgError("SVD did not converge for " + std::to_string(m) + "x" + std::to_string(n));
  if (V) *V = vt.transpose();
  return sigma;
}

}  // namespace

// When A is tall it is first compressed to its square R factor, which has the
// same right singular pairs.
RightSvd right_svd(const Eigen::Ref<const Eigen::MatrixXd>& A) {
  const Eigen::Index m = A.rows(), n = A.cols();
  Eigen::MatrixXd work;
  if (m > n) {
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(A);
    work = qr.matrixQR().topRows(n).triangularView<Eigen::Upper>();
  } else {
    work = A;
  }
  RightSvd out;
  out.sigma = Eigen::VectorXd::Zero(n);
  if (n == 0) {
    out.V = Eigen::MatrixXd(0, 0);
    return out;
  }
  if (work.rows() == 0) {
    out.V = Eigen::MatrixXd::Identity(n, n);
    return out;
  }
  Eigen::VectorXd s = lapack_svd(std::move(work), &out.V);
  out.sigma.head(s.size()) = s;
  return out;
}

namespace {

int count_above(const Eigen::VectorXd& sigma, double tau) {
  int r = 0;
  for (Eigen::Index i = 0; i < sigma.size(); ++i)
    if (sigma[i] > tau) ++r;
  return r;
}

RankDecision decide(const Eigen::VectorXd& sigma, Eigen::Index rows, Eigen::Index cols,
                    const RankTolerance& tol) {
  RankDecision d;
  const Eigen::Index k = std::min(rows, cols);
  d.singular_values.assign(sigma.data(), sigma.data() + k);
  double smax = k > 0 ? sigma[0] : 0.0;
  d.threshold_used = tol.threshold(smax, rows, cols);
  d.rank = count_above(sigma.head(k), d.threshold_used);
  if (tol.gap_band > 0.0 && !tol.absolute) {
    const double upper = tol.gap_band * std::max(smax, tol.sigma_floor);
    double best = tol.gap_ratio;
    for (Eigen::Index i = 1; i < d.rank; ++i) {
      if (sigma[i] > upper) continue;
      const double ratio = sigma[i - 1] / sigma[i];
      if (ratio >= best) {
        best = ratio;
        d.rank = static_cast<int>(i);
      }
    }
  }
  return d;
}

}  // namespace

RankTolerance RankTolerance::from_env() {
  RankTolerance t;
  if (const char* s = std::getenv("REALVAR_RANK_TOL")) {
    char* end = nullptr;
    double v = std::strtod(s, &end);
    if (end != s && v > 0.0 && std::isfinite(v)) t.relative = v;
  }
  return t;
}

double RankTolerance::threshold(double sigma_max, Eigen::Index rows, Eigen::Index cols) const {
  if (absolute) return *absolute;
  return relative * std::max(sigma_max, sigma_floor) * static_cast<double>(std::max(rows, cols));
}

double RankDecision::gap() const {
  if (rank == 0 || rank >= static_cast<int>(singular_values.size()))
    return std::numeric_limits<double>::infinity();
  double below = singular_values[rank];
  if (below <= 0.0) return std::numeric_limits<double>::infinity();
  return singular_values[rank - 1] / below;
}

Eigen::VectorXd singular_values(const Eigen::Ref<const Eigen::MatrixXd>& A) {
  require_finite(A, "singular_values");
  if (A.rows() == 0 || A.cols() == 0) return Eigen::VectorXd();
  if (A.rows() < A.cols()) {
    Eigen::MatrixXd At = A.transpose();
    return singular_values(At);
  }
  Eigen::MatrixXd work;
  if (A.rows() > A.cols()) {
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(A);
    work = qr.matrixQR().topRows(A.cols()).triangularView<Eigen::Upper>();
  } else {
    work = A;
  }
  return lapack_svd(std::move(work), nullptr);
}

RankDecision numeric_rank(const Eigen::Ref<const Eigen::MatrixXd>& A, const RankTolerance& tol) {
  if (A.rows() == 0 || A.cols() == 0) throw LinalgError("numeric_rank: empty matrix");
  Eigen::VectorXd s = singular_values(A);
  return decide(s, A.rows(), A.cols(), tol);
}

Eigen::MatrixXd nullspace_basis(const Eigen::Ref<const Eigen::MatrixXd>& A,
                                const RankTolerance& tol, RankDecision* decision) {
  if (A.cols() == 0) throw LinalgError("nullspace_basis: matrix has no columns");
  require_finite(A, "nullspace_basis");
  if (A.rows() == 0) {
    if (decision) *decision = RankDecision{};
    return Eigen::MatrixXd::Identity(A.cols(), A.cols());
  }
  RightSvd svd = right_svd(A);
  RankDecision d = decide(svd.sigma, A.rows(), A.cols(), tol);
  if (decision) *decision = d;
  const Eigen::Index n = A.cols();
  return svd.V.rightCols(n - d.rank).transpose();
}

Eigen::MatrixXd rowspace_basis(const Eigen::Ref<const Eigen::MatrixXd>& A,
                               const RankTolerance& tol, RankDecision* decision) {
  if (A.cols() == 0) throw LinalgError("rowspace_basis: matrix has no columns");
  require_finite(A, "rowspace_basis");
  if (A.rows() == 0) {
    if (decision) *decision = RankDecision{};
    return Eigen::MatrixXd(0, A.cols());
  }
  RightSvd svd = right_svd(A);
  RankDecision d = decide(svd.sigma, A.rows(), A.cols(), tol);
  if (decision) *decision = d;
  return svd.V.leftCols(d.rank).transpose();
}

RrefResult rref_partial_pivot(const Eigen::Ref<const Eigen::MatrixXd>& A,
                              const RankTolerance& tol) {
  if (A.rows() == 0 || A.cols() == 0) throw LinalgError("rref_partial_pivot: empty matrix");
  RankDecision d = numeric_rank(A, tol);
  const double tau = d.threshold_used;
  RrefResult out;
  out.R = A;
  Eigen::MatrixXd& R = out.R;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < R.cols() && row < R.rows(); ++col) {
    Eigen::Index piv;
    double best = R.col(col).tail(R.rows() - row).cwiseAbs().maxCoeff(&piv);
    piv += row;
    if (best <= tau) {
      R.col(col).tail(R.rows() - row).setZero();
      continue;
    }
    R.row(row).swap(R.row(piv));
    R.row(row) /= R(row, col);
    for (Eigen::Index i = 0; i < R.rows(); ++i) {
      if (i == row) continue;
      double f = R(i, col);
      if (f != 0.0) R.row(i) -= f * R.row(row);
    }
    out.pivot_cols.push_back(static_cast<int>(col));
    ++row;
  }
  R.bottomRows(R.rows() - row).setZero();
  return out;
}

SymmetricEig symmetric_eig(const Eigen::Ref<const Eigen::MatrixXd>& A) {
  if (A.rows() != A.cols()) throw LinalgError("symmetric_eig: matrix is not square");
  require_finite(A, "symmetric_eig");
  double scale = std::max(1.0, A.cwiseAbs().maxCoeff());
  if ((A - A.transpose()).cwiseAbs().maxCoeff() > 1e-10 * scale)
    throw LinalgError("symmetric_eig: matrix is not symmetric");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(A);
  if (es.info() != Eigen::Success)
    throw LinalgError("symmetric_eig: eigensolver failed for " + dims(A));
  return {es.eigenvalues(), es.eigenvectors()};
}

ComplexSchur complex_schur(const Eigen::Ref<const Eigen::MatrixXd>& A) {
  if (A.rows() != A.cols()) throw LinalgError("complex_schur: matrix is not square");
  require_finite(A, "complex_schur");
  Eigen::ComplexSchur<Eigen::MatrixXcd> cs(A.cast<std::complex<double>>());
  if (cs.info() != Eigen::Success)
    throw LinalgError("Schur QR iteration did not converge for " + dims(A));
  return {cs.matrixT(), cs.matrixU()};
}

namespace {

using cd = std::complex<double>;

// Plane rotation [c s; -conj(s) c] with [c s; -conj(s) c] [f; g] = [r; 0].
void make_givens(cd f, cd g, double& c, cd& s) {
  double af = std::abs(f), ag = std::abs(g);
  if (ag == 0.0) {
    c = 1.0;
    s = 0.0;
  } else if (af == 0.0) {
    c = 0.0;
    s = std::conj(g) / ag;
  } else {
    double d = std::hypot(af, ag);
    c = af / d;
    s = (f / af) * std::conj(g) / d;
  }
}

// x <- c x + s y, y <- c y - conj(s) x.
template <typename X, typename Y>
void rot(X&& x, Y&& y, double c, cd s) {
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    cd xi = x(i), yi = y(i);
    x(i) = c * xi + s * yi;
    y(i) = c * yi - std::conj(s) * xi;
  }
}

// Swaps the adjacent diagonal entries k and k+1 of an upper-triangular T.
void swap_adjacent(ComplexSchur& S, Eigen::Index k) {
  Eigen::MatrixXcd& T = S.T;
  const Eigen::Index n = T.rows();
  cd t11 = T(k, k), t22 = T(k + 1, k + 1);
  if (t11 == t22) return;
  double c;
  cd s;
  make_givens(T(k, k + 1), t22 - t11, c, s);
  if (k + 2 < n) {
    auto r1 = T.row(k).tail(n - k - 2);
    auto r2 = T.row(k + 1).tail(n - k - 2);
    rot(r1, r2, c, s);
  }
  if (k > 0) {
    auto c1 = T.col(k).head(k);
    auto c2 = T.col(k + 1).head(k);
    rot(c1, c2, c, std::conj(s));
  }
  T(k, k) = t22;
  T(k + 1, k + 1) = t11;
  auto u1 = S.U.col(k);
  auto u2 = S.U.col(k + 1);
  rot(u1, u2, c, std::conj(s));
}

Eigen::MatrixXd orthonormal_columns(const Eigen::MatrixXd& M, int k) {
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(M, Eigen::ComputeThinU);
  return svd.matrixU().leftCols(k);
}

}  // namespace

void schur_move_up(ComplexSchur& S, Eigen::Index from, Eigen::Index to) {
  for (Eigen::Index k = from - 1; k >= to; --k) swap_adjacent(S, k);
}

std::vector<EigenCluster> clustered_schur(const Eigen::Ref<const Eigen::MatrixXd>& A,
                                          double cluster_tol) {
  const Eigen::Index n = A.rows();
  if (n != A.cols()) throw LinalgError("clustered_schur: matrix is not square");
  if (n == 0) return {};
  ComplexSchur base = complex_schur(A);
  Eigen::VectorXcd lam = base.T.diagonal();
  const double radius = cluster_tol * (1.0 + A.norm());

  // Transitive closure of the proximity relation (union-find).
  std::vector<Eigen::Index> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](Eigen::Index i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = i + 1; j < n; ++j)
      if (std::abs(lam[i] - lam[j]) <= radius) parent[find(i)] = find(j);

  std::vector<std::vector<Eigen::Index>> groups;
  std::vector<Eigen::Index> label(n, -1);
  for (Eigen::Index i = 0; i < n; ++i) {
    Eigen::Index r = find(i);
    if (label[r] < 0) {
      label[r] = static_cast<Eigen::Index>(groups.size());
      groups.emplace_back();
    }
    groups[label[r]].push_back(i);
  }

  std::vector<cd> means;
  for (const auto& g : groups) {
    cd m = 0.0;
    for (auto i : g) m += lam[i];
    means.push_back(m / static_cast<double>(g.size()));
  }

  auto invariant_basis = [&](std::size_t gi) {
    ComplexSchur S = base;
    std::vector<Eigen::Index> owner(n);
    for (Eigen::Index i = 0; i < n; ++i) owner[i] = label[find(i)];
    Eigen::Index front = 0;
    for (Eigen::Index pos = 0; pos < n; ++pos) {
      if (owner[pos] != static_cast<Eigen::Index>(gi)) continue;
      schur_move_up(S, pos, front);
      std::rotate(owner.begin() + front, owner.begin() + pos, owner.begin() + pos + 1);
      ++front;
    }
    return Eigen::MatrixXcd(S.U.leftCols(front));
  };

  std::vector<bool> used(groups.size(), false);
  std::vector<EigenCluster> out;
  // Ascending real part, then imaginary part, gives a stable ordering.
  std::vector<std::size_t> order(groups.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (means[a].real() != means[b].real()) return means[a].real() < means[b].real();
    return means[a].imag() > means[b].imag();
  });

  for (std::size_t gi : order) {
    if (used[gi]) continue;
    used[gi] = true;
    EigenCluster c;
    c.size = static_cast<int>(groups[gi].size());
    c.mean = means[gi];
    bool complex_valued = std::abs(c.mean.imag()) > radius;
    std::size_t partner = groups.size();
    if (complex_valued) {
      double best = std::numeric_limits<double>::infinity();
      for (std::size_t gj = 0; gj < groups.size(); ++gj) {
        if (used[gj] || groups[gj].size() != groups[gi].size()) continue;
        double d = std::abs(means[gj] - std::conj(c.mean));
        if (d < best) {
          best = d;
          partner = gj;
        }
      }
      if (best > radius * static_cast<double>(c.size + 1)) partner = groups.size();
    }
    std::size_t upper = gi;
    if (partner < groups.size()) {
      used[partner] = true;
      c.conjugate_pair = true;
      if (means[partner].imag() > c.mean.imag()) upper = partner;
      c.mean = 0.5 * (means[upper] + std::conj(means[upper == gi ? partner : gi]));
    } else if (!complex_valued) {
      c.mean = c.mean.real();
    }
    c.complex_basis = invariant_basis(upper);
    Eigen::MatrixXd stacked(n, 2 * c.size);
    stacked << c.complex_basis.real(), c.complex_basis.imag();
    int real_dim = c.conjugate_pair ? 2 * c.size : c.size;
    if (partner == groups.size() && complex_valued) real_dim = std::min<int>(2 * c.size, n);
    c.basis = orthonormal_columns(stacked, real_dim);
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace realvar
