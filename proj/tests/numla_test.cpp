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

#include <cstdlib>
#include <random>

#include <gtest/gtest.h>

#include "realvar/numla.hpp"

namespace realvar {
namespace {

Eigen::MatrixXd gaussian(std::mt19937_64& rng, Eigen::Index r, Eigen::Index c) {
  std::normal_distribution<double> g;
  Eigen::MatrixXd A(r, c);
  for (Eigen::Index i = 0; i < r; ++i)
    for (Eigen::Index j = 0; j < c; ++j) A(i, j) = g(rng);
  return A;
}

// A product of Gaussian factors has rank min(r, k, c) with probability one.
TEST(NumericRank, LowRankProducts) {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 30; ++trial) {
    const int rows = 3 + trial % 9, cols = 2 + (trial * 7) % 11, k = 1 + trial % 5;
    Eigen::MatrixXd A = gaussian(rng, rows, k) * gaussian(rng, k, cols);
    RankDecision d = numeric_rank(A);
    EXPECT_EQ(d.rank, std::min({rows, cols, k})) << rows << "x" << cols << " k=" << k;
    EXPECT_EQ(static_cast<int>(d.singular_values.size()), std::min(rows, cols));
  }
}

TEST(NumericRank, ZeroMatrixAndFloor) {
  EXPECT_EQ(numeric_rank(Eigen::MatrixXd::Zero(4, 3)).rank, 0);
  // Pure rounding noise is full rank relative to itself, but not against a floor of 1.
  Eigen::MatrixXd noise = 1e-17 * Eigen::MatrixXd::Identity(3, 3);
  EXPECT_EQ(numeric_rank(noise).rank, 3);
  EXPECT_EQ(numeric_rank(noise, RankTolerance{}.with_floor(1.0)).rank, 0);
}

TEST(NumericRank, AbsoluteThreshold) {
  Eigen::MatrixXd D = Eigen::Vector3d(1.0, 1e-3, 1e-6).asDiagonal();
  RankTolerance tol;
  tol.absolute = 1e-4;
  EXPECT_EQ(numeric_rank(D, tol).rank, 2);
  tol.absolute = 1e-7;
  EXPECT_EQ(numeric_rank(D, tol).rank, 3);
}

TEST(NumericRank, GapBandOnlyLowersRank) {
  // 1e-7 sits above tau = 1e-8 * 1 * 4 but far below the next value.
  Eigen::MatrixXd D = Eigen::Vector4d(1.0, 0.5, 1e-7, 0.0).asDiagonal();
  EXPECT_EQ(numeric_rank(D).rank, 3);
  EXPECT_EQ(numeric_rank(D, RankTolerance{}.with_gap_band(1e-4)).rank, 2);
  // Values in the band without a 1e3 gap between them are kept.
  Eigen::MatrixXd E = Eigen::Vector4d(1.0, 5e-4, 5e-5, 1e-6).asDiagonal();
  EXPECT_EQ(numeric_rank(E, RankTolerance{}.with_gap_band(1e-4)).rank, 4);
}

TEST(NumericRank, EnvironmentOverride) {
  ::setenv("REALVAR_RANK_TOL", "1e-3", 1);
  EXPECT_DOUBLE_EQ(RankTolerance::from_env().relative, 1e-3);
  Eigen::MatrixXd D = Eigen::Vector3d(1.0, 1e-4, 1e-9).asDiagonal();
  EXPECT_EQ(numeric_rank(D, RankTolerance::from_env()).rank, 1);
  ::setenv("REALVAR_RANK_TOL", "garbage", 1);
  EXPECT_DOUBLE_EQ(RankTolerance::from_env().relative, RankTolerance{}.relative);
  ::unsetenv("REALVAR_RANK_TOL");
  EXPECT_EQ(numeric_rank(D, RankTolerance::from_env()).rank, 2);
}

TEST(Svd, RightFactorsReconstruct) {
  std::mt19937_64 rng(1);
  for (auto [r, c] : {std::pair{7, 4}, std::pair{4, 7}, std::pair{30, 5}}) {
    Eigen::MatrixXd A = gaussian(rng, r, c);
    RightSvd s = right_svd(A);
    ASSERT_EQ(s.V.rows(), c);
    EXPECT_LT((s.V.transpose() * s.V - Eigen::MatrixXd::Identity(c, c)).norm(), 1e-12);
    // |A v_j| = sigma_j for every right singular vector.
    for (int j = 0; j < c; ++j) EXPECT_NEAR((A * s.V.col(j)).norm(), s.sigma[j], 1e-10);
    Eigen::VectorXd sv = singular_values(A);
    Eigen::VectorXd ref = Eigen::JacobiSVD<Eigen::MatrixXd>(A).singularValues();
    for (Eigen::Index j = 0; j < ref.size(); ++j) EXPECT_NEAR(sv[j], ref[j], 1e-10);
  }
}

TEST(Subspaces, NullAndRowSpaceAreComplementary) {
  std::mt19937_64 rng(9);
  Eigen::MatrixXd A = gaussian(rng, 5, 3) * gaussian(rng, 3, 8);
  Eigen::MatrixXd N = nullspace_basis(A), R = rowspace_basis(A);
  EXPECT_EQ(N.rows(), 5);
  EXPECT_EQ(R.rows(), 3);
  EXPECT_LT((A * N.transpose()).norm(), 1e-10 * A.norm());
  EXPECT_LT((N * R.transpose()).norm(), 1e-12);
  EXPECT_LT((N * N.transpose() - Eigen::MatrixXd::Identity(5, 5)).norm(), 1e-12);
}

TEST(Rref, PivotsFollowIndependentColumns) {
  // Column 1 = 2 * column 0; columns 0 and 2 are independent.
  Eigen::MatrixXd A(3, 4);
  A << 1, 2, 0, 1,
       2, 4, 1, 3,
       0, 0, 1, 1;
  RrefResult r = rref_partial_pivot(A);
  EXPECT_EQ(r.pivot_cols, (std::vector<int>{0, 2}));
}

TEST(SymmetricEigen, AscendingAndOrthonormal) {
  std::mt19937_64 rng(4);
  Eigen::MatrixXd B = gaussian(rng, 6, 6);
  Eigen::MatrixXd A = B + B.transpose();
  SymmetricEig e = symmetric_eig(A);
  for (int i = 1; i < 6; ++i) EXPECT_LE(e.values[i - 1], e.values[i]);
  EXPECT_LT((A * e.vectors - e.vectors * e.values.asDiagonal()).norm(), 1e-10);
}

TEST(Schur, ClustersFindInvariantSubspaces) {
  // Similarity transform of diag(1, 1, 2, 3) plus a rotation block with eigenvalues 4 +- i.
  std::mt19937_64 rng(8);
  Eigen::MatrixXd D = Eigen::MatrixXd::Zero(6, 6);
  D.diagonal() << 1, 1, 2, 3, 4, 4;
  D(4, 5) = 1;
  D(5, 4) = -1;
  Eigen::MatrixXd S = gaussian(rng, 6, 6) + 3 * Eigen::MatrixXd::Identity(6, 6);
  Eigen::MatrixXd A = S * D * S.inverse();
  auto clusters = clustered_schur(A, 1e-8);
  int total = 0, pairs = 0;
  for (const auto& c : clusters) {
    const Eigen::MatrixXd& Q = c.basis;
    // A Q stays inside span Q.
    Eigen::MatrixXd resid = A * Q - Q * (Q.transpose() * A * Q);
    EXPECT_LT(resid.norm(), 1e-8 * A.norm());
    total += c.conjugate_pair ? 2 * c.size : c.size;
    pairs += c.conjugate_pair;
    if (std::abs(c.mean - std::complex<double>(1.0, 0.0)) < 1e-6) EXPECT_EQ(c.size, 2);
  }
  EXPECT_EQ(total, 6);
  EXPECT_EQ(pairs, 1);
}

TEST(Schur, MoveUpKeepsFactorization) {
  std::mt19937_64 rng(12);
  Eigen::MatrixXd A = gaussian(rng, 5, 5);
  ComplexSchur S = complex_schur(A);
  const std::complex<double> target = S.T(4, 4);
  schur_move_up(S, 4, 0);
  EXPECT_NEAR(std::abs(S.T(0, 0) - target), 0.0, 1e-10);
  EXPECT_LT((S.U * S.T * S.U.adjoint() - A.cast<std::complex<double>>()).norm(), 1e-10);
  EXPECT_LT(S.T.triangularView<Eigen::StrictlyLower>().toDenseMatrix().norm(), 1e-12);
}

}  // namespace
}  // namespace realvar
