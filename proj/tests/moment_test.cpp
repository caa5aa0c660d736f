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

#include <random>

#include <gtest/gtest.h>

#include "realvar/corpus.hpp"
#include "realvar/moment.hpp"
#include "realvar/pp.hpp"

namespace realvar {
namespace {

Eigen::VectorXd monomial_vector(const Eigen::VectorXd& v, int s) {
  auto ms = monomials_up_to(static_cast<int>(v.size()), s);
  Eigen::VectorXd z(ms.size());
  for (std::size_t i = 0; i < ms.size(); ++i) z[i] = Polynomial::monomial(ms[i]).evaluate(v);
  return z;
}

// Sum of point evaluations with positive weights.
LinearFunctional atomic(const std::vector<Eigen::VectorXd>& pts, const std::vector<double>& w,
                        int order) {
  LinearFunctional L = LinearFunctional::zero(static_cast<int>(pts[0].size()), order);
  for (std::size_t i = 0; i < pts.size(); ++i)
    L.values += w[i] * LinearFunctional::evaluation(pts[i], order).values;
  return L;
}

TEST(MomentMatrix, EvaluationIsOuterProduct) {
  Eigen::VectorXd v(2);
  v << 0.5, -2.0;
  LinearFunctional L = LinearFunctional::evaluation(v, 4);
  Eigen::VectorXd z = monomial_vector(v, 2);
  EXPECT_LT((moment_matrix(L, 2) - z * z.transpose()).norm(), 1e-12);
  Polynomial p = Polynomial::variable(2, 0) * Polynomial::variable(2, 1);
  EXPECT_DOUBLE_EQ(L.apply(p), -1.0);
}

TEST(MomentMatrix, RankOfAtomicFunctionals) {
  // r generic points give rank min(r, |T_s|) at every s.
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-1, 1);
  std::vector<Eigen::VectorXd> pts;
  for (int i = 0; i < 4; ++i) pts.push_back(Eigen::Vector2d(u(rng), u(rng)));
  LinearFunctional L = atomic(pts, {1.0, 0.5, 2.0, 0.25}, 6);
  for (int s = 0; s <= 3; ++s) {
    int want = std::min<int>(4, count_monomials(2, s));
    EXPECT_EQ(numeric_rank(moment_matrix(L, s)).rank, want) << "s=" << s;
  }
  EXPECT_FALSE(flat_extension_check(L, 1));
  EXPECT_TRUE(flat_extension_check(L, 3));
}

TEST(MomentMatrix, KernelPolynomialsVanishOnAtoms) {
  std::vector<Eigen::VectorXd> pts = {Eigen::Vector2d(1, 2), Eigen::Vector2d(-1, 0.5),
                                      Eigen::Vector2d(0, 0)};
  LinearFunctional L = atomic(pts, {1, 1, 1}, 4);
  Eigen::MatrixXd M = moment_matrix(L, 2);
  Eigen::MatrixXd N = nullspace_basis(M);
  EXPECT_EQ(N.rows(), 3);
  MonomialIndex idx(2, 2);
  for (Eigen::Index k = 0; k < N.rows(); ++k) {
    Polynomial p = Polynomial::from_coefficients(idx, N.row(k).transpose());
    for (const auto& v : pts) EXPECT_NEAR(p.evaluate(v), 0.0, 1e-10);
  }
}

TEST(MomentLayout, HankelStructure) {
  MomentLayout lay(2, 2, 4);
  MonomialIndex small(2, 2), big(2, 4);
  for (int a = 0; a < lay.size(); ++a)
    for (int b = 0; b < lay.size(); ++b)
      EXPECT_EQ(big[lay.pos(a, b)], small[a] * small[b]);
}

TEST(Truncation, KeepsLowDegreeCoordinates) {
  LinearFunctional L = LinearFunctional::evaluation(Eigen::Vector3d(1, 2, 3), 4);
  LinearFunctional T = L.truncate(2);
  EXPECT_EQ(T.order, 2);
  EXPECT_EQ(T.values.size(), static_cast<Eigen::Index>(count_monomials(3, 2)));
  EXPECT_TRUE(T.values.isApprox(L.values.head(T.values.size())));
}

TEST(St, ShapeAndRows) {
  Polynomial x = Polynomial::variable(2, 0), y = Polynomial::variable(2, 1);
  std::vector<Polynomial> C = {x - y, x * y};
  auto S = build_St(C, 4);
  EXPECT_EQ(S.size(), 2 * count_monomials(2, 2));
  Eigen::MatrixXd Sm = st_matrix(C, 2, 4);
  Eigen::MatrixXd ref = coefficient_matrix(S, MonomialIndex(2, 4));
  ASSERT_EQ(Sm.rows(), ref.rows());
  EXPECT_LT((Sm - ref).norm(), 1e-14);
}

class GplusTest : public ::testing::TestWithParam<std::pair<const char*, int>> {};

// The structured kernel of G_t^+ must agree with the kernel of the explicit matrix.
TEST_P(GplusTest, StructuredKernelMatchesDirect) {
  auto [name, t] = GetParam();
  PolySystem sys = load_bench(name);
  GtSystem gt = assemble_G(sys, t, {}, Mode::Complex);
  Eigen::MatrixXd kg = kernel_G(gt);
  Eigen::MatrixXd a = kernel_Gplus(gt, kg), b = kernel_Gplus_direct(gt);
  ASSERT_EQ(a.rows(), b.rows());
  // Same row space: projector difference.
  EXPECT_LT((a.transpose() * a - b.transpose() * b).norm(), 1e-8);
  // Kernel rows annihilate the generating matrix.
  if (a.rows() > 0) EXPECT_LT((gt.g_plus() * a.transpose()).cwiseAbs().maxCoeff(), 1e-8);
}

INSTANTIATE_TEST_SUITE_P(Corpus, GplusTest,
                         ::testing::Values(std::pair{"cox98", 3}, std::pair{"cox98", 4},
                                           std::pair{"gauss", 4}, std::pair{"ex45", 2},
                                           std::pair{"twopoints", 3}));

TEST(Gt, ComplexModeHasNoKernelRows) {
  PolySystem sys = load_bench("cox98");
  GtSystem gt = assemble_G(sys, 4, {}, Mode::Complex);
  EXPECT_EQ(gt.s_rows.rows(), 0);
  EXPECT_EQ(gt.h_rows.rows(), static_cast<Eigen::Index>(prolong_generators(sys, 4).size()));
}

// Adding kernel rows can only shrink the projected dual spaces.
TEST(Gt, RealDimsNeverExceedComplex) {
  PolySystem sys = load_bench("twopoints");
  Polynomial x = Polynomial::variable(1, 0);
  std::vector<Polynomial> C = {x * x - Polynomial::constant(1, 1.0)};
  // Kernel polynomials have degree <= floor(t/2), so the quadratic enters at t = 4.
  for (int t = 4; t <= 7; ++t) {
    DimensionTable r = dimension_table(assemble_G(sys, t, C, Mode::Real));
    DimensionTable c = dimension_table(assemble_G(sys, t, {}, Mode::Complex));
    for (int s = 0; s <= t; ++s) EXPECT_LE(r.dims_G[s], c.dims_G[s]);
  }
}

}  // namespace
}  // namespace realvar
