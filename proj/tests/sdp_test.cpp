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

#include <sstream>

#include <gtest/gtest.h>

#include "realvar/corpus.hpp"
#include "realvar/io.hpp"
#include "realvar/sdp.hpp"
#include "realvar/sdpa.hpp"

namespace realvar {
namespace {

// max y  s.t.  [[1, y], [y, 1]] >= 0  has optimum y = 1.
DenseSdp two_by_two() {
  DenseSdp p;
  p.C = Eigen::MatrixXd::Identity(2, 2);
  Eigen::MatrixXd A(2, 2);
  A << 0, -1, -1, 0;
  p.A = {A};
  p.b = Eigen::VectorXd::Ones(1);
  return p;
}

TEST(DenseIpm, TwoByTwoOptimum) {
  DenseSdp p = two_by_two();
  IpmResult r = solve_dense_sdp(p, Eigen::MatrixXd::Identity(2, 2), Eigen::VectorXd::Zero(1));
  EXPECT_TRUE(r.converged);
  EXPECT_NEAR(r.dual_obj, 1.0, 1e-7);
  EXPECT_NEAR(r.primal_obj, 1.0, 1e-7);
  EXPECT_NEAR(r.y[0], 1.0, 1e-7);
}

// Minimum eigenvalue of a symmetric matrix as an SDP: max y s.t. B - y I >= 0.
TEST(DenseIpm, MinimumEigenvalue) {
  Eigen::MatrixXd B(3, 3);
  B << 2, 1, 0, 1, 3, 1, 0, 1, 4;
  DenseSdp p;
  p.C = B;
  p.A = {Eigen::MatrixXd::Identity(3, 3)};
  p.b = Eigen::VectorXd::Ones(1);
  IpmResult r = solve_dense_sdp(p, Eigen::MatrixXd::Identity(3, 3) / 3.0, Eigen::VectorXd::Zero(1));
  const double lmin = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(B).eigenvalues()[0];
  EXPECT_NEAR(r.y[0], lmin, 1e-7);
}

TEST(Sdpa, RoundTrip) {
  DenseSdp p = two_by_two();
  std::stringstream ss;
  write_sdpa(ss, p);
  DenseSdp q = read_sdpa(ss);
  EXPECT_TRUE(q.C.isApprox(p.C));
  ASSERT_EQ(q.A.size(), 1u);
  EXPECT_TRUE(q.A[0].isApprox(p.A[0]));
  EXPECT_TRUE(q.b.isApprox(p.b));
}

// x^2 - 1: the only functionals in the psd cone at t = 4 with M_2 flat are
// combinations of the evaluations at +-1, so x^2 - 1 is eventually a kernel element.
TEST(GenericElement, TwoPointsKernel) {
  PolySystem sys = load_bench("twopoints");
  MomentConeProblem prob = build_cone_problem(sys, 4);
  GenericSolution g = generic_element(prob);
  EXPECT_FALSE(g.cone_trivial);
  EXPECT_EQ(g.rank_profile, (std::vector<int>{1, 2, 2}));
  ASSERT_EQ(g.kernel_polys.size(), 1u);
  for (double x : {-1.0, 1.0})
    EXPECT_NEAR(g.kernel_polys[0].evaluate(Eigen::VectorXd::Constant(1, x)), 0.0, 1e-7);
  EXPECT_NEAR(g.moment_matrix.trace(), 1.0, 1e-9);
  EXPECT_GE(g.min_eigenvalue, -1e-9);
}

TEST(GenericElement, EmptyRealVarietyGivesTrivialCone) {
  MomentConeProblem prob = build_cone_problem(load_bench("noreal1"), 2);
  GenericSolution g = generic_element(prob);
  EXPECT_TRUE(g.cone_trivial);
  EXPECT_EQ(g.rank_profile.front(), 0);
}

// Every point of K_{t,psd} satisfies the linear constraints L(x^a h_j) = 0.
TEST(GenericElement, FunctionalIsOrthogonalToProlongations) {
  PolySystem sys = load_bench("cox98");
  MomentConeProblem prob = build_cone_problem(sys, 4);
  GenericSolution g = generic_element(prob);
  for (const auto& h : prolong_generators(sys, 4))
    EXPECT_NEAR(g.functional.apply(h.poly), 0.0, 1e-9);
  Eigen::VectorXd eig = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(g.moment_matrix).eigenvalues();
  EXPECT_GE(eig.minCoeff(), -1e-9);
}

// The rank of a relative interior point does not depend on which one is found.
TEST(GenericElement, RankIsIndependentOfObjectiveWeight) {
  PolySystem sys = load_bench("gauss");
  MomentConeProblem prob = build_cone_problem(sys, 4);
  GenericSolution a = generic_element(prob);
  SdpOptions o;
  o.weight_seed = 99;
  GenericSolution b = generic_element(prob, o);
  EXPECT_EQ(a.rank_profile, b.rank_profile);
}

TEST(GenericElement, KernelVectorsAnnihilateMomentMatrix) {
  PolySystem sys = load_bench("cox3");
  GenericSolution g = generic_element(build_cone_problem(sys, 6));
  ASSERT_GT(g.kernel_vectors.cols(), 0);
  EXPECT_LT((g.moment_matrix * g.kernel_vectors).cwiseAbs().maxCoeff(), 1e-6);
  // The two real points (0,0) and (1,2) are zeros of every kernel polynomial.
  for (const auto& w : g.kernel_polys) {
    EXPECT_NEAR(w.evaluate(Eigen::Vector2d(0, 0)), 0.0, 1e-5);
    EXPECT_NEAR(w.evaluate(Eigen::Vector2d(1, 2)), 0.0, 1e-5);
  }
}

}  // namespace
}  // namespace realvar
