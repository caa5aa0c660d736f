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

#include <gtest/gtest.h>

#include "realvar/corpus.hpp"
#include "realvar/io.hpp"
#include "realvar/pp.hpp"

namespace realvar {
namespace {

DimensionTable table(int t, std::vector<int> g, std::vector<int> gp) {
  return DimensionTable{t, std::move(g), std::move(gp)};
}

TEST(CheckStop, FirstQualifyingOrderWins) {
  // s=2 and s=3 both satisfy the equalities; the smallest is used.
  auto v = check_stop(table(5, {1, 2, 2, 2, 3, 5}, {1, 2, 2, 2, 3, 4, 6}), 3);
  EXPECT_EQ(v.kind, StopKind::DimConditions);
  EXPECT_EQ(v.s, 2);
  EXPECT_TRUE(v.s_below_D);
  EXPECT_EQ(v.all_s, (std::vector<int>{2, 3}));
}

TEST(CheckStop, StrictPolicyRestrictsRange) {
  auto t = table(5, {1, 2, 2, 2, 3, 5}, {1, 2, 2, 2, 3, 4, 6});
  // Strict: D <= s <= floor(t/2) = 2 is empty for D = 3.
  EXPECT_EQ(check_stop(t, 3, Policy::Strict).kind, StopKind::NotYet);
  EXPECT_EQ(check_stop(t, 2, Policy::Strict).s, 2);
}

TEST(CheckStop, StrongConditions) {
  auto t = table(6, {1, 2, 2, 2, 2, 2, 4}, {1, 2, 2, 2, 2, 2, 2, 4});
  auto v = check_stop(t, 5);
  EXPECT_EQ(v.kind, StopKind::StrongDimConditions);
  EXPECT_EQ(v.s, 2);
  EXPECT_TRUE(v.strong);
  EXPECT_EQ(v.all_s, (std::vector<int>{2, 3, 4, 5}));
  EXPECT_TRUE(strong_conditions(t, 2));
  EXPECT_FALSE(strong_conditions(t, 3));  // dims_G[6] = 4 != dims_G[2]
  EXPECT_FALSE(strong_conditions(t, 4));  // 2s > t
}

TEST(CheckStop, ZeroDimensionIsEmpty) {
  EXPECT_EQ(check_stop(table(2, {0, 0, 0}, {0, 0, 0, 0}), 2).kind, StopKind::Empty);
}

TEST(CheckStop, NoEqualityMeansNotYet) {
  auto v = check_stop(table(3, {1, 4, 8, 11}, {1, 4, 8, 10, 12}), 3);
  EXPECT_EQ(v.kind, StopKind::NotYet);
  EXPECT_FALSE(v.success());
}

TEST(RankCriterion, Profiles) {
  EXPECT_EQ(rank_criterion(std::vector<int>{1, 4, 9}, 4).kind, StopKind::NotYet);
  auto v = rank_criterion(std::vector<int>{1, 2, 2, 9}, 4);
  EXPECT_EQ(v.kind, StopKind::RankCondition);
  EXPECT_EQ(v.s, 2);
  EXPECT_TRUE(v.s_below_D);
  EXPECT_EQ(rank_criterion(std::vector<int>{1, 2, 2, 9}, 4, Policy::Strict).kind, StopKind::NotYet);
  EXPECT_EQ(rank_criterion(std::vector<int>{0, 0}, 2).kind, StopKind::Empty);
}

TEST(ProjectionDimension, CountsRankOfLeadingColumns) {
  // Rows over T_2 in one variable: two point evaluations at 1 and 2.
  Eigen::MatrixXd K(2, 3);
  K << 1, 1, 1, 1, 2, 4;
  EXPECT_EQ(projection_dimension(K, 1, 0), 1);
  EXPECT_EQ(projection_dimension(K, 1, 1), 2);
  EXPECT_EQ(projection_dimension(K, 1, 2), 2);
  EXPECT_THROW(projection_dimension(K, 1, 3), Error);
}

TEST(Solve, LinearSystem) {
  SolveResult r = solve(load_bench("linear1"));
  ASSERT_TRUE(r.success);
  EXPECT_EQ(r.t, 1);
  ASSERT_EQ(r.roots.size(), 1u);
  EXPECT_NEAR(r.roots[0].coords[0].real(), 1.0, 1e-12);
  EXPECT_TRUE(r.radical_certified);
}

TEST(Solve, TwoPointsBothModes) {
  for (Mode m : {Mode::Real, Mode::Complex}) {
    SolveConfig cfg;
    cfg.mode = m;
    SolveResult r = solve(load_bench("twopoints"), cfg);
    ASSERT_TRUE(r.success);
    ASSERT_EQ(r.roots.size(), 2u);
    std::vector<double> xs = {r.roots[0].coords[0].real(), r.roots[1].coords[0].real()};
    std::sort(xs.begin(), xs.end());
    EXPECT_NEAR(xs[0], -1.0, 1e-10);
    EXPECT_NEAR(xs[1], 1.0, 1e-10);
  }
}

TEST(Solve, EmptyRealVariety) {
  for (const char* name : {"noreal1", "noreal2"}) {
    SolveResult r = solve(load_bench(name));
    EXPECT_TRUE(r.success) << name;
    EXPECT_TRUE(r.empty_certificate) << name;
    EXPECT_TRUE(r.roots.empty());
  }
}

TEST(Solve, ComplexModeKeepsNonRealRoots) {
  SolveConfig cfg;
  cfg.mode = Mode::Complex;
  SolveResult r = solve(load_bench("noreal1"), cfg);
  ASSERT_TRUE(r.success);
  EXPECT_FALSE(r.empty_certificate);
  ASSERT_EQ(r.roots.size(), 2u);
  for (const auto& v : r.roots) EXPECT_NEAR(std::abs(v.coords[0].imag()), 1.0, 1e-10);
}

TEST(Solve, TMaxExhaustionKeepsTables) {
  SolveConfig cfg;
  cfg.t_max = 4;
  SolveResult r = solve(load_bench("cox98"), cfg);
  EXPECT_FALSE(r.success);
  EXPECT_TRUE(r.t_max_exhausted);
  ASSERT_EQ(r.iterations.size(), 2u);
  EXPECT_EQ(r.iterations[0].table.dims_G, (std::vector<int>{1, 4, 8, 11}));
}

TEST(Solve, ConfigValidation) {
  SolveConfig cfg;
  cfg.t_start = 2;
  EXPECT_THROW(solve(load_bench("cox98"), cfg), Error);
  cfg.t_start = 4;
  cfg.t_max = 3;
  EXPECT_THROW(solve(load_bench("cox98"), cfg), Error);
}

TEST(Solve, BothCriteriaReportFirstSuccess) {
  SolveConfig cfg;
  cfg.criterion = Criterion::Both;
  SolveResult r = solve(load_bench("gauss"), cfg);
  ASSERT_TRUE(r.dims_first && r.rank_first);
  EXPECT_LE(r.dims_first->first, r.rank_first->first);
}

// Dims criterion never fires later than the rank criterion.
TEST(Solve, DimsNoLaterThanRank) {
  for (const char* name : {"ex45", "ex46", "twopoints", "cox3"}) {
    SolveConfig cfg;
    cfg.criterion = Criterion::Both;
    SolveResult r = solve(load_bench(name), cfg);
    ASSERT_TRUE(r.dims_first) << name;
    if (r.rank_first) EXPECT_LE(r.dims_first->first, r.rank_first->first) << name;
  }
}

TEST(Solve, RankCriterionAlone) {
  SolveConfig cfg;
  cfg.criterion = Criterion::Rank;
  SolveResult r = solve(load_bench("twopoints"), cfg);
  ASSERT_TRUE(r.success);
  EXPECT_EQ(r.verdict.kind, StopKind::RankCondition);
  EXPECT_EQ(r.roots.size(), 2u);
}

TEST(Solve, NonRealCandidatesAreDiscarded) {
  // (x^2 - 1)(x^2 + 1): the dims test holds before the kernel removes +-i.
  PolySystem sys = parse_system("vars x; x^4 - 1;");
  SolveResult r = solve(sys);
  ASSERT_TRUE(r.success) << r.message;
  EXPECT_EQ(r.roots.size(), 2u);
  for (const auto& v : r.roots) EXPECT_NEAR(std::abs(v.coords[0].real()), 1.0, 1e-10);
}

}  // namespace
}  // namespace realvar
