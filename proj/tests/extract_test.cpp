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

#include "bench.hpp"
#include "realvar/extract.hpp"
#include "realvar/io.hpp"

namespace realvar {
namespace {

using cd = std::complex<double>;

Eigen::MatrixXd evaluation_rows(const std::vector<Eigen::VectorXd>& pts, int s) {
  const int n = static_cast<int>(pts[0].size());
  auto ms = monomials_up_to(n, s);
  Eigen::MatrixXd Y(pts.size(), ms.size());
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = 0; j < ms.size(); ++j)
      Y(i, j) = Polynomial::monomial(ms[j]).evaluate(pts[i]);
  return Y;
}

// Every extracted root must be one of the planted points, each found once.
TEST(ExtractRoots, RecoversPlantedPoints) {
  std::vector<Eigen::VectorXd> pts = {Eigen::Vector3d(1, 0, -1), Eigen::Vector3d(0.5, 2, 1),
                                      Eigen::Vector3d(-1, -1, 0), Eigen::Vector3d(2, 1, 0.25)};
  QuotientBasis qb = select_basis_greedy(evaluation_rows(pts, 3), 3, 3);
  BorderBasis bb = border_basis(qb);
  MultiplicationSystem ms = multiplication_matrices(qb, bb);
  for (std::uint64_t seed : {1u, 2u, 17u}) {
    auto roots = extract_roots(ms, qb, seed);
    ASSERT_EQ(roots.size(), pts.size());
    std::vector<bool> hit(pts.size(), false);
    for (const auto& r : roots) {
      for (std::size_t i = 0; i < pts.size(); ++i)
        if ((r.coords - pts[i].cast<cd>()).cwiseAbs().maxCoeff() < 1e-8) hit[i] = true;
    }
    EXPECT_EQ(std::count(hit.begin(), hit.end(), true), 4) << "seed " << seed;
  }
}

TEST(Verify, RealModeSplitsCandidates) {
  PolySystem sys = parse_system("vars x; x^2 - 1;");
  std::vector<Root> cands(3);
  cands[0].coords = Eigen::VectorXcd::Constant(1, cd(1.0 + 1e-9, 0.0));
  cands[1].coords = Eigen::VectorXcd::Constant(1, cd(0.0, 1.0));
  cands[2].coords = Eigen::VectorXcd::Constant(1, cd(0.3, 0.0));
  Verification v = verify_roots(cands, sys, Mode::Real);
  ASSERT_EQ(v.accepted.size(), 1u);
  // Gauss-Newton polish lands on the exact root.
  EXPECT_NEAR(v.accepted[0].coords[0].real(), 1.0, 1e-14);
  EXPECT_TRUE(v.accepted[0].is_real);
  ASSERT_EQ(v.rejected.size(), 2u);
  EXPECT_FALSE(v.rejected[0].is_real);
  EXPECT_TRUE(v.rejected[1].is_real);
}

TEST(Verify, ComplexModeKeepsEverything) {
  PolySystem sys = parse_system("vars x; x^2 + 1;");
  std::vector<Root> cands(1);
  cands[0].coords = Eigen::VectorXcd::Constant(1, cd(0.0, 1.0 + 1e-7));
  Verification v = verify_roots(cands, sys, Mode::Complex);
  ASSERT_EQ(v.accepted.size(), 1u);
  EXPECT_LT(v.accepted[0].residual, 1e-12);
}

TEST(Residual, ScaledResidualOfExactRoot) {
  PolySystem sys = parse_system("vars x y; x*y - 6; x + y - 5;");
  EXPECT_NEAR(scaled_residual(sys, Eigen::Vector2cd(2, 3)), 0.0, 1e-15);
  // x + y - 5 = 1 at (2, 4), scaled by its l1 norm 7 and max(1, 4)^1.
  EXPECT_NEAR(scaled_residual(sys, Eigen::Vector2cd(2, 4)), std::max(2.0 / (7 * 16), 1.0 / 28), 1e-12);
}

TEST(Companion, RealRootsOfKnownPolynomials) {
  // (x - 1)(x + 2)(x^2 + 1)
  Polynomial p = parse_polynomial("(x - 1)*(x + 2)*(x^2 + 1)", {"x"});
  auto r = bench::companion_real_roots(p);
  ASSERT_EQ(r.size(), 2u);
  EXPECT_NEAR(r[0], -2.0, 1e-12);
  EXPECT_NEAR(r[1], 1.0, 1e-12);
  EXPECT_THROW(bench::companion_real_roots(parse_polynomial("x*y", {"x", "y"})), Error);
}

// The oracle generator must plant exactly the roots it claims.
TEST(OracleSystems, PlantedRootsAreZeros) {
  auto systems = bench::oracle_systems(1234, 12);
  ASSERT_EQ(systems.size(), 12u);
  for (const auto& o : systems) {
    EXPECT_GE(o.roots.size(), 1u);
    EXPECT_LE(o.roots.size(), 4u);
    EXPECT_LE(o.system.nvars(), 3);
    for (const auto& v : o.roots)
      for (const auto& h : o.system.generators()) EXPECT_NEAR(h.evaluate(v), 0.0, 1e-9);
    if (o.univariate) EXPECT_EQ(bench::companion_real_roots(o.system[0]).size(), o.roots.size());
  }
  // Same seed, same family.
  auto again = bench::oracle_systems(1234, 12);
  for (std::size_t i = 0; i < systems.size(); ++i)
    EXPECT_EQ(format_system(systems[i].system), format_system(again[i].system));
}

}  // namespace
}  // namespace realvar
