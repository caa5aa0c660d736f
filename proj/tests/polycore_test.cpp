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

#include <algorithm>
#include <random>

#include <gtest/gtest.h>

#include "realvar/polycore.hpp"

namespace realvar {
namespace {

Polynomial random_poly(std::mt19937_64& rng, int n, int deg) {
  std::uniform_int_distribution<int> c(-3, 3);
  Polynomial p(n);
  for (const auto& m : monomials_up_to(n, deg))
    if (int k = c(rng)) p = p + Polynomial::monomial(m, k);
  return p;
}

Eigen::VectorXd random_point(std::mt19937_64& rng, int n) {
  std::uniform_real_distribution<double> u(-1.5, 1.5);
  Eigen::VectorXd x(n);
  for (int i = 0; i < n; ++i) x[i] = u(rng);
  return x;
}

TEST(Monomial, GradedOrderInTwoVariables) {
  auto ms = monomials_up_to(2, 2);
  std::vector<std::string> names;
  for (const auto& m : ms) names.push_back(m.to_string());
  EXPECT_EQ(names, (std::vector<std::string>{"1", "x1", "x2", "x1^2", "x1*x2", "x2^2"}));
}

TEST(Monomial, CountMatchesBinomial) {
  // C(n+t, t) by the multiplicative formula, independent of the enumerator.
  for (int n = 1; n <= 5; ++n)
    for (int t = 0; t <= 6; ++t) {
      std::size_t c = 1;
      for (int i = 1; i <= t; ++i) c = c * (n + i) / i;
      EXPECT_EQ(count_monomials(n, t), c);
      EXPECT_EQ(monomials_up_to(n, t).size(), c);
    }
}

TEST(Monomial, OrderIsCompatibleWithMultiplication) {
  auto ms = monomials_up_to(3, 3);
  for (const auto& a : ms)
    for (const auto& b : ms) {
      if (!(a < b)) continue;
      for (int i = 0; i < 3; ++i) EXPECT_LT(a.times_var(i), b.times_var(i));
    }
}

TEST(Monomial, DivisionInvertsMultiplication) {
  Monomial a{2, 0, 1}, b{1, 3, 0};
  Monomial ab = a * b;
  EXPECT_TRUE(a.divides(ab));
  EXPECT_EQ(ab / a, b);
  EXPECT_FALSE(ab.divides(a));
  EXPECT_EQ(ab.degree(), 7);
}

TEST(MonomialIndex, PrefixIsLowerDegreeBlock) {
  MonomialIndex idx(3, 4);
  for (int s = 0; s <= 4; ++s)
    for (std::size_t i = 0; i < idx.size(); ++i)
      EXPECT_EQ(static_cast<int>(i) < static_cast<int>(idx.prefix(s)), idx[i].degree() <= s);
  EXPECT_EQ(idx.find(Monomial{5, 0, 0}), -1);
  EXPECT_EQ(idx[idx.at(Monomial{1, 2, 1})], (Monomial{1, 2, 1}));
}

TEST(Polynomial, ArithmeticAgreesWithEvaluation) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 1 + trial % 3;
    Polynomial p = random_poly(rng, n, 3), q = random_poly(rng, n, 2);
    Eigen::VectorXd x = random_point(rng, n);
    const double px = p.evaluate(x), qx = q.evaluate(x);
    EXPECT_NEAR((p * q).evaluate(x), px * qx, 1e-9 * (1 + std::abs(px * qx)));
    EXPECT_NEAR((p + q).evaluate(x), px + qx, 1e-12 * (1 + std::abs(px) + std::abs(qx)));
    EXPECT_NEAR((p - q).evaluate(x), px - qx, 1e-12 * (1 + std::abs(px) + std::abs(qx)));
    EXPECT_NEAR((p * 2.5).evaluate(x), 2.5 * px, 1e-12 * (1 + std::abs(px)));
  }
}

TEST(Polynomial, DerivativeMatchesCentralDifference) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 1 + trial % 3;
    Polynomial p = random_poly(rng, n, 4);
    Eigen::VectorXd x = random_point(rng, n);
    for (int i = 0; i < n; ++i) {
      const double h = 1e-5;
      Eigen::VectorXd xp = x, xm = x;
      xp[i] += h;
      xm[i] -= h;
      const double fd = (p.evaluate(xp) - p.evaluate(xm)) / (2 * h);
      EXPECT_NEAR(p.derivative(i).evaluate(x), fd, 1e-5 * (1 + std::abs(fd)));
    }
  }
}

TEST(Polynomial, ComplexEvaluationExtendsReal) {
  std::mt19937_64 rng(3);
  Polynomial p = random_poly(rng, 2, 3);
  Eigen::VectorXd x = random_point(rng, 2);
  EXPECT_NEAR(std::abs(p.evaluate(Eigen::VectorXcd(x.cast<std::complex<double>>())) - p.evaluate(x)), 0.0,
              1e-12);
}

TEST(Polynomial, CoefficientVectorRoundTrip) {
  std::mt19937_64 rng(5);
  Polynomial p = random_poly(rng, 3, 3);
  MonomialIndex idx(3, 4);
  EXPECT_EQ(Polynomial::from_coefficients(idx, p.coefficient_vector(idx)), p);
  // Graded order: the first count_monomials(n, 3) entries hold everything.
  Eigen::VectorXd v = p.coefficient_vector(4);
  EXPECT_TRUE(v.tail(v.size() - count_monomials(3, 3)).isZero(0.0));
}

TEST(Polynomial, ZeroAndDegree) {
  Polynomial z(2);
  EXPECT_TRUE(z.is_zero());
  EXPECT_EQ(z.degree(), -1);
  Polynomial p = Polynomial::variable(2, 0) * Polynomial::variable(2, 1) - Polynomial::variable(2, 0);
  EXPECT_EQ(p.degree(), 2);
  EXPECT_TRUE((p - p).is_zero());
}

TEST(PolySystem, DegreeAndProlongationCount) {
  // h1 of degree 2, h2 of degree 3 in two variables at t = 4:
  // |T_2| + |T_1| multipliers.
  Polynomial x = Polynomial::variable(2, 0), y = Polynomial::variable(2, 1);
  PolySystem sys(2, {x * x - y, x * y * y + Polynomial::constant(2, 1.0)});
  EXPECT_EQ(sys.max_degree(), 3);
  auto H = prolong_generators(sys, 4);
  EXPECT_EQ(H.size(), count_monomials(2, 2) + count_monomials(2, 1));
  for (const auto& h : H) {
    EXPECT_LE(h.poly.degree(), 4);
    EXPECT_EQ(h.poly, sys[h.generator].times(h.multiplier));
  }
  EXPECT_THROW(prolong_generators(sys, 2), Error);
}

TEST(PolySystem, OneStepProlongationOrder) {
  Polynomial x = Polynomial::variable(2, 0), y = Polynomial::variable(2, 1);
  auto P = one_step_prolongation({x - y});
  ASSERT_EQ(P.size(), 3u);
  EXPECT_EQ(P[0], x - y);
  EXPECT_EQ(P[1], x * (x - y));
  EXPECT_EQ(P[2], y * (x - y));
}

TEST(MonomialSets, ClosureAndConnectedness) {
  MonomialSet staircase = {Monomial{0, 0}, Monomial{1, 0}, Monomial{0, 1}, Monomial{2, 0}};
  EXPECT_TRUE(is_division_closed(staircase));
  EXPECT_TRUE(is_connected_to_1(staircase));

  // {1, x1^2}: not division-closed (x1 missing), and x1^2 is not reached by a single step.
  MonomialSet gap = {Monomial{0, 0}, Monomial{2, 0}};
  EXPECT_FALSE(is_division_closed(gap));
  EXPECT_FALSE(is_connected_to_1(gap));

  // {1, x1, x1*x2}: connected to 1 through x1 but x2 is missing.
  MonomialSet connected = {Monomial{0, 0}, Monomial{1, 0}, Monomial{1, 1}};
  EXPECT_FALSE(is_division_closed(connected));
  EXPECT_TRUE(is_connected_to_1(connected));

  EXPECT_FALSE(is_connected_to_1({Monomial{1, 0}}));
}

TEST(MonomialSets, BorderIsProlongationMinusSet) {
  MonomialSet B = {Monomial{0, 0}, Monomial{1, 0}};
  MonomialSet want = {Monomial{0, 1}, Monomial{2, 0}, Monomial{1, 1}};
  EXPECT_EQ(border(B), normalized(want));
  MonomialSet plus = prolong_monomials(B);
  EXPECT_EQ(plus.size(), B.size() + want.size());
}

}  // namespace
}  // namespace realvar
