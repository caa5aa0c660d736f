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

#pragma once

#include <map>
#include <vector>

#include <Eigen/Dense>

#include "realvar/numla.hpp"
#include "realvar/polycore.hpp"

namespace realvar {

/// Basis B of the quotient together with the matrix Y it was selected from.
/// Y has N rows (a basis of the projected dual space) and one column per
/// monomial of T_s in graded order.
struct QuotientBasis {
  int n = 0;
  int s = 0;
  MonomialSet monomials;
  Eigen::MatrixXd Y;
  /// Ratio of extreme singular values of the columns of Y indexed by B.
  double condition = 0.0;
  /// Rank threshold used when selecting B.
  double threshold = 0.0;
  std::vector<int> columns() const;
};

/// Scans T_{s-1} in graded order and keeps a monomial when its Y column is
/// independent of the columns kept so far. Throws when the result is not
/// connected to 1.
QuotientBasis select_basis_greedy(const Eigen::MatrixXd& Y, int n, int s,
                                  const RankTolerance& tol = {});

/// B = pivot columns of the Gauss-Jordan form of Y restricted to T_{s-1}.
QuotientBasis select_basis_pivots(const Eigen::MatrixXd& Y, int n, int s,
                                  const RankTolerance& tol = {});

struct BorderBasis {
  MonomialSet border;                 // graded order
  std::vector<Eigen::VectorXd> phi;   // coordinates of phi(m) over B, per border monomial
  std::vector<double> residuals;      // least-squares residual per border monomial
  double max_residual = 0.0;

  /// f_m = m - phi(m).
  Polynomial element(std::size_t k, const MonomialSet& B) const;
  std::vector<Polynomial> elements(const MonomialSet& B) const;
  /// Index of m in border, or -1.
  int find(const Monomial& m) const;
};

class QuotientError : public Error {
 public:
  using Error::Error;
};

/// phi(m) for m in the border of B by least squares on the columns of Y.
BorderBasis border_basis(const QuotientBasis& qb, const RankTolerance& tol = {});

struct MultiplicationSystem {
  std::vector<Eigen::MatrixXd> matrices;  // X_1..X_n, |B| x |B|
  double commutativity_error = 0.0;
  double max_norm() const;
};

MultiplicationSystem multiplication_matrices(const QuotientBasis& qb, const BorderBasis& bb);

/// max_{i,j} max |X_i X_j - X_j X_i|.
double commutativity_error(const std::vector<Eigen::MatrixXd>& X);

}  // namespace realvar
