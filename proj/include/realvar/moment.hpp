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

#include <memory>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "realvar/numla.hpp"
#include "realvar/polycore.hpp"

namespace realvar {

/// L restricted to polynomials of degree <= order, stored as y_alpha = L(x^alpha)
/// over the graded monomial order.
struct LinearFunctional {
  int order = 0;
  int n = 0;
  Eigen::VectorXd values;

  LinearFunctional() = default;
  LinearFunctional(int n, int order, Eigen::VectorXd values);
  static LinearFunctional zero(int n, int order);
  /// The evaluation functional p -> p(v), truncated to the given order.
  static LinearFunctional evaluation(const Eigen::VectorXd& v, int order);

  double apply(const Polynomial& p) const;
  /// pi_s: keep the coordinates of degree <= s.
  LinearFunctional truncate(int s) const;
  bool is_zero() const { return values.size() == 0 || values.isZero(0.0); }
};

enum class Mode { Real, Complex };

/// Index table for M_s: pos(a, b) is the position of x^(a+b) in T_{order}.
class MomentLayout {
 public:
  MomentLayout(int n, int s, int order);
  int n() const { return n_; }
  int s() const { return s_; }
  int size() const { return static_cast<int>(pos_.rows()); }
  int pos(int a, int b) const { return pos_(a, b); }
  /// Builds the Hankel-structured matrix (y_{a+b}) for coordinates y over T_order.
  Eigen::MatrixXd build(const Eigen::Ref<const Eigen::VectorXd>& y) const;

 private:
  int n_, s_, order_;
  Eigen::MatrixXi pos_;
};

/// M_s(L), entries y_{alpha+beta} for |alpha|, |beta| <= s. Requires 2s <= order.
Eigen::MatrixXd moment_matrix(const LinearFunctional& L, int s);

/// S_t = { x^alpha g : |alpha| <= floor(t/2), g in C }, ordered by g then alpha.
std::vector<Polynomial> build_St(const std::vector<Polynomial>& kernel_polys, int t);

/// Coefficient matrix of build_St over T_t, built directly without polynomial objects.
Eigen::MatrixXd st_matrix(const std::vector<Polynomial>& kernel_polys, int n, int t);

/// The G_t / G_t^+ pair at order t.
///
/// G_t = [h_rows; s_rows] over T_t. g_plus is only materialized on request
/// because its size grows like (n+1) * rows(G_t).
struct GtSystem {
  int t = 0;
  int n = 0;
  Mode mode = Mode::Real;
  Eigen::MatrixXd h_rows;
  Eigen::MatrixXd s_rows;
  /// Optional orthonormal rows spanning ker H_t, reused when present.
  std::optional<Eigen::MatrixXd> h_kernel;

  Eigen::MatrixXd g_rows() const;
  /// (H_t u S_t)^+ over T_{t+1}: rows of G_t zero-padded, then x_1 G_t, ..., x_n G_t.
  Eigen::MatrixXd g_plus() const;
};

GtSystem assemble_G(const PolySystem& sys, int t, const std::vector<Polynomial>& kernel_polys,
                    Mode mode);

/// Orthonormal rows spanning ker G_t over T_t, computed as ker H_t followed by
/// the kernel of S_t restricted to it.
Eigen::MatrixXd kernel_G(const GtSystem& gt, const RankTolerance& tol = {});

/// Orthonormal rows spanning ker G_t^+ over T_{t+1}, derived from ker G_t:
/// y is in the kernel iff pi_t(y) and each shift y_{. + e_i} lie in ker G_t.
Eigen::MatrixXd kernel_Gplus(const GtSystem& gt, const Eigen::MatrixXd& kernel_g,
                             const RankTolerance& tol = {});

/// Same kernel computed from the materialized g_plus matrix.
Eigen::MatrixXd kernel_Gplus_direct(const GtSystem& gt, const RankTolerance& tol = {});

/// rank M_s(L) == rank M_{s-1}(L).
bool flat_extension_check(const LinearFunctional& L, int s, const RankTolerance& tol = {});

}  // namespace realvar
