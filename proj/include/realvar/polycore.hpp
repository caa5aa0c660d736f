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

#include <compare>
#include <complex>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <map>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include <Eigen/Dense>

namespace realvar {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Exponent vector alpha in N^n together with its total degree |alpha|.
///
/// Ordering is graded: lower total degree first, ties broken so that the
/// first differing exponent that is *larger* comes first. For two variables
/// this lists 1, x1, x2, x1^2, x1*x2, x2^2, ... The order is compatible with
/// multiplication (a < b implies x_i a < x_i b).
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<int> exponents);
  Monomial(std::initializer_list<int> exponents)
      : Monomial(std::vector<int>(exponents)) {}

  /// The constant monomial 1 in n variables.
  static Monomial one(int n) { return Monomial(std::vector<int>(n, 0)); }
  /// The variable x_i (0-based) in n variables.
  static Monomial variable(int n, int i);

  int nvars() const { return static_cast<int>(exps_.size()); }
  int degree() const { return degree_; }
  int operator[](int i) const { return exps_[i]; }
  const std::vector<int>& exponents() const { return exps_; }
  bool is_one() const { return degree_ == 0; }

  Monomial operator*(const Monomial& other) const;
  /// x_i * this.
  Monomial times_var(int i) const;
  /// True iff this divides other.
  bool divides(const Monomial& other) const;
  /// this / other; requires other.divides(*this).
  Monomial operator/(const Monomial& other) const;

  std::strong_ordering operator<=>(const Monomial& other) const;
  bool operator==(const Monomial& other) const { return exps_ == other.exps_; }

  /// Renders e.g. "x1^2*x3" using the given variable names (defaults x1..xn).
  std::string to_string(const std::vector<std::string>& names = {}) const;

 private:
  std::vector<int> exps_;
  int degree_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

/// All monomials of degree <= t in n variables, in graded order.
/// Length is C(n+t, t).
std::vector<Monomial> monomials_up_to(int n, int t);

/// Number of monomials of degree <= t in n variables, C(n+t, t).
std::size_t count_monomials(int n, int t);

/// Column indexing of T^n_t in graded order. Because the order is graded,
/// the first count_monomials(n, s) columns are exactly T^n_s for s <= t.
class MonomialIndex {
 public:
  MonomialIndex() = default;
  MonomialIndex(int n, int t);

  int nvars() const { return n_; }
  int order() const { return t_; }
  std::size_t size() const { return monos_.size(); }
  const Monomial& operator[](std::size_t i) const { return monos_[i]; }
  const std::vector<Monomial>& monomials() const { return monos_; }
  /// Index of m, or -1 when deg m > order.
  int find(const Monomial& m) const;
  int at(const Monomial& m) const;
  /// Number of leading columns spanning T^n_s.
  std::size_t prefix(int s) const { return count_monomials(n_, s); }

 private:
  int n_ = 0;
  int t_ = -1;
  std::vector<Monomial> monos_;
  std::unordered_map<Monomial, int, MonomialHash> pos_;
};

/// Sparse real polynomial keyed by monomial.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, double>;

  Polynomial() = default;
  explicit Polynomial(int n) : n_(n) {}
  Polynomial(int n, TermMap terms);

  static Polynomial constant(int n, double c);
  static Polynomial monomial(const Monomial& m, double c = 1.0);
  static Polynomial variable(int n, int i) {
    return monomial(Monomial::variable(n, i));
  }
  /// Inverse of coefficient_vector: coefficients over the given index.
  static Polynomial from_coefficients(const MonomialIndex& index,
                                      const Eigen::Ref<const Eigen::VectorXd>& v,
                                      double drop_tol = 0.0);

  int nvars() const { return n_; }
  /// Maximum total degree over stored terms; -1 for the zero polynomial.
  int degree() const;
  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }
  double coefficient(const Monomial& m) const;
  double max_abs_coefficient() const;
  double l1_norm() const;
  /// Coefficient of the largest monomial in graded order.
  double leading_coefficient() const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator*(double c) const;
  Polynomial times(const Monomial& m) const;
  bool operator==(const Polynomial& o) const = default;

  /// Drops terms with |c| <= rel_tol * max|c|.
  Polynomial pruned(double rel_tol = 1e-12) const;

  /// Coefficient vector over T^n_t in graded order. Requires deg <= t.
  Eigen::VectorXd coefficient_vector(int t) const;
  Eigen::VectorXd coefficient_vector(const MonomialIndex& index) const;

  double evaluate(const Eigen::Ref<const Eigen::VectorXd>& x) const;
  std::complex<double> evaluate(const Eigen::Ref<const Eigen::VectorXcd>& x) const;
  /// Partial derivative with respect to x_i.
  Polynomial derivative(int i) const;

  std::string to_string(const std::vector<std::string>& names = {}) const;

 private:
  void add_term(const Monomial& m, double c);

  int n_ = 0;
  TermMap terms_;
};

/// Input system h_1..h_m in n variables. D is the maximum generator degree.
class PolySystem {
 public:
  PolySystem(int n, std::vector<Polynomial> generators,
             std::vector<std::string> names = {});

  int nvars() const { return n_; }
  int max_degree() const { return max_degree_; }
  std::size_t size() const { return gens_.size(); }
  const std::vector<Polynomial>& generators() const { return gens_; }
  const Polynomial& operator[](std::size_t j) const { return gens_[j]; }
  const std::vector<std::string>& variable_names() const { return names_; }

 private:
  int n_;
  std::vector<Polynomial> gens_;
  std::vector<std::string> names_;
  int max_degree_ = 0;
};

/// One element x^alpha * h_j of the prolongation set H_t, with provenance.
struct Prolongation {
  Monomial multiplier;
  std::size_t generator = 0;
  Polynomial poly;
};

/// H_t = { x^alpha h_j : |alpha| + deg h_j <= t }, ordered by generator then
/// multiplier. Throws when t < D.
std::vector<Prolongation> prolong_generators(const PolySystem& sys, int t);

/// Coefficient matrix of a polynomial list over an index (one row each).
Eigen::MatrixXd coefficient_matrix(const std::vector<Polynomial>& polys,
                                   const MonomialIndex& index);
Eigen::MatrixXd coefficient_matrix(const std::vector<Prolongation>& rows,
                                   const MonomialIndex& index);

/// S^+ = S, x_1 S, ..., x_n S (input order first, then by variable).
std::vector<Polynomial> one_step_prolongation(const std::vector<Polynomial>& S);

using MonomialSet = std::vector<Monomial>;

/// Sorts into graded order and removes duplicates.
MonomialSet normalized(MonomialSet B);
/// B^+ as a monomial set.
MonomialSet prolong_monomials(const MonomialSet& B);
/// Border monomials B^+ \ B, in graded order.
MonomialSet border(const MonomialSet& B);
bool is_division_closed(const MonomialSet& B);
bool is_connected_to_1(const MonomialSet& B);

}  // namespace realvar
