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

#include "realvar/polycore.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>

namespace realvar {

Monomial::Monomial(std::vector<int> exponents) : exps_(std::move(exponents)) {
  for (int e : exps_) {
    if (e < 0) throw Error("negative exponent in monomial");
    degree_ += e;
  }
}

Monomial Monomial::variable(int n, int i) {
  std::vector<int> e(n, 0);
  e.at(i) = 1;
  return Monomial(std::move(e));
}

Monomial Monomial::operator*(const Monomial& other) const {
  std::vector<int> e(exps_);
  for (std::size_t i = 0; i < e.size(); ++i) e[i] += other.exps_[i];
  return Monomial(std::move(e));
}

Monomial Monomial::times_var(int i) const {
  Monomial m(*this);
  ++m.exps_[i];
  ++m.degree_;
  return m;
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

Monomial Monomial::operator/(const Monomial& other) const {
  std::vector<int> e(exps_);
  for (std::size_t i = 0; i < e.size(); ++i) e[i] -= other.exps_[i];
  return Monomial(std::move(e));
}

std::strong_ordering Monomial::operator<=>(const Monomial& other) const {
  if (degree_ != other.degree_) return degree_ <=> other.degree_;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] != other.exps_[i]) return other.exps_[i] <=> exps_[i];
  }
  return std::strong_ordering::equal;
}

namespace {

std::string var_name(const std::vector<std::string>& names, int i) {
  if (i < static_cast<int>(names.size())) return names[i];
  return "x" + std::to_string(i + 1);
}

}  // namespace

std::string Monomial::to_string(const std::vector<std::string>& names) const {
  if (degree_ == 0) return "1";
  std::string out;
  for (int i = 0; i < nvars(); ++i) {
    if (exps_[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += var_name(names, i);
    if (exps_[i] > 1) out += '^' + std::to_string(exps_[i]);
  }
  return out;
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (int e : m.exponents()) {
    h ^= static_cast<std::size_t>(e) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

namespace {

// Appends all exponent vectors of exact degree d, largest-first in the
// tie-break order (so the result is already sorted).
void exact_degree(int n, int d, int var, std::vector<int>& cur,
                  std::vector<Monomial>& out) {
  if (var == n - 1) {
    cur[var] = d;
    out.emplace_back(cur);
    cur[var] = 0;
    return;
  }
  for (int e = d; e >= 0; --e) {
    cur[var] = e;
    exact_degree(n, d - e, var + 1, cur, out);
  }
  cur[var] = 0;
}

}  // namespace

std::vector<Monomial> monomials_up_to(int n, int t) {
  if (n < 1 || t < 0) throw Error("monomials_up_to: need n >= 1 and t >= 0");
  std::vector<Monomial> out;
  out.reserve(count_monomials(n, t));
  std::vector<int> cur(n, 0);
  for (int d = 0; d <= t; ++d) exact_degree(n, d, 0, cur, out);
  return out;
}

std::size_t count_monomials(int n, int t) {
  if (t < 0) return 0;
  // C(n+t, t) computed incrementally; exact for the sizes used here.
  std::size_t c = 1;
  for (int k = 1; k <= t; ++k) c = c * static_cast<std::size_t>(n + k) / k;
  return c;
}

MonomialIndex::MonomialIndex(int n, int t)
    : n_(n), t_(t), monos_(monomials_up_to(n, t)) {
  pos_.reserve(monos_.size());
  for (std::size_t i = 0; i < monos_.size(); ++i)
    pos_.emplace(monos_[i], static_cast<int>(i));
}

int MonomialIndex::find(const Monomial& m) const {
  auto it = pos_.find(m);
  return it == pos_.end() ? -1 : it->second;
}

int MonomialIndex::at(const Monomial& m) const {
  int i = find(m);
  if (i < 0) throw Error("monomial " + m.to_string() + " outside index of order " +
                         std::to_string(t_));
  return i;
}

Polynomial::Polynomial(int n, TermMap terms) : n_(n) {
  for (auto& [m, c] : terms) add_term(m, c);
}

void Polynomial::add_term(const Monomial& m, double c) {
  if (m.nvars() != n_) throw Error("monomial variable count mismatch");
  if (c == 0.0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0.0) terms_.erase(it);
  }
}

Polynomial Polynomial::constant(int n, double c) {
  Polynomial p(n);
  p.add_term(Monomial::one(n), c);
  return p;
}

Polynomial Polynomial::monomial(const Monomial& m, double c) {
  Polynomial p(m.nvars());
  p.add_term(m, c);
  return p;
}

Polynomial Polynomial::from_coefficients(const MonomialIndex& index,
                                         const Eigen::Ref<const Eigen::VectorXd>& v,
                                         double drop_tol) {
  if (static_cast<std::size_t>(v.size()) != index.size())
    throw Error("coefficient vector length does not match index");
  Polynomial p(index.nvars());
  double scale = v.size() ? v.cwiseAbs().maxCoeff() : 0.0;
  for (std::size_t i = 0; i < index.size(); ++i) {
    if (std::abs(v[i]) > drop_tol * scale) p.add_term(index[i], v[i]);
  }
  return p;
}

int Polynomial::degree() const {
  if (terms_.empty()) return -1;
  return terms_.rbegin()->first.degree();
}

double Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? 0.0 : it->second;
}

double Polynomial::max_abs_coefficient() const {
  double r = 0.0;
  for (const auto& [m, c] : terms_) r = std::max(r, std::abs(c));
  return r;
}

double Polynomial::l1_norm() const {
  double r = 0.0;
  for (const auto& [m, c] : terms_) r += std::abs(c);
  return r;
}

double Polynomial::leading_coefficient() const {
  return terms_.empty() ? 0.0 : terms_.rbegin()->second;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  Polynomial r(*this);
  for (const auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  Polynomial r(*this);
  for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
  return r;
}

Polynomial Polynomial::operator-() const { return *this * -1.0; }

Polynomial Polynomial::operator*(const Polynomial& o) const {
  Polynomial r(n_);
  for (const auto& [m1, c1] : terms_)
    for (const auto& [m2, c2] : o.terms_) r.add_term(m1 * m2, c1 * c2);
  return r;
}

Polynomial Polynomial::operator*(double c) const {
  Polynomial r(n_);
  if (c == 0.0) return r;
  for (const auto& [m, v] : terms_) r.terms_.emplace(m, v * c);
  return r;
}

Polynomial Polynomial::times(const Monomial& mono) const {
  Polynomial r(n_);
  for (const auto& [m, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), m * mono, c);
  return r;
}

Polynomial Polynomial::pruned(double rel_tol) const {
  double scale = max_abs_coefficient();
  Polynomial r(n_);
  for (const auto& [m, c] : terms_)
    if (std::abs(c) > rel_tol * scale) r.terms_.emplace(m, c);
  return r;
}

Eigen::VectorXd Polynomial::coefficient_vector(int t) const {
  return coefficient_vector(MonomialIndex(n_, t));
}

Eigen::VectorXd Polynomial::coefficient_vector(const MonomialIndex& index) const {
  Eigen::VectorXd v = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(index.size()));
  for (const auto& [m, c] : terms_) v[index.at(m)] = c;
  return v;
}

double Polynomial::evaluate(const Eigen::Ref<const Eigen::VectorXd>& x) const {
  double s = 0.0;
  for (const auto& [m, c] : terms_) {
    double term = c;
    for (int i = 0; i < n_; ++i)
      for (int e = 0; e < m[i]; ++e) term *= x[i];
    s += term;
  }
  return s;
}

std::complex<double> Polynomial::evaluate(const Eigen::Ref<const Eigen::VectorXcd>& x) const {
  std::complex<double> s = 0.0;
  for (const auto& [m, c] : terms_) {
    std::complex<double> term = c;
    for (int i = 0; i < n_; ++i)
      for (int e = 0; e < m[i]; ++e) term *= x[i];
    s += term;
  }
  return s;
}

Polynomial Polynomial::derivative(int i) const {
  Polynomial r(n_);
  for (const auto& [m, c] : terms_) {
    if (m[i] == 0) continue;
    std::vector<int> e = m.exponents();
    double k = e[i];
    --e[i];
    r.add_term(Monomial(std::move(e)), c * k);
  }
  return r;
}

std::string Polynomial::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  os.precision(17);
  bool first = true;
  // Highest degree first reads more naturally.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    double c = it->second;
    const Monomial& m = it->first;
    if (first) {
      if (c < 0) os << "- ";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    double a = std::abs(c);
    if (m.is_one()) {
      os << a;
    } else if (a == 1.0) {
      os << m.to_string(names);
    } else {
      os << a << '*' << m.to_string(names);
    }
    first = false;
  }
  return os.str();
}

PolySystem::PolySystem(int n, std::vector<Polynomial> generators,
                       std::vector<std::string> names)
    : n_(n), gens_(std::move(generators)), names_(std::move(names)) {
  if (n_ < 1) throw Error("polynomial system needs at least one variable");
  if (gens_.empty()) throw Error("polynomial system needs at least one generator");
  for (const auto& g : gens_) {
    if (g.nvars() != n_) throw Error("generator variable count mismatch");
    if (g.is_zero()) throw Error("zero generator in polynomial system");
    max_degree_ = std::max(max_degree_, g.degree());
  }
  if (names_.empty())
    for (int i = 0; i < n_; ++i) names_.push_back("x" + std::to_string(i + 1));
  if (static_cast<int>(names_.size()) != n_) throw Error("variable name count mismatch");
}

std::vector<Prolongation> prolong_generators(const PolySystem& sys, int t) {
  if (t < sys.max_degree())
    throw Error("prolongation order t=" + std::to_string(t) +
                " is below the maximum generator degree " +
                std::to_string(sys.max_degree()));
  std::vector<Prolongation> out;
  for (std::size_t j = 0; j < sys.size(); ++j) {
    const Polynomial& h = sys[j];
    for (const Monomial& a : monomials_up_to(sys.nvars(), t - h.degree()))
      out.push_back({a, j, h.times(a)});
  }
  return out;
}

Eigen::MatrixXd coefficient_matrix(const std::vector<Polynomial>& polys,
                                   const MonomialIndex& index) {
  Eigen::MatrixXd A = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(polys.size()),
                                            static_cast<Eigen::Index>(index.size()));
  for (std::size_t r = 0; r < polys.size(); ++r)
    for (const auto& [m, c] : polys[r].terms()) A(r, index.at(m)) = c;
  return A;
}

Eigen::MatrixXd coefficient_matrix(const std::vector<Prolongation>& rows,
                                   const MonomialIndex& index) {
  Eigen::MatrixXd A = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(rows.size()),
                                            static_cast<Eigen::Index>(index.size()));
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (const auto& [m, c] : rows[r].poly.terms()) A(r, index.at(m)) = c;
  return A;
}

std::vector<Polynomial> one_step_prolongation(const std::vector<Polynomial>& S) {
  if (S.empty()) throw Error("one_step_prolongation: empty input");
  int n = S.front().nvars();
  std::vector<Polynomial> out(S);
  out.reserve(S.size() * (n + 1));
  for (int i = 0; i < n; ++i)
    for (const auto& p : S) out.push_back(p.times(Monomial::variable(n, i)));
  return out;
}

MonomialSet normalized(MonomialSet B) {
  std::sort(B.begin(), B.end());
  B.erase(std::unique(B.begin(), B.end()), B.end());
  return B;
}

MonomialSet prolong_monomials(const MonomialSet& B) {
  MonomialSet out(B);
  for (const auto& m : B)
    for (int i = 0; i < m.nvars(); ++i) out.push_back(m.times_var(i));
  return normalized(std::move(out));
}

MonomialSet border(const MonomialSet& B) {
  if (B.empty()) throw Error("border: empty monomial set");
  MonomialSet base = normalized(B);
  MonomialSet plus = prolong_monomials(base);
  MonomialSet out;
  std::set_difference(plus.begin(), plus.end(), base.begin(), base.end(),
                      std::back_inserter(out));
  return out;
}

bool is_division_closed(const MonomialSet& B) {
  std::set<Monomial> s(B.begin(), B.end());
  for (const auto& m : s)
    for (int i = 0; i < m.nvars(); ++i)
      if (m[i] > 0) {
        std::vector<int> e = m.exponents();
        --e[i];
        if (!s.count(Monomial(std::move(e)))) return false;
      }
  return true;
}

bool is_connected_to_1(const MonomialSet& B) {
  if (B.empty()) return false;
  std::set<Monomial> s(B.begin(), B.end());
  int n = B.front().nvars();
  if (!s.count(Monomial::one(n))) return false;
  // Fast path: every m != 1 has a predecessor m / x_i in B.
  bool fast = true;
  for (const auto& m : s) {
    if (m.is_one()) continue;
    bool has = false;
    for (int i = 0; i < n && !has; ++i)
      if (m[i] > 0) {
        std::vector<int> e = m.exponents();
        --e[i];
        has = s.count(Monomial(std::move(e))) > 0;
      }
    if (!has) {
      fast = false;
      break;
    }
  }
  if (fast) return true;
  // Full chain search: monomials reachable from 1 by single-variable steps
  // that stay inside B.
  std::set<Monomial> seen{Monomial::one(n)};
  std::deque<Monomial> queue{Monomial::one(n)};
  while (!queue.empty()) {
    Monomial m = queue.front();
    queue.pop_front();
    for (int i = 0; i < n; ++i) {
      Monomial next = m.times_var(i);
      if (s.count(next) && seen.insert(next).second) queue.push_back(next);
    }
  }
  return seen.size() == s.size();
}

}  // namespace realvar
