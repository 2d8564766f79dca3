// Copyright 2026 The activeres Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ACTIVERES_LP_HPP
#define ACTIVERES_LP_HPP

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "activeres/errors.hpp"

namespace activeres {

enum class Goal { Maximize, Minimize };
enum class Relation { LessEqual, GreaterEqual, Equal };
enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpConstraint {
  std::vector<double> coeffs;
  Relation relation = Relation::LessEqual;
  double rhs = 0.0;
};

/// Linear program over x >= 0. Optional finite upper bounds are turned into
/// extra rows.
struct LinearProgram {
  Goal goal = Goal::Maximize;
  std::vector<double> objective;
  std::vector<LpConstraint> rows;
  std::vector<double> upper_bounds;  // empty, or one entry per variable (+inf = none)
};

struct LpSolution {
  LpStatus status = LpStatus::Infeasible;
  std::vector<double> x;
  double value = 0.0;
  /// Shadow prices d(value)/d(rhs_k), one per input row (bound rows are not
  /// reported). Max with <= rows and min with >= rows give nonnegative duals,
  /// and at optimality value == sum_k duals[k] * rhs[k] (+ bound terms).
  std::vector<double> duals;
  int pivots = 0;
};

namespace detail {

/// Dense tableau simplex for  max c^T x  s.t.  A x <= b, x >= 0.
/// Layout follows the classic dictionary form: row m is the objective, row
/// m+1 the phase-one objective, column n the auxiliary variable, column n+1
/// the right-hand side. Entering and leaving variables follow Bland's rule
/// (smallest index), which rules out cycling on degenerate problems.
class DenseSimplex {
 public:
  DenseSimplex(const std::vector<std::vector<double>>& a, const std::vector<double>& b, const std::vector<double>& c,
               double eps)
      : m_(static_cast<int>(b.size())),
        n_(static_cast<int>(c.size())),
        eps_(eps),
        non_basic_(static_cast<std::size_t>(n_ + 1)),
        basic_(static_cast<std::size_t>(m_)),
        t_(static_cast<std::size_t>(m_ + 2), std::vector<double>(static_cast<std::size_t>(n_ + 2), 0.0)) {
    for (int i = 0; i < m_; ++i) {
      for (int j = 0; j < n_; ++j) at(i, j) = a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
    for (int i = 0; i < m_; ++i) {
      basic_[static_cast<std::size_t>(i)] = n_ + i;
      at(i, n_) = -1.0;
      at(i, n_ + 1) = b[static_cast<std::size_t>(i)];
    }
    for (int j = 0; j < n_; ++j) {
      non_basic_[static_cast<std::size_t>(j)] = j;
      at(m_, j) = -c[static_cast<std::size_t>(j)];
    }
    non_basic_[static_cast<std::size_t>(n_)] = -1;
    at(m_ + 1, n_) = 1.0;
  }

  LpStatus solve() {
    int r = 0;
    for (int i = 1; i < m_; ++i) {
      if (at(i, n_ + 1) < at(r, n_ + 1)) r = i;
    }
    if (m_ > 0 && at(r, n_ + 1) < -eps_) {
      pivot(r, n_);
      if (!run(2) || at(m_ + 1, n_ + 1) < -eps_) return LpStatus::Infeasible;
      for (int i = 0; i < m_; ++i) {
        if (basic_[static_cast<std::size_t>(i)] != -1) continue;
        int s = -1;
        for (int j = 0; j <= n_; ++j) {
          if (std::abs(at(i, j)) <= eps_) continue;
          if (s == -1 || non_basic_[static_cast<std::size_t>(j)] < non_basic_[static_cast<std::size_t>(s)]) s = j;
        }
        if (s != -1) pivot(i, s);
      }
    }
    return run(1) ? LpStatus::Optimal : LpStatus::Unbounded;
  }

  std::vector<double> primal() const {
    std::vector<double> x(static_cast<std::size_t>(n_), 0.0);
    for (int i = 0; i < m_; ++i) {
      const int v = basic_[static_cast<std::size_t>(i)];
      if (v >= 0 && v < n_) x[static_cast<std::size_t>(v)] = at(i, n_ + 1);
    }
    return x;
  }

  /// Dual of row k = reduced cost of its slack when nonbasic, else 0.
  std::vector<double> dual() const {
    std::vector<double> y(static_cast<std::size_t>(m_), 0.0);
    for (int j = 0; j <= n_; ++j) {
      const int v = non_basic_[static_cast<std::size_t>(j)];
      if (v >= n_) y[static_cast<std::size_t>(v - n_)] = at(m_, j);
    }
    return y;
  }

  double value() const { return at(m_, n_ + 1); }
  int pivots() const { return pivots_; }

 private:
  double& at(int i, int j) { return t_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }
  double at(int i, int j) const { return t_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }

  void pivot(int r, int s) {
    ++pivots_;
    const double inv = 1.0 / at(r, s);
    auto& row_r = t_[static_cast<std::size_t>(r)];
    for (int i = 0; i < m_ + 2; ++i) {
      if (i == r || std::abs(at(i, s)) <= 0.0) continue;
      auto& row_i = t_[static_cast<std::size_t>(i)];
      const double factor = row_i[static_cast<std::size_t>(s)] * inv;
      for (int j = 0; j < n_ + 2; ++j) row_i[static_cast<std::size_t>(j)] -= row_r[static_cast<std::size_t>(j)] * factor;
      row_i[static_cast<std::size_t>(s)] = row_r[static_cast<std::size_t>(s)] * factor;
    }
    for (int j = 0; j < n_ + 2; ++j) {
      if (j != s) row_r[static_cast<std::size_t>(j)] *= inv;
    }
    for (int i = 0; i < m_ + 2; ++i) {
      if (i != r) at(i, s) *= -inv;
    }
    row_r[static_cast<std::size_t>(s)] = inv;
    std::swap(basic_[static_cast<std::size_t>(r)], non_basic_[static_cast<std::size_t>(s)]);
  }

  bool run(int phase) {
    const int obj = m_ + phase - 1;
    for (;;) {
      int s = -1;
      for (int j = 0; j <= n_; ++j) {
        if (non_basic_[static_cast<std::size_t>(j)] == -phase) continue;
        if (at(obj, j) >= -eps_) continue;
        if (s == -1 || non_basic_[static_cast<std::size_t>(j)] < non_basic_[static_cast<std::size_t>(s)]) s = j;
      }
      if (s == -1) return true;
      // Exact minimum ratio first; ties within eps of it go to the smallest
      // basic index. Comparing against a running best would let ties creep
      // upward and leave rows violated.
      double best = std::numeric_limits<double>::infinity();
      for (int i = 0; i < m_; ++i) {
        if (at(i, s) > eps_) best = std::min(best, at(i, n_ + 1) / at(i, s));
      }
      if (best == std::numeric_limits<double>::infinity()) return false;
      int r = -1;
      for (int i = 0; i < m_; ++i) {
        if (at(i, s) <= eps_ || at(i, n_ + 1) / at(i, s) > best + eps_) continue;
        if (r == -1 || basic_[static_cast<std::size_t>(i)] < basic_[static_cast<std::size_t>(r)]) r = i;
      }
      pivot(r, s);
    }
  }

  int m_;
  int n_;
  double eps_;
  std::vector<int> non_basic_;
  std::vector<int> basic_;
  std::vector<std::vector<double>> t_;
  int pivots_ = 0;
};

}  // namespace detail

/// Solves a small dense LP with the simplex method (Bland's rule).
inline LpSolution dense_lp(const LinearProgram& lp, double tol = 1e-10) {
  const std::size_t n = lp.objective.size();
  const double sign = lp.goal == Goal::Maximize ? 1.0 : -1.0;

  // Canonical form max c'x, A'x <= b'. Each input row maps to one or two
  // canonical rows with a +/-1 multiplier.
  std::vector<std::vector<double>> a;
  std::vector<double> b;
  std::vector<std::pair<std::size_t, double>> origin;  // (input row, multiplier)
  for (std::size_t k = 0; k < lp.rows.size(); ++k) {
    const auto& row = lp.rows[k];
    if (row.coeffs.size() != n) {
      throw ValidationError("dimension_mismatch", "LP row " + std::to_string(k) + " has the wrong length", "rows");
    }
    auto push = [&](double mult) {
      std::vector<double> coeffs(n);
      for (std::size_t j = 0; j < n; ++j) coeffs[j] = mult * row.coeffs[j];
      a.push_back(std::move(coeffs));
      b.push_back(mult * row.rhs);
      origin.emplace_back(k, mult);
    };
    if (row.relation != Relation::GreaterEqual) push(1.0);
    if (row.relation != Relation::LessEqual) push(-1.0);
  }
  if (!lp.upper_bounds.empty()) {
    if (lp.upper_bounds.size() != n) throw ValidationError("dimension_mismatch", "upper bound count", "bounds");
    for (std::size_t j = 0; j < n; ++j) {
      if (!std::isfinite(lp.upper_bounds[j])) continue;
      std::vector<double> coeffs(n, 0.0);
      coeffs[j] = 1.0;
      a.push_back(std::move(coeffs));
      b.push_back(lp.upper_bounds[j]);
      origin.emplace_back(lp.rows.size(), 0.0);
    }
  }
  std::vector<double> c(n);
  for (std::size_t j = 0; j < n; ++j) c[j] = sign * lp.objective[j];

  detail::DenseSimplex simplex(a, b, c, tol);
  LpSolution out;
  out.status = simplex.solve();
  out.pivots = simplex.pivots();
  if (out.status != LpStatus::Optimal) return out;

  out.x = simplex.primal();
  out.value = 0.0;
  for (std::size_t j = 0; j < n; ++j) out.value += lp.objective[j] * out.x[j];
  const std::vector<double> y = simplex.dual();
  out.duals.assign(lp.rows.size(), 0.0);
  for (std::size_t r = 0; r < origin.size(); ++r) {
    const auto [k, mult] = origin[r];
    if (k < lp.rows.size()) out.duals[k] += sign * mult * y[r];
  }
  return out;
}

}  // namespace activeres

#endif  // ACTIVERES_LP_HPP
