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

#ifndef ACTIVERES_SOLVER_HPP
#define ACTIVERES_SOLVER_HPP

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "activeres/hermitian.hpp"
#include "activeres/lp.hpp"
#include "activeres/states.hpp"

namespace activeres {

struct SolverOptions {
  int max_cuts = 500;
  double lp_tol = 1e-10;
  double psd_tol = 1e-9;
  /// Stop once upper - lower <= gap_tol.
  double gap_tol = 1e-8;
  /// Accept a gap up to stall_factor * gap_tol once the master LP bound has
  /// stopped moving for stall_iterations rounds; the LP cannot resolve cuts
  /// finer than its own round-off.
  double stall_factor = 10.0;
  int stall_iterations = 20;
  /// Grid step for brute-force oracles; <= 0 selects the dimension default.
  double oracle_grid_step = 0.0;

  void validate() const {
    if (max_cuts <= 0 || !(lp_tol > 0) || !(psd_tol > 0) || !(gap_tol > 0) || !(stall_factor >= 1.0) ||
        stall_iterations <= 0) {
      throw ValidationError("invalid_options", "solver options must be positive", "options");
    }
  }
};

/// 1e-2 for d <= 3, 5e-2 above.
inline double default_grid_step(Index d) { return d <= 3 ? 1e-2 : 5e-2; }

/// Element g of the passive cone, g_i = sum_{j >= i} u_j with u >= 0, so g
/// is nonincreasing and nonnegative by construction. The extreme rays are
/// the unnormalized extreme passive states j * tau_j.
struct PassiveConeVector {
  RealVector u;

  RealVector diagonal() const {
    const Index d = u.size();
    RealVector g(d);
    double acc = 0.0;
    for (Index i = d - 1; i >= 0; --i) {
      acc += u(i);
      g(i) = acc;
    }
    return g;
  }

  /// Trace of diag(g), i.e. sum_j j * u_j.
  double trace() const {
    double t = 0.0;
    for (Index j = 0; j < u.size(); ++j) t += static_cast<double>(j + 1) * u(j);
    return t;
  }
};

struct ConeSolution {
  RealVector g;           // feasible diagonal
  RealVector u;           // passive-cone coordinates of g (monotone problems)
  double value = 0.0;     // objective at g
  double lower = 0.0;     // certified bounds on the optimum
  double upper = 0.0;
  double gap = 0.0;       // upper - lower
  ComplexMatrix witness;  // dual PSD certificate, sum_k y_k v_k v_k^dagger
  int cuts = 0;
  int iterations = 0;
};

namespace detail {

/// Cuts sum_i |v_i|^2 g_i  (>= or <=)  v^dagger rho v, written in the LP's
/// variables (u for the monotone cone, g otherwise).
class CutSet {
 public:
  CutSet(const ComplexMatrix& rho, bool monotone, Relation relation)
      : rho_(rho), monotone_(monotone), relation_(relation) {}

  void add(const ComplexVector& v) {
    const Index d = rho_.rows();
    LpConstraint row;
    row.relation = relation_;
    row.coeffs.resize(static_cast<std::size_t>(d));
    double acc = 0.0;
    for (Index i = 0; i < d; ++i) {
      const double w = std::norm(v(i));
      acc += w;
      row.coeffs[static_cast<std::size_t>(i)] = monotone_ ? acc : w;
    }
    row.rhs = (v.adjoint() * rho_ * v)(0, 0).real();
    rows_.push_back(std::move(row));
    vectors_.push_back(v);
  }

  void add_coordinate_cuts() {
    const Index d = rho_.rows();
    for (Index i = 0; i < d; ++i) add(ComplexVector::Unit(d, i));
  }

  const std::vector<LpConstraint>& rows() const { return rows_; }
  int size() const { return static_cast<int>(rows_.size()); }

  ComplexMatrix witness(const std::vector<double>& duals, double sign) const {
    const Index d = rho_.rows();
    ComplexMatrix y = ComplexMatrix::Zero(d, d);
    for (std::size_t k = 0; k < vectors_.size(); ++k) {
      const double weight = std::max(sign * duals[k], 0.0);
      if (weight > 0.0) y += weight * (vectors_[k] * vectors_[k].adjoint());
    }
    return y;
  }

 private:
  ComplexMatrix rho_;
  bool monotone_;
  Relation relation_;
  std::vector<LpConstraint> rows_;
  std::vector<ComplexVector> vectors_;
};

inline RealVector to_diagonal(const std::vector<double>& x, bool monotone) {
  const Index d = static_cast<Index>(x.size());
  RealVector out(d);
  if (!monotone) {
    for (Index i = 0; i < d; ++i) out(i) = std::max(x[static_cast<std::size_t>(i)], 0.0);
    return out;
  }
  PassiveConeVector cone{RealVector(d)};
  for (Index i = 0; i < d; ++i) cone.u(i) = std::max(x[static_cast<std::size_t>(i)], 0.0);
  return cone.diagonal();
}

inline RealVector cone_coordinates(const RealVector& g) {
  const Index d = g.size();
  RealVector u(d);
  for (Index j = 0; j < d; ++j) u(j) = g(j) - (j + 1 < d ? g(j + 1) : 0.0);
  return u;
}

/// Objective in LP variables for a cost given on the diagonal g.
inline std::vector<double> lp_objective(const RealVector& cost, bool monotone) {
  std::vector<double> c(static_cast<std::size_t>(cost.size()));
  double acc = 0.0;
  for (Index i = 0; i < cost.size(); ++i) {
    acc += cost(i);
    c[static_cast<std::size_t>(i)] = monotone ? acc : cost(i);
  }
  return c;
}

inline void add_violated_cuts(CutSet& cuts, const EigenDecomposition& eig) {
  // Every eigenvector with a negative eigenvalue gives a violated cut; the
  // most negative one always goes in.
  for (Index k = 0; k < eig.values.size(); ++k) {
    if (k > 0 && eig.values(k) >= 0.0) break;
    cuts.add(eig.vectors.col(k));
  }
}

}  // namespace detail

/// min sum_i cost_i g_i  s.t.  diag(g) >= rho (PSD order), with g in the
/// passive cone (monotone) or the nonnegative orthant. Solved by eigenvector
/// cutting planes over a dense LP master problem.
///
/// The returned witness Y is PSD with Tr[Y rho] = lower. Its diagonal obeys
/// the dual constraints: partial sums sum_{i<=j} Y_ii <= sum_{i<=j} cost_i
/// for the monotone cone, Y_ii <= cost_i entrywise otherwise.
inline ConeSolution min_cost_dominating(const RealVector& cost, const DensityMatrix& rho, bool monotone,
                                        const SolverOptions& opts = {}) {
  opts.validate();
  const Index d = rho.dim();
  require_same_dim(cost.size(), d, "cost");
  if (cost.minCoeff() <= 0.0) throw ValidationError("invalid_cost", "costs must be strictly positive", "cost");

  const ComplexMatrix& r = rho.matrix();
  detail::CutSet cuts(r, monotone, Relation::GreaterEqual);
  cuts.add_coordinate_cuts();

  LinearProgram lp;
  lp.goal = Goal::Minimize;
  lp.objective = detail::lp_objective(cost, monotone);
  const double cost_sum = cost.sum();

  ConeSolution best;
  best.upper = std::numeric_limits<double>::infinity();
  best.lower = -std::numeric_limits<double>::infinity();
  int stalled = 0;
  for (int iter = 1;; ++iter) {
    lp.rows = cuts.rows();
    const LpSolution sol = dense_lp(lp, opts.lp_tol);
    if (sol.status != LpStatus::Optimal) {
      throw SolverError("cut master LP was not solved to optimality", best.lower, best.upper, cuts.size(), iter);
    }
    const RealVector g = detail::to_diagonal(sol.x, monotone);
    const EigenDecomposition eig = eig_hermitian_unchecked(ComplexMatrix(diagonal_matrix(g)) - r);
    const double shift = std::max(0.0, -eig.values(0));

    if (sol.value > best.lower + 1e-3 * opts.gap_tol) {
      stalled = 0;
    } else {
      ++stalled;
    }
    if (sol.value > best.lower) {
      best.lower = sol.value;
      best.witness = cuts.witness(sol.duals, 1.0);
    }
    const double upper = cost.dot(g) + shift * cost_sum;
    if (upper < best.upper) {
      best.upper = upper;
      best.g = (g.array() + shift).matrix();
    }
    best.iterations = iter;
    best.cuts = cuts.size();
    if (best.upper - best.lower <= opts.gap_tol) break;
    if (stalled >= opts.stall_iterations && best.upper - best.lower <= opts.stall_factor * opts.gap_tol) break;
    if (cuts.size() >= opts.max_cuts) {
      throw SolverError("cut budget exhausted before the duality gap closed", best.lower, best.upper, cuts.size(),
                        iter);
    }
    detail::add_violated_cuts(cuts, eig);
  }
  best.value = cost.dot(best.g);
  best.gap = std::max(best.upper - best.lower, 0.0);
  if (monotone) best.u = detail::cone_coordinates(best.g);
  return best;
}

/// max sum_i gain_i g_i  s.t.  diag(g) <= rho, g in the passive cone.
///
/// The witness Y = sum_k y_k v_k v_k^dagger has Tr[Y rho] = upper and
/// partial sums sum_{i<=j} Y_ii >= sum_{i<=j} gain_i.
inline ConeSolution max_gain_dominated(const RealVector& gain, const DensityMatrix& rho,
                                       const SolverOptions& opts = {}) {
  opts.validate();
  const Index d = rho.dim();
  require_same_dim(gain.size(), d, "gain");
  if (gain.minCoeff() <= 0.0) throw ValidationError("invalid_gain", "gains must be strictly positive", "gain");

  const ComplexMatrix& r = rho.matrix();
  const double rho_floor = std::min(min_eigenvalue_unchecked(r), 0.0) - 1e-14;
  auto feasible = [&](const RealVector& g) {
    return min_eigenvalue_unchecked(r - ComplexMatrix(diagonal_matrix(g))) >= rho_floor;
  };

  detail::CutSet cuts(r, true, Relation::LessEqual);
  cuts.add_coordinate_cuts();

  LinearProgram lp;
  lp.goal = Goal::Maximize;
  lp.objective = detail::lp_objective(gain, true);

  ConeSolution best;
  best.g = RealVector::Zero(d);
  best.lower = 0.0;  // g = 0 is always feasible
  best.upper = std::numeric_limits<double>::infinity();
  int stalled = 0;
  for (int iter = 1;; ++iter) {
    lp.rows = cuts.rows();
    const LpSolution sol = dense_lp(lp, opts.lp_tol);
    if (sol.status != LpStatus::Optimal) {
      throw SolverError("cut master LP was not solved to optimality", best.lower, best.upper, cuts.size(), iter);
    }
    const RealVector g = detail::to_diagonal(sol.x, true);
    const EigenDecomposition eig = eig_hermitian_unchecked(r - ComplexMatrix(diagonal_matrix(g)));
    const double shift = std::max(0.0, -eig.values(0));

    if (sol.value < best.upper - 1e-3 * opts.gap_tol) {
      stalled = 0;
    } else {
      ++stalled;
    }
    if (sol.value < best.upper) {
      best.upper = sol.value;
      best.witness = cuts.witness(sol.duals, 1.0);
    }

    // Feasible candidates: g itself, g shifted down by the violation (stays in
    // the cone while the smallest entry g_d covers it), and g scaled toward 0.
    RealVector candidate = g;
    double candidate_value = -1.0;
    if (shift == 0.0 || feasible(g)) {
      candidate_value = gain.dot(g);
    } else {
      if (g(d - 1) >= shift) {
        RealVector shifted = (g.array() - shift).matrix();
        if (feasible(shifted)) {
          candidate = shifted;
          candidate_value = gain.dot(shifted);
        }
      }
      double lo = 0.0;
      double hi = 1.0;
      for (int k = 0; k < 60 && hi - lo > 1e-15; ++k) {
        const double mid = 0.5 * (lo + hi);
        if (feasible(mid * g)) {
          lo = mid;
        } else {
          hi = mid;
        }
      }
      if (lo * gain.dot(g) > candidate_value) {
        candidate = lo * g;
        candidate_value = lo * gain.dot(g);
      }
    }
    if (candidate_value > best.lower) {
      best.lower = candidate_value;
      best.g = candidate;
    }
    best.iterations = iter;
    best.cuts = cuts.size();
    if (best.upper - best.lower <= opts.gap_tol) break;
    if (stalled >= opts.stall_iterations && best.upper - best.lower <= opts.stall_factor * opts.gap_tol) break;
    if (cuts.size() >= opts.max_cuts) {
      throw SolverError("cut budget exhausted before the duality gap closed", best.lower, best.upper, cuts.size(),
                        iter);
    }
    detail::add_violated_cuts(cuts, eig);
  }
  best.value = gain.dot(best.g);
  best.gap = std::max(best.upper - best.lower, 0.0);
  best.u = detail::cone_coordinates(best.g);
  return best;
}

}  // namespace activeres

#endif  // ACTIVERES_SOLVER_HPP
