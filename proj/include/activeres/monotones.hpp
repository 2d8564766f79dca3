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

#ifndef ACTIVERES_MONOTONES_HPP
#define ACTIVERES_MONOTONES_HPP

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "activeres/hermitian.hpp"
#include "activeres/solver.hpp"
#include "activeres/states.hpp"

namespace activeres {

/// Value of an activity or coherence quantifier. Logarithmic quantities are
/// in bits. `value` may be +inf (see `infinite()`).
struct MonotoneResult {
  double value = 0.0;
  double gap = 0.0;
  RealVector primal;         // optimal diagonal g (passive-cone or dominating vector)
  RealVector cone;           // passive-cone coordinates u of `primal`, when applicable
  RealVector passive;        // optimal passive state's populations, when applicable
  ComplexMatrix witness;     // dual certificate
  int cuts = 0;

  bool infinite() const { return std::isinf(value); }
};

namespace detail {

inline RealVector ones(Index d) { return RealVector::Ones(d); }

/// |0> lies in supp rho. Every nonzero passive operator has |0> in its
/// support, so without it no passive component fits under rho.
inline bool ground_in_support(const DensityMatrix& rho, double tol) {
  const EigenDecomposition eig = eig_hermitian(rho.hermitian());
  double overlap = 0.0;
  for (Index k = 0; k < rho.dim(); ++k) {
    if (eig.values(k) > tol) overlap += std::norm(eig.vectors(0, k));
  }
  return overlap > 1.0 - std::sqrt(tol);
}

inline double log2_gap(double lower, double upper) {
  if (!(lower > 0.0)) return upper > 0.0 ? std::numeric_limits<double>::infinity() : 0.0;
  return std::log2(upper) - std::log2(lower);
}

}  // namespace detail

/// Activity weight A_w = 1 - max { Tr Gamma : Gamma in the passive cone,
/// Gamma <= rho }. The passive component is reported normalized.
inline MonotoneResult activity_weight(const DensityMatrix& rho, const SolverOptions& opts = {}) {
  const Index d = rho.dim();
  MonotoneResult out;
  if (!detail::ground_in_support(rho, opts.psd_tol)) {
    out.value = 1.0;
    out.primal = RealVector::Zero(d);
    out.cone = RealVector::Zero(d);
    out.witness = ComplexMatrix::Zero(d, d);
    return out;
  }
  const ConeSolution sol = max_gain_dominated(detail::ones(d), rho, opts);
  out.value = std::clamp(1.0 - sol.value, 0.0, 1.0);
  out.gap = sol.gap;
  out.primal = sol.g;
  out.cone = sol.u;
  if (sol.value > 0.0) out.passive = sol.g / sol.g.sum();
  out.witness = sol.witness;
  out.cuts = sol.cuts;
  return out;
}

/// Robustness of activity A_r = min { Tr Gamma : Gamma in the passive cone,
/// Gamma >= rho } - 1. The witness W is PSD with partial diagonal sums
/// sum_{i<=j} W_ii <= j and Tr[W rho] = A_r + 1 - gap.
inline MonotoneResult robustness_of_activity(const DensityMatrix& rho, const SolverOptions& opts = {}) {
  const Index d = rho.dim();
  const ConeSolution sol = min_cost_dominating(detail::ones(d), rho, true, opts);
  MonotoneResult out;
  out.value = std::clamp(sol.value - 1.0, 0.0, static_cast<double>(d - 1));
  out.gap = sol.gap;
  out.primal = sol.g;
  out.cone = sol.u;
  out.passive = sol.g / sol.g.sum();
  out.witness = sol.witness;
  out.cuts = sol.cuts;
  return out;
}

/// R_max^act = log2(A_r + 1).
inline MonotoneResult max_relent_activity(const DensityMatrix& rho, const SolverOptions& opts = {}) {
  MonotoneResult out = robustness_of_activity(rho, opts);
  const double trace = out.value + 1.0;
  out.value = std::log2(trace);
  out.gap = detail::log2_gap(trace - out.gap, trace);
  return out;
}

/// Inverse max relative entropy -log2(1 - A_w); +inf when A_w = 1.
inline MonotoneResult inverse_max_relent_activity(const DensityMatrix& rho, const SolverOptions& opts = {}) {
  MonotoneResult out = activity_weight(rho, opts);
  const double passive_weight = 1.0 - out.value;
  if (passive_weight <= 0.0) {
    out.value = std::numeric_limits<double>::infinity();
    out.gap = 0.0;
    return out;
  }
  out.gap = detail::log2_gap(passive_weight, passive_weight + out.gap);
  out.value = -std::log2(passive_weight);
  return out;
}

/// Nonincreasing least-squares regression of a (pool adjacent violators,
/// equal weights). Block averages preserve the total.
inline RealVector antitonic_regression(const RealVector& a) {
  struct Block {
    double sum;
    Index count;
  };
  std::vector<Block> blocks;
  for (Index i = 0; i < a.size(); ++i) {
    blocks.push_back({a(i), 1});
    while (blocks.size() > 1) {
      const Block& last = blocks.back();
      const Block& prev = blocks[blocks.size() - 2];
      if (prev.sum / static_cast<double>(prev.count) >= last.sum / static_cast<double>(last.count)) break;
      const Block merged{prev.sum + last.sum, prev.count + last.count};
      blocks.pop_back();
      blocks.back() = merged;
    }
  }
  RealVector out(a.size());
  Index i = 0;
  for (const Block& b : blocks) {
    for (Index k = 0; k < b.count; ++k) out(i++) = b.sum / static_cast<double>(b.count);
  }
  return out;
}

/// Relative entropy of activity min_tau D(rho || tau) in bits. The optimal
/// passive tau is diagonal with the antitonic regression of rho's
/// populations; it is returned in `passive`.
inline MonotoneResult relent_activity(const DensityMatrix& rho) {
  const RealVector a = rho.populations().cwiseMax(0.0);
  const RealVector q = antitonic_regression(a);
  double cross = 0.0;
  for (Index i = 0; i < a.size(); ++i) {
    if (a(i) > 0.0) cross -= a(i) * std::log2(q(i));
  }
  MonotoneResult out;
  out.value = std::max(cross - von_neumann_entropy(rho), 0.0);
  out.passive = q;
  out.primal = q;
  return out;
}

/// R_max^coh = log2 min { sum_i g_i : diag(g) >= rho, g >= 0 }. The witness
/// is a correlation matrix xi with Tr[xi rho] within the gap of 2^value.
inline MonotoneResult max_relent_coherence(const DensityMatrix& rho, const SolverOptions& opts = {}) {
  const Index d = rho.dim();
  const ConeSolution sol = min_cost_dominating(detail::ones(d), rho, false, opts);
  MonotoneResult out;
  out.value = std::max(std::log2(sol.value), 0.0);
  out.gap = detail::log2_gap(sol.lower, sol.upper);
  out.primal = sol.g;
  // Y_ii <= 1 by dual feasibility; topping the diagonal up to 1 keeps Y PSD
  // and can only raise Tr[Y rho].
  ComplexMatrix xi = sol.witness;
  for (Index i = 0; i < d; ++i) xi(i, i) = 1.0;
  out.witness = xi;
  out.cuts = sol.cuts;
  return out;
}

struct ErgotropyBounds {
  double weight_bound = 0.0;
  double robustness_bound = 0.0;
};

/// Erg(rho) <= A_w * max_{supp sigma in supp rho} Erg(sigma) and
/// Erg(rho) <= min(A_r, 1) * (E_imax - E_1), imax the highest populated level.
/// The inner maximum is attained on a pure state of supp rho, so it equals
/// lambda_max of H compressed to supp rho, minus E_1.
inline ErgotropyBounds ergotropy_upper_bounds(const DensityMatrix& rho, const HamiltonianSpectrum& h,
                                              const SolverOptions& opts = {}) {
  require_same_dim(rho, h);
  const Index d = rho.dim();
  const EigenDecomposition eig = eig_hermitian(rho.hermitian());
  Index rank = 0;
  for (Index k = 0; k < d; ++k) rank += eig.values(k) > opts.psd_tol ? 1 : 0;
  const ComplexMatrix support = eig.vectors.rightCols(rank);
  RealVector energies(d);
  for (Index i = 0; i < d; ++i) energies(i) = h[i];
  const ComplexMatrix compressed = support.adjoint() * diagonal_matrix(energies) * support;
  const double top = eig_hermitian_unchecked(compressed).values(rank - 1);

  Index imax = 0;
  for (Index i = 0; i < d; ++i) {
    if (rho(i, i).real() > 0.0) imax = i;
  }

  ErgotropyBounds out;
  out.weight_bound = activity_weight(rho, opts).value * std::max(top - h[0], 0.0);
  out.robustness_bound = std::min(robustness_of_activity(rho, opts).value, 1.0) * (h[imax] - h[0]);
  return out;
}

}  // namespace activeres

#endif  // ACTIVERES_MONOTONES_HPP
