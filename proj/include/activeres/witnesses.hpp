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

#ifndef ACTIVERES_WITNESSES_HPP
#define ACTIVERES_WITNESSES_HPP

#include <algorithm>
#include <cmath>
#include <limits>

#include "activeres/channels.hpp"
#include "activeres/hermitian.hpp"
#include "activeres/monotones.hpp"
#include "activeres/solver.hpp"
#include "activeres/states.hpp"

namespace activeres {

/// max_j (sum_{i<=j} W_ii) / j, i.e. max_j Tr[W tau_j]. A PSD W is an
/// activity witness iff this is at most 1.
inline double max_passive_expectation(const ComplexMatrix& w) {
  double best = -std::numeric_limits<double>::infinity();
  double partial = 0.0;
  for (Index j = 0; j < w.rows(); ++j) {
    partial += w(j, j).real();
    best = std::max(best, partial / static_cast<double>(j + 1));
  }
  return best;
}

/// PSD within tol and sum_{i<=j} W_ii <= j + tol for every j.
inline bool is_activity_witness(const ComplexMatrix& w, double tol = default_tolerances().eps_cert) {
  const HermitianMatrix h(w, default_tolerances().eps_herm, "witness");
  if (!is_psd(h, tol)) return false;
  double partial = 0.0;
  for (Index j = 0; j < w.rows(); ++j) {
    partial += h(j, j).real();
    if (partial > static_cast<double>(j + 1) + tol) return false;
  }
  return true;
}

enum class WitnessKind { Level, Coherent };

/// Level witness W_k = k |k><k| (1-based k, 2 <= k <= d) or the coherent
/// witness W_coh = d |phi_+><phi_+| = J.
inline ComplexMatrix canonical_witness(WitnessKind kind, Index d, Index k = 0) {
  if (d < 1) throw ValidationError("out_of_range", "dimension must be at least 1", "d");
  if (kind == WitnessKind::Coherent) return all_ones(d);
  if (k < 2 || k > d) throw ValidationError("out_of_range", "level witness needs 2 <= k <= d", "k");
  ComplexMatrix w = ComplexMatrix::Zero(d, d);
  w(k - 1, k - 1) = static_cast<double>(k);
  return w;
}

struct OptimalWitness {
  ComplexMatrix witness;
  double value = 0.0;  // Tr[W rho]
  double gap = 0.0;
};

/// A witness maximizing Tr[W rho]; the maximum equals 2^{R_max^act(rho)}.
/// Built from the robustness solver's dual multipliers, rescaled so the
/// partial-sum constraints hold exactly.
inline OptimalWitness optimal_witness(const DensityMatrix& rho, const SolverOptions& opts = {}) {
  const MonotoneResult r = robustness_of_activity(rho, opts);
  ComplexMatrix w = r.witness;
  const double scale = max_passive_expectation(w);
  if (scale > 1.0) w /= scale;
  OptimalWitness out;
  out.witness = w;
  out.value = trace_product(w, rho.matrix());
  out.gap = std::max(r.value + 1.0 - out.value, 0.0);
  return out;
}

struct Advantage {
  double value = 0.0;
  bool infinite = false;
};

/// Tr[xi rho] / max_j Tr[xi tau_j]: the success figure <phi_+|Q(rho)|phi_+>
/// of the energy-preserving operation Q defined by xi, relative to the best
/// passive state. Bounded by 2^{R_max^act(rho)}.
inline Advantage ep_advantage(const DensityMatrix& rho, const SubCorrelationMatrix& xi,
                              double eps = default_tolerances().eps_cert) {
  require_same_dim(rho.dim(), xi.matrix().rows(), "xi");
  const double numerator = trace_product(xi.matrix(), rho.matrix());
  const double denominator = max_passive_expectation(xi.matrix());
  Advantage out;
  if (denominator <= eps) {
    out.infinite = true;
    out.value = std::numeric_limits<double>::infinity();
    return out;
  }
  out.value = numerator / denominator;
  return out;
}

}  // namespace activeres

#endif  // ACTIVERES_WITNESSES_HPP
