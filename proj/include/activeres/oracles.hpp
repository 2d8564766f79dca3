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

// Brute-force reference values. Nothing here shares code with the cutting
// plane solver: passive states are enumerated on a grid of mixtures of the
// extreme points tau_j and each candidate is scored directly.

#ifndef ACTIVERES_ORACLES_HPP
#define ACTIVERES_ORACLES_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "activeres/hermitian.hpp"
#include "activeres/random.hpp"
#include "activeres/states.hpp"

namespace activeres {

enum class OracleObjective {
  Dmax,             // min_tau D_max(rho || tau), bits
  DominatedWeight,  // max { t : t tau <= rho }
  Relent,           // min_tau D(rho || tau), bits
};

namespace detail {

/// Calls f(q) for every passive diagonal q = sum_j w_j tau_j with weights w
/// on the simplex grid {k * step}.
inline void for_each_grid_passive(Index d, double step, const std::function<void(const RealVector&)>& f) {
  const int n = std::max(1, static_cast<int>(std::lround(1.0 / step)));
  std::vector<int> w(static_cast<std::size_t>(d), 0);
  RealVector q(d);
  // Enumerate compositions of n into d parts; the last part takes the rest.
  std::function<void(Index, int)> rec = [&](Index j, int left) {
    if (j == d - 1) {
      w[static_cast<std::size_t>(j)] = left;
      double acc = 0.0;
      for (Index i = d - 1; i >= 0; --i) {
        acc += w[static_cast<std::size_t>(i)] / (static_cast<double>(n) * static_cast<double>(i + 1));
        q(i) = acc;
      }
      f(q);
      return;
    }
    for (int k = 0; k <= left; ++k) {
      w[static_cast<std::size_t>(j)] = k;
      rec(j + 1, left - k);
    }
  };
  rec(0, n);
}

inline Index support_size(const RealVector& q) {
  Index k = 0;
  while (k < q.size() && q(k) > 0.0) ++k;
  return k;
}

}  // namespace detail

/// Grid optimum of the chosen objective over passive states. The grid always
/// contains the extreme points tau_j, so the returned value is an upper bound
/// on the true minimum (Dmax, Relent) or a lower bound on the true maximum
/// (DominatedWeight). Dmax is +inf only if every grid point misses supp rho.
inline double oracle_passive_grid(const DensityMatrix& rho, OracleObjective objective, double step,
                                  double psd_tol = 1e-9) {
  if (!(step > 0.0) || step > 1.0) throw ValidationError("invalid_step", "grid step must lie in (0, 1]", "step");
  const Index d = rho.dim();
  const ComplexMatrix& r = rho.matrix();
  const RealVector pops = rho.populations();
  const double entropy = von_neumann_entropy(rho);

  // Support projector of rho, for the dominated-weight objective.
  const EigenDecomposition eig = eig_hermitian(rho.hermitian());
  ComplexMatrix rho_pinv = ComplexMatrix::Zero(d, d);
  ComplexMatrix kernel_proj = ComplexMatrix::Zero(d, d);
  for (Index k = 0; k < d; ++k) {
    const ComplexVector v = eig.vectors.col(k);
    if (eig.values(k) > psd_tol) {
      rho_pinv += (1.0 / eig.values(k)) * (v * v.adjoint());
    } else {
      kernel_proj += v * v.adjoint();
    }
  }

  const bool maximize = objective == OracleObjective::DominatedWeight;
  double best = maximize ? 0.0 : std::numeric_limits<double>::infinity();
  detail::for_each_grid_passive(d, step, [&](const RealVector& q) {
    const Index k = detail::support_size(q);
    double score = 0.0;
    switch (objective) {
      case OracleObjective::Dmax: {
        // Weight of rho outside supp tau = span{|0>, ..., |k-1>}.
        if (k < d && r.bottomRightCorner(d - k, d - k).trace().real() > psd_tol) return;
        const RealVector inv_sqrt = q.head(k).cwiseSqrt().cwiseInverse();
        const ComplexMatrix s = inv_sqrt.cast<Complex>().asDiagonal() * r.topLeftCorner(k, k) *
                                inv_sqrt.cast<Complex>().asDiagonal();
        const double lmax = eig_hermitian_unchecked(s).values(k - 1);
        score = std::log2(std::max(lmax, std::numeric_limits<double>::min()));
        break;
      }
      case OracleObjective::DominatedWeight: {
        // t tau <= rho needs supp tau inside supp rho; then t = 1/lambda_max(tau^1/2 rho^+ tau^1/2).
        const RealVector sq = q.cwiseSqrt();
        const ComplexMatrix tau_half = sq.cast<Complex>().asDiagonal();
        if ((kernel_proj * tau_half).norm() > std::sqrt(psd_tol)) return;
        const double lmax = eig_hermitian_unchecked(tau_half * rho_pinv * tau_half).values(d - 1);
        score = lmax > 0.0 ? 1.0 / lmax : 0.0;
        break;
      }
      case OracleObjective::Relent: {
        double cross = 0.0;
        for (Index i = 0; i < d; ++i) {
          if (pops(i) <= 0.0) continue;
          if (q(i) <= 0.0) return;  // infinite for this tau
          cross -= pops(i) * std::log2(q(i));
        }
        score = cross - entropy;
        break;
      }
    }
    best = maximize ? std::max(best, score) : std::min(best, score);
  });
  return best;
}

/// Energy drop achieved by the best of n Haar-random unitaries. Never exceeds
/// the closed-form ergotropy.
inline double oracle_haar_ergotropy(const DensityMatrix& rho, const HamiltonianSpectrum& h, int n,
                                    std::uint64_t seed) {
  require_same_dim(rho, h);
  if (n < 1) throw ValidationError("invalid_samples", "sample count must be at least 1", "n");
  const Index d = rho.dim();
  Rng rng(seed);
  const double e0 = average_energy(rho, h);
  double best = -std::numeric_limits<double>::infinity();
  for (int s = 0; s < n; ++s) {
    const ComplexMatrix u = haar_unitary(d, rng);
    const ComplexMatrix out = u * rho.matrix() * u.adjoint();
    double e = 0.0;
    for (Index i = 0; i < d; ++i) e += h[i] * out(i, i).real();
    best = std::max(best, e0 - e);
  }
  return best;
}

}  // namespace activeres

#endif  // ACTIVERES_ORACLES_HPP
