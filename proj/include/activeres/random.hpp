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

#ifndef ACTIVERES_RANDOM_HPP
#define ACTIVERES_RANDOM_HPP

#include <cstdint>
#include <random>

#include "activeres/hermitian.hpp"

namespace activeres {

using Rng = std::mt19937_64;

/// Seed for the k-th independent stream derived from a base seed
/// (splitmix64 finalizer).
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t k) {
  std::uint64_t z = base + 0x9e3779b97f4a7c15ULL * (k + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline double uniform01(Rng& rng) { return std::uniform_real_distribution<double>(0.0, 1.0)(rng); }

/// Matrix of i.i.d. standard complex Gaussians.
inline ComplexMatrix ginibre(Index rows, Index cols, Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  ComplexMatrix g(rows, cols);
  for (Index j = 0; j < cols; ++j) {
    for (Index i = 0; i < rows; ++i) g(i, j) = Complex(normal(rng), normal(rng));
  }
  return g;
}

/// Haar-distributed unitary (QR of a Ginibre matrix with the phases of R's
/// diagonal absorbed into Q).
inline ComplexMatrix haar_unitary(Index d, Rng& rng) {
  const ComplexMatrix g = ginibre(d, d, rng);
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ() * ComplexMatrix::Identity(d, d);
  const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Index j = 0; j < d; ++j) {
    const Complex rjj = r(j, j);
    const double mag = std::abs(rjj);
    if (mag > 0.0) q.col(j) *= rjj / mag;
  }
  return q;
}

/// Flat Dirichlet draw on the (d-1)-simplex.
inline RealVector flat_dirichlet(Index d, Rng& rng) {
  std::exponential_distribution<double> expo(1.0);
  RealVector w(d);
  for (Index i = 0; i < d; ++i) w(i) = expo(rng);
  return w / w.sum();
}

}  // namespace activeres

#endif  // ACTIVERES_RANDOM_HPP
