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

#ifndef ACTIVERES_STATES_HPP
#define ACTIVERES_STATES_HPP

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "activeres/hermitian.hpp"

namespace activeres {

/// Energies E_1 < E_2 < ... < E_d. Level i (0-based in code and files) is
/// the i-th basis vector of every matrix in the library.
class HamiltonianSpectrum {
 public:
  HamiltonianSpectrum() = default;

  explicit HamiltonianSpectrum(std::vector<double> energies) : energies_(std::move(energies)) {
    if (energies_.empty()) throw ValidationError("empty_spectrum", "spectrum must be non-empty", "energies");
    for (std::size_t i = 0; i < energies_.size(); ++i) {
      if (!std::isfinite(energies_[i])) {
        throw ValidationError("non_finite", "energies must be finite", "energies");
      }
      if (i == 0) continue;
      if (energies_[i] == energies_[i - 1]) {
        throw ValidationError("degenerate_spectrum",
                              "Hamiltonian is degenerate at levels " + std::to_string(i - 1) + " and " +
                                  std::to_string(i),
                              "energies");
      }
      if (energies_[i] < energies_[i - 1]) {
        throw ValidationError("unordered_spectrum", "energies must be listed in increasing order", "energies");
      }
    }
  }

  /// Equally spaced levels 0, 1, ..., d-1.
  static HamiltonianSpectrum ladder(Index d) {
    std::vector<double> e(static_cast<std::size_t>(d));
    for (Index i = 0; i < d; ++i) e[static_cast<std::size_t>(i)] = static_cast<double>(i);
    return HamiltonianSpectrum(std::move(e));
  }

  Index dim() const noexcept { return static_cast<Index>(energies_.size()); }
  const std::vector<double>& energies() const noexcept { return energies_; }
  double operator[](Index i) const { return energies_[static_cast<std::size_t>(i)]; }

 private:
  std::vector<double> energies_;
};

/// A quantum state: Hermitian, PSD within eps_psd, trace one within eps_trace.
class DensityMatrix {
 public:
  DensityMatrix() = default;

  explicit DensityMatrix(const ComplexMatrix& m, const ToleranceConfig& tol = default_tolerances(),
                         const std::string& field = "state")
      : h_(m, tol.eps_herm, field) {
    if (min_eigenvalue(h_) < -tol.eps_psd) {
      throw ValidationError("not_psd", "density matrix is not positive semidefinite", field);
    }
    const double tr = h_.matrix().trace().real();
    if (std::abs(tr - 1.0) > tol.eps_trace) {
      throw ValidationError("bad_trace", "density matrix trace is " + std::to_string(tr) + ", expected 1", field);
    }
  }

  static DensityMatrix from_diagonal(const std::vector<double>& probs) {
    RealVector v = Eigen::Map<const RealVector>(probs.data(), static_cast<Index>(probs.size()));
    return DensityMatrix(diagonal_matrix(v));
  }

  static DensityMatrix basis_state(Index level, Index d) {
    if (level < 0 || level >= d) throw ValidationError("out_of_range", "level out of range", "level");
    ComplexMatrix m = ComplexMatrix::Zero(d, d);
    m(level, level) = 1.0;
    return DensityMatrix(m);
  }

  const ComplexMatrix& matrix() const noexcept { return h_.matrix(); }
  const HermitianMatrix& hermitian() const noexcept { return h_; }
  Index dim() const noexcept { return h_.dim(); }
  Complex operator()(Index i, Index j) const { return h_(i, j); }
  RealVector populations() const { return real_diagonal(h_.matrix()); }

 private:
  HermitianMatrix h_;
};

/// Nonincreasing probability vector; the diagonal of a passive state.
class PassiveDistribution {
 public:
  PassiveDistribution() = default;

  explicit PassiveDistribution(const RealVector& probs, double tol = default_tolerances().eps_cert,
                               const std::string& field = "tau")
      : p_(probs) {
    if (p_.size() == 0) throw ValidationError("empty_distribution", "distribution must be non-empty", field);
    if (!p_.allFinite()) throw ValidationError("non_finite", "distribution has non-finite entries", field);
    if (p_.minCoeff() < -tol) throw ValidationError("negative_probability", "negative probability", field);
    if (std::abs(p_.sum() - 1.0) > tol) {
      throw ValidationError("bad_normalization", "probabilities must sum to 1", field);
    }
    for (Index i = 1; i < p_.size(); ++i) {
      if (p_(i) > p_(i - 1) + tol) {
        throw ValidationError("not_passive", "populations must be nonincreasing in energy", field);
      }
    }
    // Remove rounding-level violations so downstream states are exactly valid.
    for (Index i = 0; i < p_.size(); ++i) p_(i) = std::max(p_(i), 0.0);
    for (Index i = 1; i < p_.size(); ++i) p_(i) = std::min(p_(i), p_(i - 1));
    const double sum = p_.sum();
    if (std::abs(sum - 1.0) > 4.0 * std::numeric_limits<double>::epsilon()) p_ /= sum;
  }

  Index dim() const noexcept { return p_.size(); }
  const RealVector& probs() const noexcept { return p_; }
  double operator[](Index i) const { return p_(i); }
  ComplexMatrix matrix() const { return diagonal_matrix(p_); }
  DensityMatrix state() const { return DensityMatrix(matrix()); }

 private:
  RealVector p_;
};

inline void require_same_dim(const DensityMatrix& rho, const HamiltonianSpectrum& h) {
  require_same_dim(rho.dim(), h.dim(), "hamiltonian");
}

/// Passive iff diagonal in the energy basis with populations nonincreasing in
/// energy. `tol` bounds each off-diagonal magnitude and each adjacent
/// population increase.
inline bool is_passive(const DensityMatrix& rho, const HamiltonianSpectrum& h,
                       double tol = default_tolerances().eps_psd) {
  require_same_dim(rho, h);
  const Index d = rho.dim();
  for (Index i = 0; i < d; ++i) {
    for (Index j = 0; j < d; ++j) {
      if (i != j && std::abs(rho(i, j)) > tol) return false;
    }
  }
  for (Index i = 0; i + 1 < d; ++i) {
    if (rho(i + 1, i + 1).real() > rho(i, i).real() + tol) return false;
  }
  return true;
}

/// Spectrum-free variant; levels are assumed to be in increasing energy order.
inline bool is_passive(const DensityMatrix& rho, double tol = default_tolerances().eps_psd) {
  return is_passive(rho, HamiltonianSpectrum::ladder(rho.dim()), tol);
}

/// tau_j: uniform mixture of the j lowest levels, 1 <= j <= d.
inline DensityMatrix extreme_passive(Index j, Index d) {
  if (d < 1 || j < 1 || j > d) {
    throw ValidationError("out_of_range", "extreme passive index must satisfy 1 <= j <= d", "j");
  }
  ComplexMatrix m = ComplexMatrix::Zero(d, d);
  for (Index i = 0; i < j; ++i) m(i, i) = 1.0 / static_cast<double>(j);
  return DensityMatrix(m);
}

/// Diagonal of tau_j as a real vector.
inline RealVector extreme_passive_diagonal(Index j, Index d) {
  RealVector v = RealVector::Zero(d);
  v.head(j).setConstant(1.0 / static_cast<double>(j));
  return v;
}

inline double average_energy(const DensityMatrix& rho, const HamiltonianSpectrum& h) {
  require_same_dim(rho, h);
  double e = 0.0;
  for (Index i = 0; i < rho.dim(); ++i) e += h[i] * rho(i, i).real();
  return e;
}

/// The passive state with rho's spectrum: eigenvalues in descending order
/// placed on ascending energies.
inline DensityMatrix passive_rearrangement(const DensityMatrix& rho, const HamiltonianSpectrum& h) {
  require_same_dim(rho, h);
  RealVector lambda = eig_hermitian(rho.hermitian()).values;  // ascending
  RealVector sorted = lambda.reverse();
  for (Index i = 0; i < sorted.size(); ++i) sorted(i) = std::max(sorted(i), 0.0);
  sorted /= sorted.sum();
  return DensityMatrix(diagonal_matrix(sorted));
}

/// Maximum average energy extractable by a unitary, in closed form:
/// <H>_rho - sum_i lambda_i^(desc) E_i^(asc).
inline double ergotropy(const DensityMatrix& rho, const HamiltonianSpectrum& h) {
  require_same_dim(rho, h);
  const RealVector lambda = eig_hermitian(rho.hermitian()).values;
  const Index d = rho.dim();
  double passive_energy = 0.0;
  for (Index i = 0; i < d; ++i) passive_energy += lambda(d - 1 - i) * h[i];
  return std::max(average_energy(rho, h) - passive_energy, 0.0);
}

/// |phi_+><phi_+| with |phi_+> = sum_i |i> / sqrt(d).
inline DensityMatrix maximally_coherent(Index d) {
  if (d < 1) throw ValidationError("out_of_range", "dimension must be at least 1", "d");
  return DensityMatrix(all_ones(d) / static_cast<double>(d));
}

/// U_t = exp(-i t H), diagonal in the energy basis.
inline ComplexMatrix time_evolution(const HamiltonianSpectrum& h, double t) {
  ComplexVector phases(h.dim());
  for (Index i = 0; i < h.dim(); ++i) phases(i) = std::polar(1.0, -t * h[i]);
  return phases.asDiagonal();
}

/// Von Neumann entropy in bits.
inline double von_neumann_entropy(const DensityMatrix& rho) {
  const RealVector lambda = eig_hermitian(rho.hermitian()).values;
  double s = 0.0;
  for (Index i = 0; i < lambda.size(); ++i) {
    if (lambda(i) > 0.0) s -= lambda(i) * std::log2(lambda(i));
  }
  return s;
}

}  // namespace activeres

#endif  // ACTIVERES_STATES_HPP
