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

#ifndef ACTIVERES_CHANNELS_HPP
#define ACTIVERES_CHANNELS_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "activeres/hermitian.hpp"
#include "activeres/random.hpp"
#include "activeres/states.hpp"

namespace activeres {

// ---------------------------------------------------------------------------
// Channel data
// ---------------------------------------------------------------------------

/// PSD with unit diagonal. Energy-preserving channels (non-degenerate H) are
/// exactly the maps rho -> xi (.) rho for such xi.
class CorrelationMatrix {
 public:
  CorrelationMatrix() = default;

  explicit CorrelationMatrix(const ComplexMatrix& m, const ToleranceConfig& tol = default_tolerances(),
                             const std::string& field = "xi")
      : h_(m, tol.eps_herm, field) {
    if (min_eigenvalue(h_) < -tol.eps_psd) {
      throw ValidationError("not_psd", "correlation matrix is not positive semidefinite", field);
    }
    for (Index i = 0; i < h_.dim(); ++i) {
      if (std::abs(h_(i, i).real() - 1.0) > tol.eps_cert) {
        throw ValidationError("bad_diagonal", "correlation matrix must have unit diagonal", field);
      }
    }
    ComplexMatrix exact = h_.matrix();
    exact.diagonal().setOnes();
    h_ = HermitianMatrix(exact);
  }

  static CorrelationMatrix identity_channel(Index d) { return CorrelationMatrix(all_ones(d)); }
  static CorrelationMatrix dephasing(Index d) { return CorrelationMatrix(ComplexMatrix::Identity(d, d)); }

  const ComplexMatrix& matrix() const noexcept { return h_.matrix(); }
  Index dim() const noexcept { return h_.dim(); }

 private:
  HermitianMatrix h_;
};

/// PSD with diagonal at most one: trace-non-increasing energy-preserving
/// operations rho -> xi (.) rho.
class SubCorrelationMatrix {
 public:
  SubCorrelationMatrix() = default;

  explicit SubCorrelationMatrix(const ComplexMatrix& m, const ToleranceConfig& tol = default_tolerances(),
                                const std::string& field = "xi")
      : h_(m, tol.eps_herm, field) {
    if (min_eigenvalue(h_) < -tol.eps_psd) {
      throw ValidationError("not_psd", "sub-correlation matrix is not positive semidefinite", field);
    }
    for (Index i = 0; i < h_.dim(); ++i) {
      if (h_(i, i).real() > 1.0 + tol.eps_cert) {
        throw ValidationError("bad_diagonal", "sub-correlation matrix diagonal must be <= 1", field);
      }
    }
  }

  SubCorrelationMatrix(const CorrelationMatrix& xi) : h_(xi.matrix()) {}  // NOLINT(implicit)

  const ComplexMatrix& matrix() const noexcept { return h_.matrix(); }
  Index dim() const noexcept { return h_.dim(); }

 private:
  HermitianMatrix h_;
};

/// rho -> p (xi (.) rho) + (1 - p) diag(tau)
struct EpcprChannel {
  double p = 1.0;
  CorrelationMatrix xi;
  PassiveDistribution tau;

  EpcprChannel() = default;
  EpcprChannel(double p_, CorrelationMatrix xi_, PassiveDistribution tau_)
      : p(p_), xi(std::move(xi_)), tau(std::move(tau_)) {
    if (!(p >= 0.0 && p <= 1.0)) throw ValidationError("out_of_range", "p must lie in [0, 1]", "p");
    require_same_dim(xi.dim(), tau.dim(), "tau");
  }

  Index dim() const noexcept { return xi.dim(); }
};

/// Measure-and-prepare channel rho -> sum_j Tr[P_j rho] tau_j.
class ActivityBreakingChannel {
 public:
  ActivityBreakingChannel() = default;

  explicit ActivityBreakingChannel(std::vector<ComplexMatrix> povm, const ToleranceConfig& tol = default_tolerances())
      : povm_(std::move(povm)) {
    if (povm_.empty()) throw ValidationError("invalid_povm", "POVM must be non-empty", "povm");
    const Index d = povm_.front().rows();
    if (static_cast<Index>(povm_.size()) != d) {
      throw ValidationError("invalid_povm", "POVM must have exactly d effects", "povm");
    }
    ComplexMatrix sum = ComplexMatrix::Zero(d, d);
    for (std::size_t j = 0; j < povm_.size(); ++j) {
      const std::string field = "povm[" + std::to_string(j) + "]";
      require_same_dim(povm_[j].rows(), d, field);
      HermitianMatrix effect(povm_[j], tol.eps_herm, field);
      if (min_eigenvalue(effect) < -tol.eps_psd) {
        throw ValidationError("invalid_povm", "POVM effect is not positive semidefinite", field);
      }
      povm_[j] = effect.matrix();
      sum += povm_[j];
    }
    if ((sum - ComplexMatrix::Identity(d, d)).norm() > tol.eps_cert * static_cast<double>(d)) {
      throw ValidationError("invalid_povm", "POVM effects do not sum to the identity", "povm");
    }
  }

  /// Projective measurement onto the columns of a unitary.
  static ActivityBreakingChannel from_basis(const ComplexMatrix& unitary) {
    std::vector<ComplexMatrix> effects;
    for (Index j = 0; j < unitary.cols(); ++j) effects.push_back(unitary.col(j) * unitary.col(j).adjoint());
    return ActivityBreakingChannel(std::move(effects));
  }

  const std::vector<ComplexMatrix>& povm() const noexcept { return povm_; }
  Index dim() const noexcept { return povm_.empty() ? 0 : povm_.front().rows(); }

 private:
  std::vector<ComplexMatrix> povm_;
};

// ---------------------------------------------------------------------------
// Channel application
// ---------------------------------------------------------------------------

inline DensityMatrix apply_energy_preserving(const CorrelationMatrix& xi, const DensityMatrix& rho) {
  require_same_dim(xi.dim(), rho.dim(), "state");
  ComplexMatrix out = schur_product(xi.matrix(), rho.matrix());
  out.diagonal() = rho.matrix().diagonal();
  return DensityMatrix(out);
}

struct EpOperationOutput {
  ComplexMatrix matrix;  // unnormalized xi (.) rho
  double success_prob = 0.0;
};

inline EpOperationOutput apply_ep_operation(const SubCorrelationMatrix& xi, const DensityMatrix& rho) {
  require_same_dim(xi.dim(), rho.dim(), "state");
  EpOperationOutput out;
  out.matrix = schur_product(xi.matrix(), rho.matrix());
  out.success_prob = out.matrix.trace().real();
  return out;
}

inline ComplexMatrix apply_epcpr_raw(const EpcprChannel& chan, const ComplexMatrix& rho) {
  ComplexMatrix out = chan.p * schur_product(chan.xi.matrix(), rho);
  out += (1.0 - chan.p) * Complex(rho.trace()) * chan.tau.matrix();
  return out;
}

inline DensityMatrix apply_epcpr(const EpcprChannel& chan, const DensityMatrix& rho) {
  require_same_dim(chan.dim(), rho.dim(), "state");
  return DensityMatrix(apply_epcpr_raw(chan, rho.matrix()));
}

/// Populations of the four fixed output states of the d = 4 passivity-preserving,
/// ergotropy-increasing channel rho -> sum_k <k|rho|k> gamma_k.
inline const std::array<std::array<double, 4>, 4>& counterexample_outputs() {
  static const std::array<std::array<double, 4>, 4> gammas = {{
      {1.0, 0.0, 0.0, 0.0},
      {2.0 / 3.0, 1.0 / 3.0, 0.0, 0.0},
      {1.0 / 3.0, 2.0 / 3.0, 0.0, 0.0},
      {0.0, 1.0, 0.0, 0.0},
  }};
  return gammas;
}

inline ComplexMatrix counterexample_raw(const ComplexMatrix& x) {
  if (x.rows() != 4 || x.cols() != 4) {
    throw ValidationError("dimension_mismatch", "the counterexample channel is defined for d = 4 only", "state");
  }
  const auto& gammas = counterexample_outputs();
  ComplexMatrix out = ComplexMatrix::Zero(4, 4);
  for (Index k = 0; k < 4; ++k) {
    for (Index i = 0; i < 4; ++i) out(i, i) += x(k, k) * gammas[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)];
  }
  return out;
}

inline DensityMatrix counterexample_channel(const DensityMatrix& rho) {
  return DensityMatrix(counterexample_raw(rho.matrix()));
}

/// Canonical passivization, extended linearly to all matrices:
/// X -> sum_i X_ii tau_i.
inline ComplexMatrix passivization_raw(const ComplexMatrix& x) {
  const Index d = x.rows();
  ComplexVector acc = ComplexVector::Zero(d);
  for (Index i = 0; i < d; ++i) {
    const Complex w = x(i, i) / static_cast<double>(i + 1);
    for (Index k = 0; k <= i; ++k) acc(k) += w;
  }
  return acc.asDiagonal();
}

inline DensityMatrix passivization(const DensityMatrix& rho) { return DensityMatrix(passivization_raw(rho.matrix())); }

inline DensityMatrix apply_activity_breaking(const ActivityBreakingChannel& chan, const DensityMatrix& rho) {
  require_same_dim(chan.dim(), rho.dim(), "state");
  const Index d = rho.dim();
  RealVector out = RealVector::Zero(d);
  for (Index j = 0; j < d; ++j) {
    const double pj = std::max(trace_product(chan.povm()[static_cast<std::size_t>(j)], rho.matrix()), 0.0);
    out += pj * extreme_passive_diagonal(j + 1, d);
  }
  out /= out.sum();
  return DensityMatrix(diagonal_matrix(out));
}

// ---------------------------------------------------------------------------
// Generic linear maps (covariance checks)
// ---------------------------------------------------------------------------

/// A linear map on d x d matrices, stored as its images of the matrix units
/// E_ij = |i><j| (index i * d + j).
class LinearMap {
 public:
  LinearMap() = default;

  LinearMap(Index d, std::vector<ComplexMatrix> images) : d_(d), images_(std::move(images)) {
    if (d < 1 || static_cast<Index>(images_.size()) != d * d) {
      throw ValidationError("invalid_map", "a linear map needs d*d matrix-unit images", "map");
    }
    for (const auto& m : images_) {
      if (m.rows() != d || m.cols() != d) {
        throw ValidationError("dimension_mismatch", "matrix-unit image has the wrong shape", "map");
      }
    }
  }

  static LinearMap from_function(Index d, const std::function<ComplexMatrix(const ComplexMatrix&)>& f) {
    std::vector<ComplexMatrix> images;
    images.reserve(static_cast<std::size_t>(d * d));
    for (Index i = 0; i < d; ++i) {
      for (Index j = 0; j < d; ++j) images.push_back(f(matrix_unit(d, i, j)));
    }
    return LinearMap(d, std::move(images));
  }

  static ComplexMatrix matrix_unit(Index d, Index i, Index j) {
    ComplexMatrix e = ComplexMatrix::Zero(d, d);
    e(i, j) = 1.0;
    return e;
  }

  Index dim() const noexcept { return d_; }
  const ComplexMatrix& image(Index i, Index j) const { return images_[static_cast<std::size_t>(i * d_ + j)]; }

  ComplexMatrix operator()(const ComplexMatrix& x) const {
    require_same_dim(x.rows(), d_, "matrix");
    ComplexMatrix out = ComplexMatrix::Zero(d_, d_);
    for (Index i = 0; i < d_; ++i) {
      for (Index j = 0; j < d_; ++j) {
        if (x(i, j) != Complex(0.0)) out += x(i, j) * image(i, j);
      }
    }
    return out;
  }

  /// Hilbert-Schmidt adjoint: Tr[A^dagger M(B)] = Tr[M^dagger(A)^dagger B].
  LinearMap adjoint() const {
    return from_function(d_, [this](const ComplexMatrix& a) {
      ComplexMatrix out(d_, d_);
      for (Index i = 0; i < d_; ++i) {
        for (Index j = 0; j < d_; ++j) out(i, j) = image(i, j).cwiseProduct(a.conjugate()).sum();
      }
      return ComplexMatrix(out.conjugate());
    });
  }

 private:
  Index d_ = 0;
  std::vector<ComplexMatrix> images_;
};

inline LinearMap energy_preserving_map(const ComplexMatrix& xi) {
  return LinearMap::from_function(xi.rows(), [&xi](const ComplexMatrix& x) { return schur_product(xi, x); });
}

inline LinearMap counterexample_map() { return LinearMap::from_function(4, counterexample_raw); }

inline LinearMap passivization_map(Index d) { return LinearMap::from_function(d, passivization_raw); }

/// Largest Frobenius norm of (Q o Pi - Pi o Q)(E_ij) over the matrix units.
inline double passivization_commutator_norm(const LinearMap& q) {
  const Index d = q.dim();
  double worst = 0.0;
  for (Index i = 0; i < d; ++i) {
    for (Index j = 0; j < d; ++j) {
      const ComplexMatrix e = LinearMap::matrix_unit(d, i, j);
      const ComplexMatrix lhs = q(passivization_raw(e));
      const ComplexMatrix rhs = passivization_raw(q.image(i, j));
      worst = std::max(worst, (lhs - rhs).norm());
    }
  }
  return worst;
}

inline bool is_passivization_covariant(const LinearMap& q, double tol = 1e-9) {
  return passivization_commutator_norm(q) <= tol;
}

// ---------------------------------------------------------------------------
// Seeded samplers
// ---------------------------------------------------------------------------

/// Gram matrix of random unit vectors; the vectors live in C^r with r drawn
/// uniformly from 1..d so that low-rank channels are sampled too.
inline CorrelationMatrix sample_correlation_matrix(Index d, Rng& rng) {
  const Index r = 1 + static_cast<Index>(std::uniform_int_distribution<long>(0, d - 1)(rng));
  ComplexMatrix v = ginibre(r, d, rng);
  for (Index j = 0; j < d; ++j) v.col(j).normalize();
  ComplexMatrix gram = v.adjoint() * v;
  gram.diagonal().setOnes();
  return CorrelationMatrix(0.5 * (gram + gram.adjoint()));
}

inline CorrelationMatrix sample_correlation_matrix(Index d, std::uint64_t seed) {
  Rng rng(seed);
  return sample_correlation_matrix(d, rng);
}

/// Gram matrix of random vectors with norms uniform in [0, 1].
inline SubCorrelationMatrix sample_subcorrelation_matrix(Index d, Rng& rng) {
  const Index r = 1 + static_cast<Index>(std::uniform_int_distribution<long>(0, d - 1)(rng));
  ComplexMatrix v = ginibre(r, d, rng);
  for (Index j = 0; j < d; ++j) v.col(j) *= std::sqrt(uniform01(rng)) / v.col(j).norm();
  ComplexMatrix gram = v.adjoint() * v;
  return SubCorrelationMatrix(0.5 * (gram + gram.adjoint()));
}

inline SubCorrelationMatrix sample_subcorrelation_matrix(Index d, std::uint64_t seed) {
  Rng rng(seed);
  return sample_subcorrelation_matrix(d, rng);
}

/// Sorted flat-Dirichlet draw.
inline PassiveDistribution sample_passive(Index d, Rng& rng) {
  RealVector w = flat_dirichlet(d, rng);
  std::sort(w.data(), w.data() + d, std::greater<>());
  return PassiveDistribution(w);
}

inline PassiveDistribution sample_passive(Index d, std::uint64_t seed) {
  Rng rng(seed);
  return sample_passive(d, rng);
}

inline EpcprChannel sample_epcpr(Index d, Rng& rng) {
  const double p = uniform01(rng);
  CorrelationMatrix xi = sample_correlation_matrix(d, rng);
  PassiveDistribution tau = sample_passive(d, rng);
  return EpcprChannel(p, std::move(xi), std::move(tau));
}

inline EpcprChannel sample_epcpr(Index d, std::uint64_t seed) {
  Rng rng(seed);
  return sample_epcpr(d, rng);
}

/// Normalized Wishart draw G G^dagger / Tr with G a d x rank Ginibre matrix.
inline DensityMatrix sample_density(Index d, Rng& rng, Index rank = -1) {
  if (rank <= 0 || rank > d) rank = d;
  const ComplexMatrix g = ginibre(d, rank, rng);
  ComplexMatrix w = g * g.adjoint();
  w /= w.trace().real();
  return DensityMatrix(0.5 * (w + w.adjoint()));
}

inline DensityMatrix sample_density(Index d, std::uint64_t seed, Index rank = -1) {
  Rng rng(seed);
  return sample_density(d, rng, rank);
}

/// Diagonal state with flat-Dirichlet (unsorted) populations.
inline DensityMatrix sample_diagonal_density(Index d, Rng& rng) {
  return DensityMatrix(diagonal_matrix(flat_dirichlet(d, rng)));
}

}  // namespace activeres

#endif  // ACTIVERES_CHANNELS_HPP
