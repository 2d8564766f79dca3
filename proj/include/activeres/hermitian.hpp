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

#ifndef ACTIVERES_HERMITIAN_HPP
#define ACTIVERES_HERMITIAN_HPP

#include <cmath>
#include <complex>
#include <string>
#include <utility>

#include <Eigen/Dense>

#include "activeres/errors.hpp"

namespace activeres {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;
using Index = Eigen::Index;

/// Absolute tolerances used across the library. Dimensions are small
/// (d <= ~16) and entries are O(1), so absolute thresholds are adequate.
struct ToleranceConfig {
  double eps_herm = 1e-9;
  double eps_psd = 1e-9;
  double eps_trace = 1e-9;
  double eps_solver = 1e-8;
  double eps_cert = 1e-9;

  void validate() const {
    if (!(eps_herm > 0 && eps_psd > 0 && eps_trace > 0 && eps_solver > 0 && eps_cert > 0)) {
      throw ValidationError("invalid_tolerance", "all tolerances must be strictly positive", "tolerance");
    }
  }
};

inline const ToleranceConfig& default_tolerances() {
  static const ToleranceConfig config{};
  return config;
}

/// max_{ij} |A_ij - conj(A_ji)|
inline double hermiticity_defect(const ComplexMatrix& a) {
  if (a.rows() != a.cols()) return INFINITY;
  return (a - a.adjoint()).cwiseAbs().maxCoeff();
}

inline void require_square(const ComplexMatrix& a, const std::string& field) {
  if (a.rows() != a.cols() || a.rows() == 0) {
    throw ValidationError("not_square", "matrix must be square and non-empty", field);
  }
  if (!a.allFinite()) {
    throw ValidationError("non_finite", "matrix has non-finite entries", field);
  }
}

inline void require_same_dim(Index a, Index b, const std::string& field) {
  if (a != b) {
    throw ValidationError("dimension_mismatch",
                          "dimension mismatch: " + std::to_string(a) + " vs " + std::to_string(b), field);
  }
}

/// A complex matrix known to be Hermitian within eps_herm. The stored matrix
/// is symmetrized, (A + A^dagger)/2, so downstream code sees exact symmetry.
class HermitianMatrix {
 public:
  HermitianMatrix() = default;

  explicit HermitianMatrix(const ComplexMatrix& a, double tol = default_tolerances().eps_herm,
                           const std::string& field = "matrix") {
    require_square(a, field);
    if (hermiticity_defect(a) > tol) {
      throw ValidationError("non_hermitian", "matrix is not Hermitian within tolerance", field);
    }
    m_ = 0.5 * (a + a.adjoint());
  }

  const ComplexMatrix& matrix() const noexcept { return m_; }
  Index dim() const noexcept { return m_.rows(); }
  Complex operator()(Index i, Index j) const { return m_(i, j); }

 private:
  ComplexMatrix m_;
};

struct EigenDecomposition {
  RealVector values;     // ascending
  ComplexMatrix vectors;  // column k pairs with values(k)
};

inline EigenDecomposition eig_hermitian(const HermitianMatrix& a) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(a.matrix());
  if (solver.info() != Eigen::Success) {
    throw ValidationError("eig_failed", "Hermitian eigendecomposition did not converge");
  }
  return {solver.eigenvalues(), solver.eigenvectors()};
}

/// Eigendecomposition of a raw matrix that the caller guarantees to be
/// Hermitian up to rounding. Only the lower triangle is read.
inline EigenDecomposition eig_hermitian_unchecked(const ComplexMatrix& a) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(a);
  return {solver.eigenvalues(), solver.eigenvectors()};
}

inline double min_eigenvalue(const HermitianMatrix& a) {
  return Eigen::SelfAdjointEigenSolver<ComplexMatrix>(a.matrix(), Eigen::EigenvaluesOnly).eigenvalues()(0);
}

inline double min_eigenvalue_unchecked(const ComplexMatrix& a) {
  return Eigen::SelfAdjointEigenSolver<ComplexMatrix>(a, Eigen::EigenvaluesOnly).eigenvalues()(0);
}

inline bool is_psd(const HermitianMatrix& a, double tol = default_tolerances().eps_psd) {
  return min_eigenvalue(a) >= -tol;
}

inline ComplexMatrix schur_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw ValidationError("dimension_mismatch", "Schur product needs equal shapes", "matrix");
  }
  return a.cwiseProduct(b);
}

inline ComplexMatrix all_ones(Index d) { return ComplexMatrix::Ones(d, d); }

inline double frobenius_distance(const ComplexMatrix& a, const ComplexMatrix& b) { return (a - b).norm(); }

/// Tr[A B] for Hermitian A, B (real part; the imaginary part vanishes).
inline double trace_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  return a.cwiseProduct(b.transpose()).sum().real();
}

/// Diagonal matrix with the given real entries.
inline ComplexMatrix diagonal_matrix(const RealVector& diag) {
  return diag.cast<Complex>().asDiagonal();
}

inline RealVector real_diagonal(const ComplexMatrix& a) { return a.diagonal().real(); }

}  // namespace activeres

#endif  // ACTIVERES_HERMITIAN_HPP
