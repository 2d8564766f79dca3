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

#ifndef ACTIVERES_CONVERTIBILITY_HPP
#define ACTIVERES_CONVERTIBILITY_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "activeres/channels.hpp"
#include "activeres/hermitian.hpp"
#include "activeres/random.hpp"
#include "activeres/states.hpp"

namespace activeres {

enum class Verdict { Convertible, NotConvertible, Unknown };
enum class Regime { Diagonal, FullCoherence, General };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Convertible:
      return "Convertible";
    case Verdict::NotConvertible:
      return "NotConvertible";
    case Verdict::Unknown:
      return "Unknown";
  }
  return "?";
}

inline const char* to_string(Regime r) {
  switch (r) {
    case Regime::Diagonal:
      return "Diagonal";
    case Regime::FullCoherence:
      return "FullCoherence";
    case Regime::General:
      return "General";
  }
  return "?";
}

/// Adjacent population gaps rho_mm - rho_{m+1,m+1}, m = 0..d-2.
struct GapVector {
  RealVector deltas;

  static GapVector of(const DensityMatrix& rho) {
    const RealVector pops = rho.populations();
    GapVector g;
    g.deltas = RealVector(std::max<Index>(pops.size() - 1, 0));
    for (Index m = 0; m + 1 < pops.size(); ++m) g.deltas(m) = pops(m) - pops(m + 1);
    return g;
  }
};

struct PBounds {
  double p_minus = -std::numeric_limits<double>::infinity();
  double p_plus = std::numeric_limits<double>::infinity();
};

struct ConvertibilityReport {
  Verdict verdict = Verdict::Unknown;
  Regime regime = Regime::General;
  std::optional<std::pair<double, double>> feasible_p_interval;
  std::optional<EpcprChannel> certificate;
  PBounds bounds;
  /// The condition list as printed in the main text (with a union of
  /// intervals and no p_- coupling) gives a different verdict.
  bool literal_reading_disagrees = false;
  int trials_used = 0;
  std::string reason;
};

inline constexpr double kDefaultConvertTol = 1e-10;

/// p_+ = min over gaps Delta >= 0 of Delta'/Delta, p_- = max over Delta < 0.
/// |Delta| <= tol counts as Delta = 0: then the pair gives sign(Delta') * inf
/// in the minimum, or nothing at all if Delta' is zero as well.
inline PBounds p_bounds(const DensityMatrix& rho, const DensityMatrix& rho_prime, double tol = kDefaultConvertTol) {
  require_same_dim(rho.dim(), rho_prime.dim(), "rho_prime");
  const RealVector delta = GapVector::of(rho).deltas;
  const RealVector delta_prime = GapVector::of(rho_prime).deltas;
  PBounds b;
  for (Index m = 0; m < delta.size(); ++m) {
    if (std::abs(delta(m)) <= tol) {
      if (delta_prime(m) < -tol) b.p_plus = -std::numeric_limits<double>::infinity();
      continue;
    }
    const double ratio = delta_prime(m) / delta(m);
    if (delta(m) > 0.0) {
      b.p_plus = std::min(b.p_plus, ratio);
    } else {
      b.p_minus = std::max(b.p_minus, ratio);
    }
  }
  return b;
}

inline bool is_diagonal(const ComplexMatrix& m, double tol) {
  for (Index i = 0; i < m.rows(); ++i) {
    for (Index j = 0; j < m.cols(); ++j) {
      if (i != j && std::abs(m(i, j)) > tol) return false;
    }
  }
  return true;
}

inline bool has_full_coherence(const ComplexMatrix& m, double tol) {
  for (Index i = 0; i < m.rows(); ++i) {
    for (Index j = 0; j < m.cols(); ++j) {
      if (i != j && std::abs(m(i, j)) <= tol) return false;
    }
  }
  return true;
}

/// R_mn = rho'_mn / rho_mn off the diagonal, zero on it.
inline ComplexMatrix ratio_matrix(const DensityMatrix& rho, const DensityMatrix& rho_prime,
                                  double tol = kDefaultConvertTol) {
  require_same_dim(rho.dim(), rho_prime.dim(), "rho_prime");
  const Index d = rho.dim();
  ComplexMatrix r = ComplexMatrix::Zero(d, d);
  for (Index m = 0; m < d; ++m) {
    for (Index n = 0; n < d; ++n) {
      if (m == n) continue;
      if (std::abs(rho(m, n)) <= tol) {
        throw ValidationError("partial_ratio_matrix",
                              "rho has a vanishing coherence at (" + std::to_string(m) + ", " + std::to_string(n) +
                                  "); R is only partially determined",
                              "rho");
      }
      r(m, n) = rho_prime(m, n) / rho(m, n);
    }
  }
  return 0.5 * (r + r.adjoint());
}

inline double certificate_error(const DensityMatrix& rho, const DensityMatrix& rho_prime, const EpcprChannel& chan) {
  require_same_dim(rho.dim(), chan.dim(), "certificate");
  require_same_dim(rho.dim(), rho_prime.dim(), "rho_prime");
  return frobenius_distance(apply_epcpr_raw(chan, rho.matrix()), rho_prime.matrix());
}

/// True iff the channel maps rho to rho' within tol (Frobenius).
inline bool verify_certificate(const DensityMatrix& rho, const DensityMatrix& rho_prime, const EpcprChannel& chan,
                               double tol = default_tolerances().eps_cert) {
  return certificate_error(rho, rho_prime, chan) <= tol;
}

namespace detail {

/// Largest p allowed by tau_d >= 0, i.e. p rho_dd <= rho'_dd.
inline double bottom_cap(const DensityMatrix& rho, const DensityMatrix& rho_prime) {
  const Index d = rho.dim();
  const double a = rho(d - 1, d - 1).real();
  const double b = rho_prime(d - 1, d - 1).real();
  return a > 0.0 ? std::max(b, 0.0) / a : std::numeric_limits<double>::infinity();
}

/// Certificate (p, R/p + I, (diag rho' - p diag rho)/(1-p)); nullopt if a
/// component fails validation.
inline std::optional<EpcprChannel> build_certificate(const DensityMatrix& rho, const DensityMatrix& rho_prime,
                                                     const ComplexMatrix& r, double p) {
  const Index d = rho.dim();
  try {
    ComplexMatrix xi = all_ones(d);
    if (p > 0.0) xi = r / p + ComplexMatrix::Identity(d, d);
    RealVector tau = extreme_passive_diagonal(1, d);
    if (p < 1.0) tau = (rho_prime.populations() - p * rho.populations()) / (1.0 - p);
    return EpcprChannel(p, CorrelationMatrix(xi), PassiveDistribution(tau));
  } catch (const ValidationError&) {
    return std::nullopt;
  }
}

/// Tries the midpoint, then the endpoints, of [lo, hi] and keeps the first
/// certificate that reproduces rho'.
inline std::optional<EpcprChannel> certify_interval(const DensityMatrix& rho, const DensityMatrix& rho_prime,
                                                    const ComplexMatrix& r, double lo, double hi) {
  lo = std::clamp(lo, 0.0, 1.0);
  hi = std::clamp(hi, lo, 1.0);
  for (double p : {0.5 * (lo + hi), lo, hi}) {
    auto chan = build_certificate(rho, rho_prime, r, p);
    if (chan && verify_certificate(rho, rho_prime, *chan)) return chan;
  }
  return std::nullopt;
}

inline void decide_interval(ConvertibilityReport& report, const DensityMatrix& rho, const DensityMatrix& rho_prime,
                            const ComplexMatrix& r, double lo, double hi, double tol) {
  if (lo > hi + tol) {
    report.verdict = Verdict::NotConvertible;
    report.reason = "no p satisfies all conditions";
    return;
  }
  report.feasible_p_interval = std::make_pair(lo, std::max(lo, hi));
  report.certificate = certify_interval(rho, rho_prime, r, lo, hi);
  if (report.certificate) {
    report.verdict = Verdict::Convertible;
  } else {
    report.verdict = Verdict::Unknown;
    report.reason = "conditions hold but no certificate reproduced the target within tolerance";
  }
}

}  // namespace detail

/// Diagonal input: convertible iff rho' is diagonal and some p in [0, 1]
/// satisfies p_- <= p <= p_+ and p rho_dd <= rho'_dd.
inline ConvertibilityReport decide_diagonal(const DensityMatrix& rho, const DensityMatrix& rho_prime,
                                            double tol = kDefaultConvertTol) {
  require_same_dim(rho.dim(), rho_prime.dim(), "rho_prime");
  if (!is_diagonal(rho.matrix(), tol)) {
    throw ValidationError("regime_mismatch", "input state is not diagonal", "rho");
  }
  ConvertibilityReport report;
  report.regime = Regime::Diagonal;
  report.bounds = p_bounds(rho, rho_prime, tol);
  const PBounds& b = report.bounds;
  const bool literal = is_diagonal(rho_prime.matrix(), tol) && b.p_minus <= b.p_plus &&
                       std::max(b.p_minus, 0.0) <= std::min(b.p_plus, 1.0);
  if (!is_diagonal(rho_prime.matrix(), tol)) {
    report.verdict = Verdict::NotConvertible;
    report.reason = "target is not diagonal";
  } else {
    const double lo = std::max(b.p_minus, 0.0);
    const double hi = std::min({b.p_plus, 1.0, detail::bottom_cap(rho, rho_prime)});
    detail::decide_interval(report, rho, rho_prime, ComplexMatrix::Zero(rho.dim(), rho.dim()), lo, hi, tol);
  }
  report.literal_reading_disagrees = literal != (report.verdict == Verdict::Convertible);
  return report;
}

/// Input with every coherence nonzero: convertible iff
/// max(p_-, -lambda_min(R), 0) <= min(p_+, 1, rho'_dd / rho_dd).
inline ConvertibilityReport decide_full_coherence(const DensityMatrix& rho, const DensityMatrix& rho_prime,
                                                  double tol = kDefaultConvertTol) {
  require_same_dim(rho.dim(), rho_prime.dim(), "rho_prime");
  if (!has_full_coherence(rho.matrix(), tol)) {
    throw ValidationError("regime_mismatch", "input state has a vanishing coherence", "rho");
  }
  const ComplexMatrix r = ratio_matrix(rho, rho_prime, tol);
  const double lambda_min = min_eigenvalue_unchecked(r);
  ConvertibilityReport report;
  report.regime = Regime::FullCoherence;
  report.bounds = p_bounds(rho, rho_prime, tol);
  const PBounds& b = report.bounds;
  const double lo = std::max({b.p_minus, -lambda_min, 0.0});
  const double hi = std::min({b.p_plus, 1.0, detail::bottom_cap(rho, rho_prime)});
  detail::decide_interval(report, rho, rho_prime, r, lo, hi, tol);
  const bool literal = b.p_minus <= b.p_plus && lambda_min >= -std::min(b.p_plus, 1.0);
  report.literal_reading_disagrees = literal != (report.verdict == Verdict::Convertible);
  return report;
}

/// Any input. Diagonal and fully coherent inputs go to the exact deciders.
/// Otherwise the entries of R at vanishing coherences are free: trial 0 sets
/// them to zero, later trials draw modulus in [0, 1] and phase in [0, 2pi)
/// from a per-trial seed. NotConvertible is returned only when a condition
/// that does not involve the free entries already fails.
inline ConvertibilityReport decide_general(const DensityMatrix& rho, const DensityMatrix& rho_prime, int trials,
                                           std::uint64_t seed, double tol = kDefaultConvertTol) {
  require_same_dim(rho.dim(), rho_prime.dim(), "rho_prime");
  if (trials < 1) throw ValidationError("invalid_trials", "trials must be at least 1", "trials");
  if (is_diagonal(rho.matrix(), tol)) return decide_diagonal(rho, rho_prime, tol);
  if (has_full_coherence(rho.matrix(), tol)) return decide_full_coherence(rho, rho_prime, tol);

  const Index d = rho.dim();
  ConvertibilityReport report;
  report.regime = Regime::General;
  report.bounds = p_bounds(rho, rho_prime, tol);
  const PBounds& b = report.bounds;

  ComplexMatrix known = ComplexMatrix::Zero(d, d);
  std::vector<std::pair<Index, Index>> free_entries;
  for (Index m = 0; m < d; ++m) {
    for (Index n = m + 1; n < d; ++n) {
      if (std::abs(rho(m, n)) > tol) {
        known(m, n) = rho_prime(m, n) / rho(m, n);
        known(n, m) = std::conj(known(m, n));
      } else if (std::abs(rho_prime(m, n)) > tol) {
        report.verdict = Verdict::NotConvertible;
        report.reason = "target has coherence where the input has none";
        return report;
      } else {
        free_entries.emplace_back(m, n);
      }
    }
  }
  const double lo_pop = std::max(b.p_minus, 0.0);
  const double hi = std::min({b.p_plus, 1.0, detail::bottom_cap(rho, rho_prime)});
  if (lo_pop > hi + tol) {
    report.verdict = Verdict::NotConvertible;
    report.reason = "population conditions admit no p";
    return report;
  }

  for (int t = 0; t < trials; ++t) {
    ComplexMatrix r = known;
    if (t > 0) {
      Rng rng(derive_seed(seed, static_cast<std::uint64_t>(t)));
      for (const auto& [m, n] : free_entries) {
        const double modulus = uniform01(rng);
        const double phase = 2.0 * std::numbers::pi * uniform01(rng);
        r(m, n) = std::polar(modulus, phase);
        r(n, m) = std::conj(r(m, n));
      }
    }
    const double lo = std::max(lo_pop, -min_eigenvalue_unchecked(r));
    report.trials_used = t + 1;
    if (lo > hi + tol) continue;
    auto chan = detail::certify_interval(rho, rho_prime, r, lo, hi);
    if (chan) {
      report.verdict = Verdict::Convertible;
      report.feasible_p_interval = std::make_pair(lo, std::max(lo, hi));
      report.certificate = std::move(chan);
      return report;
    }
  }
  report.verdict = Verdict::Unknown;
  report.reason = "no sampled completion of R admitted a certificate";
  return report;
}

}  // namespace activeres

#endif  // ACTIVERES_CONVERTIBILITY_HPP
