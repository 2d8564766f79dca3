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

// Randomized property suites behind `activeres check`.

#ifndef ACTIVERES_SUITES_HPP
#define ACTIVERES_SUITES_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "activeres/channels.hpp"
#include "activeres/convertibility.hpp"
#include "activeres/monotones.hpp"
#include "activeres/random.hpp"
#include "activeres/states.hpp"
#include "activeres/witnesses.hpp"

namespace activeres {

/// One property: how often it was checked, how often it failed, and the
/// largest observed value of (lhs - rhs) for an inequality lhs <= rhs.
struct PropertyStats {
  long checks = 0;
  long failures = 0;
  double worst_slack = -std::numeric_limits<double>::infinity();
};

struct SuiteReport {
  explicit SuiteReport(std::string name = {}) : suite(std::move(name)) {}

  std::string suite;
  long instances = 0;
  std::map<std::string, PropertyStats> properties;
  std::vector<std::string> errors;  // exceptions raised while evaluating instances

  bool passed() const {
    if (!errors.empty()) return false;
    for (const auto& [name, s] : properties) {
      if (s.failures > 0) return false;
    }
    return true;
  }

  /// Record lhs <= rhs + tol. Infinite lhs passes only against infinite rhs.
  void expect_le(const std::string& name, double lhs, double rhs, double tol) {
    PropertyStats& s = properties[name];
    ++s.checks;
    double slack = lhs - rhs;
    if (std::isinf(rhs) && rhs > 0) slack = -std::numeric_limits<double>::infinity();
    if (std::isnan(slack)) slack = std::numeric_limits<double>::infinity();
    s.worst_slack = std::max(s.worst_slack, slack);
    if (!(slack <= tol)) ++s.failures;
  }

  void expect(const std::string& name, bool ok) { expect_le(name, ok ? 0.0 : 1.0, 0.0, 0.0); }

  void merge(const SuiteReport& other) {
    instances += other.instances;
    for (const auto& [name, s] : other.properties) {
      PropertyStats& mine = properties[other.suite + "/" + name];
      mine.checks += s.checks;
      mine.failures += s.failures;
      mine.worst_slack = std::max(mine.worst_slack, s.worst_slack);
    }
    for (const auto& e : other.errors) errors.push_back(other.suite + ": " + e);
  }
};

namespace detail {

template <class F>
void run_instances(SuiteReport& report, long n, std::uint64_t seed, F&& body) {
  for (long k = 0; k < n; ++k) {
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(k)));
    ++report.instances;
    try {
      body(k, rng);
    } catch (const Error& e) {
      report.errors.push_back("instance " + std::to_string(k) + ": " + e.code() + ": " + e.what());
    }
  }
}

}  // namespace detail

/// Activity quantifiers and ergotropy never increase under sampled EPCPR
/// channels, d = 2..5.
inline SuiteReport suite_second_law(long n, std::uint64_t seed) {
  SuiteReport report{"second-law"};
  const double slack = 1e-6;
  detail::run_instances(report, n, seed, [&](long k, Rng& rng) {
    const Index d = 2 + k % 4;
    const DensityMatrix rho = sample_density(d, rng, k % 5 == 0 ? 1 : -1);
    const EpcprChannel chan = sample_epcpr(d, rng);
    const DensityMatrix out = apply_epcpr(chan, rho);
    const HamiltonianSpectrum h = HamiltonianSpectrum::ladder(d);

    const MonotoneResult w_in = activity_weight(rho), w_out = activity_weight(out);
    const MonotoneResult r_in = robustness_of_activity(rho), r_out = robustness_of_activity(out);
    report.expect_le("weight", w_out.value, w_in.value, slack);
    report.expect_le("robustness", r_out.value, r_in.value, slack);
    report.expect_le("rmax-act", std::log2(r_out.value + 1.0), std::log2(r_in.value + 1.0), slack);
    const double inv_in = w_in.value >= 1.0 ? INFINITY : -std::log2(1.0 - w_in.value);
    const double inv_out = w_out.value >= 1.0 ? INFINITY : -std::log2(1.0 - w_out.value);
    report.expect_le("inv-rmax-act", inv_out, inv_in, slack);
    report.expect_le("relent-act", relent_activity(out).value, relent_activity(rho).value, slack);
    report.expect_le("ergotropy", ergotropy(out, h), ergotropy(rho, h), 1e-9);
  });
  return report;
}

/// Strong duality of the cutting-plane solver and validity of its dual
/// certificates, d = 1..6.
inline SuiteReport suite_duality(long n, std::uint64_t seed) {
  SuiteReport report{"duality"};
  detail::run_instances(report, n, seed, [&](long k, Rng& rng) {
    const Index d = 1 + k % 6;
    const DensityMatrix rho = sample_density(d, rng, k % 4 == 0 ? 1 + k % d : -1);

    const MonotoneResult r = robustness_of_activity(rho);
    report.expect_le("robustness-gap", r.gap, 0.0, 1e-7);
    report.expect_le("robustness-witness-psd", -min_eigenvalue_unchecked(r.witness), 0.0, 1e-9);
    report.expect_le("robustness-witness-partial-sums", max_passive_expectation(r.witness), 1.0, 1e-9);
    report.expect_le("robustness-dual-value", std::abs(trace_product(r.witness, rho.matrix()) - (r.value + 1.0)),
                     0.0, default_tolerances().eps_solver);

    const MonotoneResult w = activity_weight(rho);
    report.expect_le("weight-gap", w.gap, 0.0, 1e-7);

    const MonotoneResult c = max_relent_coherence(rho);
    report.expect_le("coherence-gap", c.gap, 0.0, 1e-7);
    report.expect_le("coherence-certificate", std::exp2(c.value) - trace_product(c.witness, rho.matrix()), 0.0,
                     1e-7);
    bool is_correlation = true;
    try {
      CorrelationMatrix xi(c.witness);
    } catch (const ValidationError&) {
      is_correlation = false;
    }
    report.expect("coherence-certificate-valid", is_correlation);
  });
  return report;
}

/// Pairs (rho, C(rho)) from sampled EPCPR channels are decided Convertible
/// with a verifying certificate in the diagonal and full-coherence regimes,
/// and decide_general agrees with the exact deciders there.
inline SuiteReport suite_convertibility(long n, std::uint64_t seed) {
  SuiteReport report{"convertibility"};
  detail::run_instances(report, n, seed, [&](long k, Rng& rng) {
    const Index d = 2 + k % 4;
    const bool diagonal = k % 2 == 0;
    const DensityMatrix rho = diagonal ? sample_diagonal_density(d, rng) : sample_density(d, rng);
    const EpcprChannel chan = sample_epcpr(d, rng);
    const DensityMatrix target = apply_epcpr(chan, rho);
    const ConvertibilityReport exact =
        diagonal ? decide_diagonal(rho, target) : decide_full_coherence(rho, target);
    report.expect("completeness", exact.verdict == Verdict::Convertible);
    if (exact.certificate) {
      report.expect_le("certificate-error", certificate_error(rho, target, *exact.certificate), 0.0, 1e-9);
    }
    const ConvertibilityReport general = decide_general(rho, target, 1, derive_seed(seed, 7));
    report.expect("regime-consistency", general.verdict == exact.verdict);

    // A random target: whatever the verdict, Convertible must come with a
    // certificate that verifies.
    const DensityMatrix other = diagonal ? sample_diagonal_density(d, rng) : sample_density(d, rng);
    const ConvertibilityReport random_pair =
        diagonal ? decide_diagonal(rho, other) : decide_full_coherence(rho, other);
    if (random_pair.verdict == Verdict::Convertible) {
      report.expect("soundness", random_pair.certificate && verify_certificate(rho, other, *random_pair.certificate));
    }
  });
  return report;
}

/// Witness bounds: ep advantage <= 2^{R_max^act}, attained by the optimal
/// witness; Tr[xi rho] <= 2^{R_max^coh} for correlation matrices, attained by
/// the coherence certificate.
inline SuiteReport suite_witnesses(long n, std::uint64_t seed, int samples_per_state = 20) {
  SuiteReport report{"witnesses"};
  detail::run_instances(report, n, seed, [&](long k, Rng& rng) {
    const Index d = 2 + k % 3;
    const DensityMatrix rho = sample_density(d, rng);
    const OptimalWitness opt = optimal_witness(rho);
    const double bound_act = opt.value + opt.gap;
    report.expect("optimal-witness-valid", is_activity_witness(opt.witness, 1e-9));
    const Advantage attained = ep_advantage(rho, SubCorrelationMatrix(opt.witness / static_cast<double>(d)));
    report.expect_le("advantage-attained", std::abs(attained.value - bound_act), 0.0, 1e-6);

    const MonotoneResult coh = max_relent_coherence(rho);
    const double bound_coh = std::exp2(coh.value);
    report.expect_le("coherence-attained", std::abs(trace_product(coh.witness, rho.matrix()) - bound_coh), 0.0, 1e-6);

    for (int s = 0; s < samples_per_state; ++s) {
      const Advantage adv = ep_advantage(rho, sample_subcorrelation_matrix(d, rng));
      if (!adv.infinite) report.expect_le("advantage-bound", adv.value, bound_act, 1e-6);
      const CorrelationMatrix xi = sample_correlation_matrix(d, rng);
      report.expect_le("coherence-bound", trace_product(xi.matrix(), rho.matrix()), bound_coh, 1e-6);
      const DensityMatrix tau = sample_passive(d, rng).state();
      report.expect_le("witness-on-passive", trace_product(opt.witness, tau.matrix()), 1.0, 1e-9);
    }
  });
  return report;
}

/// Passivization covariance of energy-preserving channels, the adjoint
/// correlation-matrix property, and passivity preservation of PCOs.
inline SuiteReport suite_passivization(long n, std::uint64_t seed) {
  SuiteReport report{"passivization"};
  detail::run_instances(report, n, seed, [&](long k, Rng& rng) {
    const Index d = 2 + k % 4;
    const CorrelationMatrix xi = sample_correlation_matrix(d, rng);
    const LinearMap ep = energy_preserving_map(xi.matrix());
    report.expect_le("ep-commutes", passivization_commutator_norm(ep), 0.0, 1e-12);

    const ComplexMatrix adj = static_cast<double>(d) * ep.adjoint()(maximally_coherent(d).matrix());
    bool is_correlation = true;
    try {
      CorrelationMatrix check(adj);
    } catch (const ValidationError&) {
      is_correlation = false;
    }
    report.expect("adjoint-correlation", is_correlation);

    const DensityMatrix tau = sample_passive(d, rng).state();
    report.expect("ep-preserves-passivity", is_passive(apply_energy_preserving(xi, tau)));
    const DensityMatrix rho = sample_density(d, rng);
    // Pi only reads populations. (It is not idempotent: Pi(tau_2) != tau_2.)
    const ComplexMatrix dephased = diagonal_matrix(rho.populations());
    report.expect_le("dephasing-invariant",
                     frobenius_distance(passivization_raw(dephased), passivization_raw(rho.matrix())), 0.0, 1e-12);
    const ComplexMatrix u = time_evolution(HamiltonianSpectrum::ladder(d), 3.0 * uniform01(rng));
    report.expect_le("time-covariant",
                     frobenius_distance(u * passivization_raw(rho.matrix()) * u.adjoint(),
                                        passivization_raw(u * rho.matrix() * u.adjoint())),
                     0.0, 1e-9);
    if (k == 0) report.expect_le("counterexample-commutes", passivization_commutator_norm(counterexample_map()), 0.0, 1e-12);
    const DensityMatrix tau4 = sample_passive(4, rng).state();
    report.expect("counterexample-preserves-passivity", is_passive(counterexample_channel(tau4)));
  });
  return report;
}

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"second-law", "duality", "convertibility", "witnesses",
                                                 "passivization"};
  return names;
}

inline SuiteReport run_suite(const std::string& name, long n, std::uint64_t seed) {
  if (name == "second-law") return suite_second_law(n, seed);
  if (name == "duality") return suite_duality(n, seed);
  if (name == "convertibility") return suite_convertibility(n, seed);
  if (name == "witnesses") return suite_witnesses(n, seed);
  if (name == "passivization") return suite_passivization(n, seed);
  if (name == "all") {
    SuiteReport all{"all"};
    for (const auto& s : suite_names()) all.merge(run_suite(s, n, seed));
    return all;
  }
  throw ValidationError("unknown_suite", "unknown suite \"" + name + "\"", "suite");
}

}  // namespace activeres

#endif  // ACTIVERES_SUITES_HPP
