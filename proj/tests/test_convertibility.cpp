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

#include <cmath>
#include <limits>

#include <gtest/gtest.h>

#include "activeres/channels.hpp"
#include "activeres/convertibility.hpp"
#include "test_util.hpp"

using namespace activeres;
using activeres::testing::diag_state;
using activeres::testing::phi_plus;
using activeres::testing::real_matrix;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Single coherence between the two lowest levels, doubled in the target.
DensityMatrix partial_rho() { return DensityMatrix(real_matrix({{0.5, 0.1, 0}, {0.1, 0.3, 0}, {0, 0, 0.2}})); }
DensityMatrix partial_target() { return DensityMatrix(real_matrix({{0.5, 0.2, 0}, {0.2, 0.3, 0}, {0, 0, 0.2}})); }

}  // namespace

TEST(PBounds, Examples) {
  const PBounds b = p_bounds(diag_state({0.5, 0.5, 0}), diag_state({0.5, 0.3, 0.2}));
  EXPECT_NEAR(b.p_plus, 0.2, 1e-15);
  EXPECT_EQ(b.p_minus, -kInf);

  Rng rng(81);
  const DensityMatrix rho = sample_density(4, rng);
  const PBounds same = p_bounds(rho, rho);
  EXPECT_GE(same.p_plus, 1.0 - 1e-12);
  EXPECT_LE(same.p_minus, 1.0 + 1e-12);

  const PBounds flip = p_bounds(diag_state({0, 1}), diag_state({1, 0}));
  EXPECT_NEAR(flip.p_minus, -1.0, 1e-15);
  EXPECT_EQ(flip.p_plus, kInf);
  // Resetting to the ground state is free: p = 0 with tau = diag(1, 0).
  const ConvertibilityReport reset = decide_diagonal(diag_state({0, 1}), diag_state({1, 0}));
  ASSERT_EQ(reset.verdict, Verdict::Convertible);
  EXPECT_EQ(reset.certificate->p, 0.0);
  EXPECT_TRUE(verify_certificate(diag_state({0, 1}), diag_state({1, 0}), *reset.certificate));
}

TEST(PBounds, ZeroGapConvention) {
  // Delta = 0 with Delta' < 0 forces p_+ = -inf; Delta' > 0 is no constraint.
  EXPECT_EQ(p_bounds(diag_state({0.5, 0.5}), diag_state({0.4, 0.6})).p_plus, -kInf);
  EXPECT_EQ(p_bounds(diag_state({0.5, 0.5}), diag_state({0.6, 0.4})).p_plus, kInf);
}

TEST(DecideDiagonal, Examples) {
  const DensityMatrix rho = diag_state({0.5, 0.5, 0});
  const DensityMatrix target = diag_state({0.5, 0.3, 0.2});
  const ConvertibilityReport r = decide_diagonal(rho, target);
  ASSERT_EQ(r.verdict, Verdict::Convertible);
  ASSERT_TRUE(r.certificate);
  EXPECT_TRUE(verify_certificate(rho, target, *r.certificate));
  ASSERT_TRUE(r.feasible_p_interval);
  EXPECT_NEAR(r.feasible_p_interval->first, 0.0, 1e-15);
  EXPECT_NEAR(r.feasible_p_interval->second, 0.2, 1e-15);

  // The upper end of the interval gives the passive tau = (.5, .25, .25).
  const EpcprChannel at_top(0.2, CorrelationMatrix::dephasing(3), PassiveDistribution([] {
                              RealVector t(3);
                              t << 0.5, 0.25, 0.25;
                              return t;
                            }()));
  EXPECT_TRUE(verify_certificate(rho, target, at_top));

  const ConvertibilityReport self = decide_diagonal(target, target);
  EXPECT_EQ(self.verdict, Verdict::Convertible);
  EXPECT_NEAR(self.feasible_p_interval->second, 1.0, 1e-12);

  EXPECT_EQ(decide_diagonal(diag_state({1, 0}), phi_plus(2)).verdict, Verdict::NotConvertible);
  EXPECT_THROW(decide_diagonal(phi_plus(2), phi_plus(2)), ValidationError);
}

TEST(RatioMatrix, Examples) {
  const ComplexMatrix r = ratio_matrix(phi_plus(2), DensityMatrix(real_matrix({{0.6, 0.25}, {0.25, 0.4}})));
  EXPECT_LE((r - real_matrix({{0, 0.5}, {0.5, 0}})).norm(), 1e-15);
  EXPECT_NEAR(min_eigenvalue_unchecked(r), -0.5, 1e-15);
  EXPECT_LE((ratio_matrix(phi_plus(3), phi_plus(3)) - (all_ones(3) - ComplexMatrix::Identity(3, 3))).norm(), 1e-15);
  EXPECT_LE(ratio_matrix(phi_plus(3), extreme_passive(3, 3)).norm(), 0.0);
  try {
    ratio_matrix(partial_rho(), partial_rho());
    FAIL();
  } catch (const ValidationError& e) {
    EXPECT_EQ(e.code(), "partial_ratio_matrix");
  }
}

TEST(DecideFullCoherence, Examples) {
  const DensityMatrix target(real_matrix({{0.6, 0.25}, {0.25, 0.4}}));
  const ConvertibilityReport r = decide_full_coherence(phi_plus(2), target);
  ASSERT_EQ(r.verdict, Verdict::Convertible);
  EXPECT_TRUE(verify_certificate(phi_plus(2), target, *r.certificate));
  RealVector tau(2);
  tau << 0.7, 0.3;
  EXPECT_LE(certificate_error(phi_plus(2), target, EpcprChannel(0.5, CorrelationMatrix::identity_channel(2),
                                                                    PassiveDistribution(tau))),
            1e-15);

  const ConvertibilityReport self = decide_full_coherence(phi_plus(2), phi_plus(2));
  ASSERT_EQ(self.verdict, Verdict::Convertible);
  EXPECT_NEAR(self.feasible_p_interval->second, 1.0, 1e-12);
  EXPECT_TRUE(verify_certificate(phi_plus(2), phi_plus(2),
                                 EpcprChannel(1.0, CorrelationMatrix::identity_channel(2),
                                              PassiveDistribution(extreme_passive_diagonal(1, 2)))));
}

TEST(DecideFullCoherence, RejectsExcessCoherence) {
  // [[.5,.6],[.6,.5]] is not PSD, so use a 3-level target that needs
  // p |xi_01| = 1.2.
  const DensityMatrix rho(real_matrix({{0.4, 0.1, 0.1}, {0.1, 0.3, 0.1}, {0.1, 0.1, 0.3}}));
  const DensityMatrix target(real_matrix({{0.4, 0.12, 0.1}, {0.12, 0.3, 0.1}, {0.1, 0.1, 0.3}}));
  const ConvertibilityReport r = decide_full_coherence(rho, target);
  EXPECT_EQ(r.verdict, Verdict::NotConvertible);
}

TEST(DecideGeneral, Delegates) {
  const ConvertibilityReport diag = decide_general(diag_state({0.5, 0.5, 0}), diag_state({0.5, 0.3, 0.2}), 4, 1);
  EXPECT_EQ(diag.regime, Regime::Diagonal);
  EXPECT_EQ(diag.verdict, Verdict::Convertible);
  const ConvertibilityReport coh = decide_general(phi_plus(2), DensityMatrix(real_matrix({{0.6, 0.25}, {0.25, 0.4}})), 4, 1);
  EXPECT_EQ(coh.regime, Regime::FullCoherence);
  EXPECT_EQ(coh.verdict, Verdict::Convertible);
  EXPECT_THROW(decide_general(phi_plus(2), phi_plus(2), 0, 1), ValidationError);
}

TEST(DecideGeneral, IdentityWithinOneTrial) {
  const ConvertibilityReport r = decide_general(partial_rho(), partial_rho(), 16, 3);
  EXPECT_EQ(r.regime, Regime::General);
  ASSERT_EQ(r.verdict, Verdict::Convertible);
  EXPECT_EQ(r.trials_used, 1);
  EXPECT_TRUE(verify_certificate(partial_rho(), partial_rho(), *r.certificate));
}

TEST(DecideGeneral, UnknownWhenNoCompletionCertifies) {
  const ConvertibilityReport r = decide_general(partial_rho(), partial_target(), 8, 3);
  EXPECT_EQ(r.regime, Regime::General);
  EXPECT_EQ(r.verdict, Verdict::Unknown);
  EXPECT_EQ(r.trials_used, 8);
  EXPECT_FALSE(r.certificate);
  // Interlacing with the determined 2x2 block: no completion can help, so no
  // sampled channel reaches the target either.
  Rng rng(82);
  for (int k = 0; k < 300; ++k) {
    EXPECT_GT(certificate_error(partial_rho(), partial_target(), sample_epcpr(3, rng)), 1e-6);
  }
}

TEST(DecideGeneral, CoherenceMismatchIsNotConvertible) {
  const DensityMatrix target(real_matrix({{0.5, 0.1, 0.05}, {0.1, 0.3, 0}, {0.05, 0, 0.2}}));
  const ConvertibilityReport r = decide_general(partial_rho(), target, 4, 1);
  EXPECT_EQ(r.verdict, Verdict::NotConvertible);
}

TEST(VerifyCertificate, PerturbedPFails) {
  const DensityMatrix rho = diag_state({0.5, 0.5, 0});
  const DensityMatrix target = diag_state({0.5, 0.3, 0.2});
  const ConvertibilityReport r = decide_diagonal(rho, target);
  ASSERT_TRUE(r.certificate);
  EpcprChannel perturbed = *r.certificate;
  perturbed.p += 0.1;
  EXPECT_FALSE(verify_certificate(rho, target, perturbed));
}

TEST(Convertibility, SoundOnReachablePairs) {
  Rng rng(83);
  for (int rep = 0; rep < 300; ++rep) {
    const Index d = 2 + rep % 4;
    const bool diagonal = rep % 2 == 0;
    const DensityMatrix rho = diagonal ? sample_diagonal_density(d, rng) : sample_density(d, rng);
    const DensityMatrix target = apply_epcpr(sample_epcpr(d, rng), rho);
    const ConvertibilityReport r = diagonal ? decide_diagonal(rho, target) : decide_full_coherence(rho, target);
    ASSERT_EQ(r.verdict, Verdict::Convertible) << "pair " << rep << ": " << r.reason;
    ASSERT_TRUE(r.certificate);
    EXPECT_LE(certificate_error(rho, target, *r.certificate), 1e-9);
  }
}

TEST(Convertibility, NotConvertiblePairsAreMissedBySampledChannels) {
  Rng rng(84);
  int checked = 0;
  for (int rep = 0; rep < 400 && checked < 20; ++rep) {
    const Index d = 2 + rep % 3;
    const bool diagonal = rep % 2 == 0;
    const DensityMatrix rho = diagonal ? sample_diagonal_density(d, rng) : sample_density(d, rng);
    const DensityMatrix target = diagonal ? sample_diagonal_density(d, rng) : sample_density(d, rng);
    const ConvertibilityReport r = decide_general(rho, target, 1, 0);
    if (r.verdict != Verdict::NotConvertible) continue;
    ++checked;
    for (int k = 0; k < 200; ++k) {
      EXPECT_GT(certificate_error(rho, target, sample_epcpr(d, rng)), 1e-6);
    }
  }
  EXPECT_EQ(checked, 20);
}

TEST(Convertibility, RegimeMatchesInput) {
  Rng rng(85);
  for (int rep = 0; rep < 50; ++rep) {
    const Index d = 2 + rep % 3;
    const DensityMatrix a = sample_diagonal_density(d, rng);
    const DensityMatrix b = sample_density(d, rng);
    EXPECT_EQ(decide_general(a, b, 1, 0).regime, Regime::Diagonal);
    EXPECT_EQ(decide_general(b, a, 1, 0).regime, Regime::FullCoherence);
  }
}

TEST(Verdict, Names) {
  EXPECT_STREQ(to_string(Verdict::Convertible), "Convertible");
  EXPECT_STREQ(to_string(Verdict::NotConvertible), "NotConvertible");
  EXPECT_STREQ(to_string(Verdict::Unknown), "Unknown");
}
