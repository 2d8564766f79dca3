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
#include <functional>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "activeres/channels.hpp"
#include "activeres/monotones.hpp"
#include "activeres/oracles.hpp"
#include "test_util.hpp"

using namespace activeres;
using activeres::testing::diag_state;
using activeres::testing::phi_plus;
using activeres::testing::real_matrix;

namespace {

DensityMatrix fixture_state() { return diag_state({1.0 / 3, 0.0, 1.0 / 3, 1.0 / 3}); }

struct NamedMonotone {
  std::string name;
  std::function<double(const DensityMatrix&)> eval;
};

std::vector<NamedMonotone> all_monotones() {
  return {
      {"weight", [](const DensityMatrix& r) { return activity_weight(r).value; }},
      {"robustness", [](const DensityMatrix& r) { return robustness_of_activity(r).value; }},
      {"rmax-act", [](const DensityMatrix& r) { return max_relent_activity(r).value; }},
      {"inv-rmax-act", [](const DensityMatrix& r) { return inverse_max_relent_activity(r).value; }},
      {"relent-act", [](const DensityMatrix& r) { return relent_activity(r).value; }},
  };
}

}  // namespace

TEST(ActivityWeight, Examples) {
  EXPECT_NEAR(activity_weight(diag_state({0.6, 0.3, 0.1})).value, 0.0, 1e-8);
  for (Index d = 2; d <= 5; ++d) EXPECT_EQ(activity_weight(DensityMatrix::basis_state(d - 1, d)).value, 1.0);
  const MonotoneResult r = activity_weight(diag_state({0.3, 0.7}));
  EXPECT_NEAR(r.value, 0.4, 1e-8);
  EXPECT_NEAR(r.value, 1.0 - oracle_passive_grid(diag_state({0.3, 0.7}), OracleObjective::DominatedWeight, 1e-3),
              2e-3);
}

TEST(Robustness, Examples) {
  for (Index d = 2; d <= 6; ++d) {
    EXPECT_NEAR(robustness_of_activity(DensityMatrix::basis_state(d - 1, d)).value, static_cast<double>(d - 1), 1e-6);
  }
  EXPECT_NEAR(robustness_of_activity(diag_state({0.6, 0.3, 0.1})).value, 0.0, 1e-8);
  const MonotoneResult r = robustness_of_activity(diag_state({0.3, 0.7}));
  EXPECT_NEAR(r.value, 0.4, 1e-8);
  EXPECT_NEAR(r.passive(0), 0.5, 1e-6);
  EXPECT_NEAR(r.passive(1), 0.5, 1e-6);
}

TEST(MaxRelentActivity, Examples) {
  for (Index d = 2; d <= 5; ++d) {
    EXPECT_NEAR(max_relent_activity(phi_plus(d)).value, std::log2(static_cast<double>(d)), 1e-7);
  }
  EXPECT_NEAR(max_relent_activity(diag_state({0.5, 0.5})).value, 0.0, 1e-8);
  EXPECT_NEAR(max_relent_activity(diag_state({0.3, 0.7})).value, std::log2(1.4), 1e-8);
}

TEST(InverseMaxRelentActivity, Examples) {
  EXPECT_NEAR(inverse_max_relent_activity(diag_state({0.6, 0.4})).value, 0.0, 1e-8);
  EXPECT_TRUE(inverse_max_relent_activity(DensityMatrix::basis_state(2, 3)).infinite());
  EXPECT_NEAR(inverse_max_relent_activity(diag_state({0.3, 0.7})).value, -std::log2(0.6), 1e-7);
}

TEST(RelentActivity, Examples) {
  EXPECT_NEAR(relent_activity(diag_state({0.6, 0.3, 0.1})).value, 0.0, 1e-12);
  EXPECT_NEAR(relent_activity(phi_plus(2)).value, 1.0, 1e-12);
  const double expected = 0.3 * std::log2(0.3 / 0.5) + 0.7 * std::log2(0.7 / 0.5);
  const DensityMatrix rho = diag_state({0.3, 0.7});
  EXPECT_NEAR(relent_activity(rho).value, expected, 1e-12);
  EXPECT_NEAR(oracle_passive_grid(rho, OracleObjective::Relent, 1e-3), expected, 1e-5);
}

TEST(AntitonicRegression, PoolsViolators) {
  RealVector a(5);
  a << 0.1, 0.3, 0.2, 0.25, 0.15;
  const RealVector q = antitonic_regression(a);
  for (Index i = 1; i < q.size(); ++i) EXPECT_LE(q(i), q(i - 1) + 1e-15);
  EXPECT_NEAR(q.sum(), 1.0, 1e-15);
  // (.1, .3, .2, .25) pools into one block of mean .2125.
  for (Index i = 0; i < 4; ++i) EXPECT_NEAR(q(i), 0.2125, 1e-15);
  EXPECT_NEAR(q(4), 0.15, 1e-15);
}

TEST(RelentActivity, MatchesGridOracle) {
  Rng rng(71);
  for (int rep = 0; rep < 60; ++rep) {
    const Index d = 2 + rep % 3;
    const DensityMatrix rho = sample_density(d, rng);
    const double step = default_grid_step(d);
    const double grid = oracle_passive_grid(rho, OracleObjective::Relent, step);
    const double value = relent_activity(rho).value;
    EXPECT_GE(grid, value - 1e-9);
    EXPECT_NEAR(grid, value, 2.0 * step * static_cast<double>(d));
  }
}

TEST(MaxRelentCoherence, Examples) {
  EXPECT_NEAR(max_relent_coherence(diag_state({0.3, 0.7})).value, 0.0, 1e-8);
  for (Index d = 2; d <= 6; ++d) {
    const MonotoneResult r = max_relent_coherence(phi_plus(d));
    EXPECT_NEAR(std::exp2(r.value), static_cast<double>(d), 1e-7);
  }
  const DensityMatrix rho(real_matrix({{0.5, 0.25}, {0.25, 0.5}}));
  const MonotoneResult r = max_relent_coherence(rho);
  EXPECT_NEAR(r.value, std::log2(1.5), 1e-7);
  EXPECT_NO_THROW(CorrelationMatrix{r.witness});
  EXPECT_NEAR(trace_product(r.witness, rho.matrix()), 1.5, 1e-6);
}

TEST(Monotones, FaithfulOnPassiveStates) {
  Rng rng(72);
  for (int rep = 0; rep < 100; ++rep) {
    const Index d = 1 + rep % 5;
    const DensityMatrix tau = sample_passive(d, rng).state();
    for (const auto& m : all_monotones()) EXPECT_NEAR(m.eval(tau), 0.0, 1e-7) << m.name;
  }
}

TEST(Monotones, PositiveOnActiveStates) {
  Rng rng(73);
  for (int rep = 0; rep < 60; ++rep) {
    const Index d = 2 + rep % 4;
    const DensityMatrix rho = sample_density(d, rng);
    if (is_passive(rho, 1e-6)) continue;
    EXPECT_GT(activity_weight(rho).value, 0.0);
    EXPECT_GT(robustness_of_activity(rho).value, 0.0);
    EXPECT_GT(relent_activity(rho).value, 0.0);
  }
}

TEST(Monotones, RangesAndMutualBound) {
  Rng rng(74);
  for (int rep = 0; rep < 200; ++rep) {
    const Index d = 2 + rep % 4;
    const DensityMatrix rho = rep % 4 == 0 ? sample_density(d, rng, 1) : sample_density(d, rng);
    const double aw = activity_weight(rho).value;
    const double ar = robustness_of_activity(rho).value;
    EXPECT_GE(aw, 0.0);
    EXPECT_LE(aw, 1.0);
    EXPECT_GE(ar, 0.0);
    EXPECT_LE(ar, static_cast<double>(d - 1));
    EXPECT_GE(aw, ar / static_cast<double>(d - 1) - 1e-7);
  }
}

TEST(Monotones, Convexity) {
  Rng rng(75);
  for (int rep = 0; rep < 100; ++rep) {
    const Index d = 2 + rep % 3;
    const DensityMatrix a = sample_density(d, rng);
    const DensityMatrix b = sample_density(d, rng);
    const double p = uniform01(rng);
    const DensityMatrix mix(p * a.matrix() + (1 - p) * b.matrix());
    EXPECT_LE(activity_weight(mix).value,
              p * activity_weight(a).value + (1 - p) * activity_weight(b).value + 1e-7);
    EXPECT_LE(robustness_of_activity(mix).value,
              p * robustness_of_activity(a).value + (1 - p) * robustness_of_activity(b).value + 1e-7);
  }
}

TEST(Monotones, NonIncreasingUnderEpcpr) {
  Rng rng(76);
  for (const auto& m : all_monotones()) {
    double worst = -1.0;
    for (int rep = 0; rep < 150; ++rep) {
      const Index d = 2 + rep % 4;
      const DensityMatrix rho = sample_density(d, rng);
      const DensityMatrix out = apply_epcpr(sample_epcpr(d, rng), rho);
      const double before = m.eval(rho);
      const double after = m.eval(out);
      if (std::isinf(before)) continue;
      worst = std::max(worst, after - before);
    }
    EXPECT_LE(worst, 1e-6) << m.name;
  }
}

TEST(Monotones, CounterexampleChannelDoesNotRaiseActivity) {
  const DensityMatrix rho = fixture_state();
  const DensityMatrix out = counterexample_channel(rho);
  EXPECT_LE(activity_weight(out).value, activity_weight(rho).value + 1e-7);
  EXPECT_LE(robustness_of_activity(out).value, robustness_of_activity(rho).value + 1e-7);
  Rng rng(77);
  for (int rep = 0; rep < 50; ++rep) {
    const DensityMatrix sigma = sample_density(4, rng);
    const DensityMatrix image = counterexample_channel(sigma);
    EXPECT_LE(activity_weight(image).value, activity_weight(sigma).value + 1e-6);
    EXPECT_LE(robustness_of_activity(image).value, robustness_of_activity(sigma).value + 1e-6);
  }
}

TEST(ErgotropyBounds, Examples) {
  const ErgotropyBounds passive = ergotropy_upper_bounds(diag_state({0.5, 0.3, 0.2}), HamiltonianSpectrum::ladder(3));
  EXPECT_GE(passive.weight_bound, -1e-9);
  EXPECT_GE(passive.robustness_bound, -1e-9);
  for (Index d = 2; d <= 5; ++d) {
    const ErgotropyBounds top = ergotropy_upper_bounds(DensityMatrix::basis_state(d - 1, d), HamiltonianSpectrum::ladder(d));
    EXPECT_NEAR(top.robustness_bound, static_cast<double>(d - 1), 1e-6);
  }
  const HamiltonianSpectrum h({0, 1, 2, 3});
  const ErgotropyBounds fixture = ergotropy_upper_bounds(fixture_state(), h);
  EXPECT_GE(fixture.weight_bound, 2.0 / 3.0 - 1e-9);
  EXPECT_GE(fixture.robustness_bound, 2.0 / 3.0 - 1e-9);
}

TEST(ErgotropyBounds, HoldOnRandomStates) {
  Rng rng(78);
  for (int rep = 0; rep < 200; ++rep) {
    const Index d = 2 + rep % 4;
    const DensityMatrix rho = rep % 3 == 0 ? sample_density(d, rng, 1 + rep % d) : sample_density(d, rng);
    std::vector<double> e(static_cast<std::size_t>(d));
    double acc = 0.0;
    for (auto& x : e) x = (acc += 0.2 + uniform01(rng));
    const HamiltonianSpectrum h(e);
    const double erg = ergotropy(rho, h);
    const ErgotropyBounds b = ergotropy_upper_bounds(rho, h);
    EXPECT_LE(erg, b.weight_bound + 1e-7);
    EXPECT_LE(erg, b.robustness_bound + 1e-7);
  }
}
