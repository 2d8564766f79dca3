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
#include <random>
#include <vector>

#include <Eigen/Dense>
#include <gtest/gtest.h>

#include "activeres/lp.hpp"

using namespace activeres;

namespace {

// Best objective over all vertices of {A x <= b, x >= 0} in three variables,
// found by solving every 3x3 subsystem of active constraints.
double vertex_enumeration_max(const std::vector<std::vector<double>>& a, const std::vector<double>& b,
                              const std::vector<double>& c) {
  std::vector<std::vector<double>> rows = a;
  std::vector<double> rhs = b;
  for (int i = 0; i < 3; ++i) {
    std::vector<double> r(3, 0.0);
    r[static_cast<std::size_t>(i)] = -1.0;
    rows.push_back(r);
    rhs.push_back(0.0);
  }
  const std::size_t m = rows.size();
  double best = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      for (std::size_t k = j + 1; k < m; ++k) {
        Eigen::Matrix3d sys;
        Eigen::Vector3d r;
        const std::size_t idx[3] = {i, j, k};
        for (int t = 0; t < 3; ++t) {
          for (int col = 0; col < 3; ++col) sys(t, col) = rows[idx[t]][static_cast<std::size_t>(col)];
          r(t) = rhs[idx[t]];
        }
        if (std::abs(sys.determinant()) < 1e-9) continue;
        const Eigen::Vector3d x = sys.partialPivLu().solve(r);
        bool feasible = true;
        for (std::size_t q = 0; q < m && feasible; ++q) {
          double lhs = 0.0;
          for (int col = 0; col < 3; ++col) lhs += rows[q][static_cast<std::size_t>(col)] * x(col);
          feasible = lhs <= rhs[q] + 1e-9;
        }
        if (feasible) best = std::max(best, c[0] * x(0) + c[1] * x(1) + c[2] * x(2));
      }
    }
  }
  return best;
}

}  // namespace

TEST(DenseLp, SingleBound) {
  LinearProgram lp;
  lp.goal = Goal::Maximize;
  lp.objective = {1.0};
  lp.rows.push_back({{1.0}, Relation::LessEqual, 1.0});
  const LpSolution s = dense_lp(lp);
  ASSERT_EQ(s.status, LpStatus::Optimal);
  EXPECT_NEAR(s.value, 1.0, 1e-12);
  EXPECT_NEAR(s.x[0], 1.0, 1e-12);
}

TEST(DenseLp, MinimizeWithDual) {
  LinearProgram lp;
  lp.goal = Goal::Minimize;
  lp.objective = {1.0, 1.0};
  lp.rows.push_back({{1.0, 1.0}, Relation::GreaterEqual, 2.0});
  const LpSolution s = dense_lp(lp);
  ASSERT_EQ(s.status, LpStatus::Optimal);
  EXPECT_NEAR(s.value, 2.0, 1e-12);
  ASSERT_EQ(s.duals.size(), 1u);
  EXPECT_NEAR(s.duals[0], 1.0, 1e-12);
}

TEST(DenseLp, EqualityAndUpperBounds) {
  LinearProgram lp;
  lp.goal = Goal::Maximize;
  lp.objective = {1.0, 2.0};
  lp.rows.push_back({{1.0, 1.0}, Relation::Equal, 1.0});
  lp.upper_bounds = {std::numeric_limits<double>::infinity(), 0.25};
  const LpSolution s = dense_lp(lp);
  ASSERT_EQ(s.status, LpStatus::Optimal);
  EXPECT_NEAR(s.value, 1.25, 1e-12);
  EXPECT_NEAR(s.x[1], 0.25, 1e-12);
}

TEST(DenseLp, Infeasible) {
  LinearProgram lp;
  lp.objective = {1.0};
  lp.rows.push_back({{1.0}, Relation::LessEqual, 1.0});
  lp.rows.push_back({{1.0}, Relation::GreaterEqual, 2.0});
  EXPECT_EQ(dense_lp(lp).status, LpStatus::Infeasible);
}

TEST(DenseLp, Unbounded) {
  LinearProgram lp;
  lp.objective = {1.0, 1.0};
  lp.rows.push_back({{1.0, -1.0}, Relation::LessEqual, 1.0});
  EXPECT_EQ(dense_lp(lp).status, LpStatus::Unbounded);
}

TEST(DenseLp, DegenerateRedundantRows) {
  // The same facet listed three times plus a row through the optimal vertex.
  LinearProgram lp;
  lp.objective = {1.0, 1.0, 1.0};
  for (int k = 0; k < 3; ++k) lp.rows.push_back({{1.0, 1.0, 1.0}, Relation::LessEqual, 1.0});
  lp.rows.push_back({{1.0, 0.0, 0.0}, Relation::LessEqual, 0.0});
  lp.rows.push_back({{2.0, 2.0, 2.0}, Relation::LessEqual, 2.0});
  const LpSolution s = dense_lp(lp);
  ASSERT_EQ(s.status, LpStatus::Optimal);
  EXPECT_NEAR(s.value, 1.0, 1e-12);
}

TEST(DenseLp, MatchesVertexEnumeration) {
  std::mt19937_64 rng(51);
  std::uniform_int_distribution<int> small(-2, 3);
  std::uniform_int_distribution<int> rhs_dist(0, 4);
  for (int rep = 0; rep < 300; ++rep) {
    std::vector<std::vector<double>> a;
    std::vector<double> b;
    const int m = 2 + rep % 5;
    for (int k = 0; k < m; ++k) {
      a.push_back({double(small(rng)), double(small(rng)), double(small(rng))});
      // Integer data with many zero right-hand sides keeps vertices degenerate.
      b.push_back(rep % 2 == 0 ? 0.0 : double(rhs_dist(rng)));
    }
    // Bounding box so every instance has a finite optimum.
    for (int i = 0; i < 3; ++i) {
      std::vector<double> r(3, 0.0);
      r[static_cast<std::size_t>(i)] = 1.0;
      a.push_back(r);
      b.push_back(5.0);
    }
    const std::vector<double> c = {double(small(rng)), double(small(rng)), double(small(rng))};
    LinearProgram lp;
    lp.objective = c;
    for (std::size_t k = 0; k < a.size(); ++k) lp.rows.push_back({a[k], Relation::LessEqual, b[k]});
    const LpSolution s = dense_lp(lp);
    ASSERT_EQ(s.status, LpStatus::Optimal) << "instance " << rep;
    EXPECT_NEAR(s.value, vertex_enumeration_max(a, b, c), 1e-8) << "instance " << rep;

    // Strong duality through the reported shadow prices.
    double dual_value = 0.0;
    for (std::size_t k = 0; k < b.size(); ++k) {
      EXPECT_GE(s.duals[k], -1e-9);
      dual_value += s.duals[k] * b[k];
    }
    EXPECT_NEAR(dual_value, s.value, 1e-8) << "instance " << rep;
  }
}
