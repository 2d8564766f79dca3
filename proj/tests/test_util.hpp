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

#ifndef ACTIVERES_TESTS_TEST_UTIL_HPP
#define ACTIVERES_TESTS_TEST_UTIL_HPP

#include <initializer_list>
#include <vector>

#include "activeres/hermitian.hpp"
#include "activeres/states.hpp"

namespace activeres::testing {

/// Real matrix from row lists.
inline ComplexMatrix real_matrix(std::initializer_list<std::initializer_list<double>> rows) {
  const Index d = static_cast<Index>(rows.size());
  ComplexMatrix m(d, d);
  Index i = 0;
  for (const auto& row : rows) {
    Index j = 0;
    for (double x : row) m(i, j++) = x;
    ++i;
  }
  return m;
}

inline DensityMatrix diag_state(std::vector<double> p) { return DensityMatrix::from_diagonal(p); }

inline DensityMatrix phi_plus(Index d) { return maximally_coherent(d); }

}  // namespace activeres::testing

#endif  // ACTIVERES_TESTS_TEST_UTIL_HPP
