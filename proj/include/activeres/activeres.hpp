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

#ifndef ACTIVERES_ACTIVERES_HPP
#define ACTIVERES_ACTIVERES_HPP

#include "activeres/channels.hpp"
#include "activeres/convertibility.hpp"
#include "activeres/errors.hpp"
#include "activeres/hermitian.hpp"
#include "activeres/lp.hpp"
#include "activeres/monotones.hpp"
#include "activeres/oracles.hpp"
#include "activeres/random.hpp"
#include "activeres/solver.hpp"
#include "activeres/states.hpp"
#include "activeres/witnesses.hpp"

#endif  // ACTIVERES_ACTIVERES_HPP
