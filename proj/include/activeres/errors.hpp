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

#ifndef ACTIVERES_ERRORS_HPP
#define ACTIVERES_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <utility>

namespace activeres {

/// Base class for every error raised by the library. Carries a short
/// machine-readable code and the name of the offending input field (may be
/// empty), so the CLI can report `{code, message, field}` without parsing
/// message strings.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message, std::string field = {})
      : std::runtime_error(message), code_(std::move(code)), field_(std::move(field)) {}

  const std::string& code() const noexcept { return code_; }
  const std::string& field() const noexcept { return field_; }

 private:
  std::string code_;
  std::string field_;
};

/// Invalid input: non-Hermitian, non-PSD, wrong trace, degenerate spectrum,
/// dimension mismatch, out-of-range index, malformed file...
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// The cutting-plane solver ran out of budget before closing its gap. The
/// best bounds seen so far are kept for diagnostics.
class SolverError : public Error {
 public:
  SolverError(const std::string& message, double lower, double upper, int cuts, int iterations)
      : Error("solver_nonconvergence", message),
        lower_(lower),
        upper_(upper),
        cuts_(cuts),
        iterations_(iterations) {}

  double lower_bound() const noexcept { return lower_; }
  double upper_bound() const noexcept { return upper_; }
  int cuts() const noexcept { return cuts_; }
  int iterations() const noexcept { return iterations_; }

 private:
  double lower_;
  double upper_;
  int cuts_;
  int iterations_;
};

}  // namespace activeres

#endif  // ACTIVERES_ERRORS_HPP
