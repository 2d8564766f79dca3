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

// File formats. Indices are 0-based: row i of a matrix is energy level i,
// counted from the ground state.
//
//   matrix       {"dim": d, "re": [[...], ...], "im": [[...], ...]}   ("im" optional)
//   hamiltonian  {"energies": [E0, E1, ...]}
//   epcpr        {"p": x, "xi": matrix, "tau": [t0, t1, ...]}
//   povm         [matrix, matrix, ...]
//
// Non-finite numbers are written as the strings "inf", "-inf", "nan" and
// accepted back in that form.

#ifndef ACTIVERES_JSON_IO_HPP
#define ACTIVERES_JSON_IO_HPP

#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "activeres/channels.hpp"
#include "activeres/hermitian.hpp"
#include "activeres/states.hpp"

namespace activeres::io {

using Json = nlohmann::json;

inline Json number(double x) {
  if (std::isfinite(x)) return x;
  if (std::isnan(x)) return "nan";
  return x > 0 ? "inf" : "-inf";
}

inline double to_double(const Json& j, const std::string& field) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) {
    const auto& s = j.get_ref<const std::string&>();
    if (s == "inf") return std::numeric_limits<double>::infinity();
    if (s == "-inf") return -std::numeric_limits<double>::infinity();
    if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
  }
  throw ValidationError("malformed_json", "expected a number", field);
}

inline const Json& member(const Json& j, const char* key, const std::string& field) {
  if (!j.is_object() || !j.contains(key)) {
    throw ValidationError("malformed_json", std::string("missing key \"") + key + "\"", field);
  }
  return j.at(key);
}

inline Json real_vector_to_json(const RealVector& v) {
  Json out = Json::array();
  for (Index i = 0; i < v.size(); ++i) out.push_back(number(v(i)));
  return out;
}

inline RealVector real_vector_from_json(const Json& j, const std::string& field) {
  if (!j.is_array()) throw ValidationError("malformed_json", "expected an array of numbers", field);
  RealVector v(static_cast<Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) v(static_cast<Index>(i)) = to_double(j[i], field);
  return v;
}

inline Json matrix_to_json(const ComplexMatrix& m) {
  Json re = Json::array();
  Json im = Json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    Json re_row = Json::array();
    Json im_row = Json::array();
    for (Index j = 0; j < m.cols(); ++j) {
      re_row.push_back(number(m(i, j).real()));
      im_row.push_back(number(m(i, j).imag()));
    }
    re.push_back(std::move(re_row));
    im.push_back(std::move(im_row));
  }
  return Json{{"dim", m.rows()}, {"re", std::move(re)}, {"im", std::move(im)}};
}

inline ComplexMatrix matrix_from_json(const Json& j, const std::string& field = "matrix") {
  const Json& dim_json = member(j, "dim", field);
  if (!dim_json.is_number_integer() || dim_json.get<long long>() < 1) {
    throw ValidationError("malformed_json", "\"dim\" must be a positive integer", field);
  }
  const Index d = dim_json.get<Index>();
  auto read_part = [&](const Json& part, const std::string& name) {
    RealVector flat(d * d);
    if (!part.is_array() || static_cast<Index>(part.size()) != d) {
      throw ValidationError("malformed_json", "\"" + name + "\" must have dim rows", field);
    }
    for (Index r = 0; r < d; ++r) {
      const Json& row = part[static_cast<std::size_t>(r)];
      if (!row.is_array() || static_cast<Index>(row.size()) != d) {
        throw ValidationError("malformed_json", "\"" + name + "\" row " + std::to_string(r) + " must have dim entries",
                              field);
      }
      for (Index c = 0; c < d; ++c) flat(r * d + c) = to_double(row[static_cast<std::size_t>(c)], field);
    }
    return flat;
  };
  const RealVector re = read_part(member(j, "re", field), "re");
  const RealVector im = j.contains("im") ? read_part(j.at("im"), "im") : RealVector::Zero(d * d);
  ComplexMatrix m(d, d);
  for (Index r = 0; r < d; ++r) {
    for (Index c = 0; c < d; ++c) m(r, c) = Complex(re(r * d + c), im(r * d + c));
  }
  if (!m.allFinite()) throw ValidationError("non_finite", "matrix has non-finite entries", field);
  return m;
}

inline DensityMatrix state_from_json(const Json& j, const std::string& field = "state") {
  return DensityMatrix(matrix_from_json(j, field), default_tolerances(), field);
}

inline Json hamiltonian_to_json(const HamiltonianSpectrum& h) {
  Json e = Json::array();
  for (double x : h.energies()) e.push_back(number(x));
  return Json{{"energies", std::move(e)}};
}

inline HamiltonianSpectrum hamiltonian_from_json(const Json& j, const std::string& field = "hamiltonian") {
  const RealVector e = real_vector_from_json(member(j, "energies", field), field);
  return HamiltonianSpectrum(std::vector<double>(e.data(), e.data() + e.size()));
}

inline Json epcpr_to_json(const EpcprChannel& c) {
  return Json{{"p", number(c.p)}, {"xi", matrix_to_json(c.xi.matrix())}, {"tau", real_vector_to_json(c.tau.probs())}};
}

inline EpcprChannel epcpr_from_json(const Json& j, const std::string& field = "channel") {
  const double p = to_double(member(j, "p", field), field + ".p");
  CorrelationMatrix xi(matrix_from_json(member(j, "xi", field), field + ".xi"), default_tolerances(), field + ".xi");
  PassiveDistribution tau(real_vector_from_json(member(j, "tau", field), field + ".tau"),
                          default_tolerances().eps_cert, field + ".tau");
  return EpcprChannel(p, std::move(xi), std::move(tau));
}

inline Json povm_to_json(const std::vector<ComplexMatrix>& povm) {
  Json out = Json::array();
  for (const auto& e : povm) out.push_back(matrix_to_json(e));
  return out;
}

inline ActivityBreakingChannel povm_from_json(const Json& j, const std::string& field = "povm") {
  if (!j.is_array()) throw ValidationError("malformed_json", "POVM must be a list of matrices", field);
  std::vector<ComplexMatrix> effects;
  for (std::size_t k = 0; k < j.size(); ++k) {
    effects.push_back(matrix_from_json(j[k], field + "[" + std::to_string(k) + "]"));
  }
  return ActivityBreakingChannel(std::move(effects));
}

inline Json parse(const std::string& text, const std::string& field) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ValidationError("malformed_json", e.what(), field);
  }
}

inline Json read_file(const std::string& path, const std::string& field) {
  std::ifstream in(path);
  if (!in) throw ValidationError("unreadable_file", "cannot open " + path, field);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse(buf.str(), field);
}

}  // namespace activeres::io

#endif  // ACTIVERES_JSON_IO_HPP
