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

// The `activeres` command line. Every verb prints one JSON document on
// stdout. Exit codes:
//   0  success (including a NotConvertible verdict)
//   1  invalid input or usage
//   2  solver did not converge
//   3  convertibility verdict Unknown
//   4  a `check` suite reported failures

#ifndef ACTIVERES_CLI_HPP
#define ACTIVERES_CLI_HPP

#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "activeres/channels.hpp"
#include "activeres/convertibility.hpp"
#include "activeres/json_io.hpp"
#include "activeres/monotones.hpp"
#include "activeres/states.hpp"
#include "activeres/suites.hpp"
#include "activeres/witnesses.hpp"

namespace activeres::cli {

using io::Json;

enum ExitCode : int {
  kOk = 0,
  kValidation = 1,
  kSolver = 2,
  kUnknownVerdict = 3,
  kCheckFailed = 4,
};

inline constexpr std::uint64_t kDefaultSeed = 20260101;

/// --seed if given, else $ACTIVERES_SEED, else a fixed default.
inline std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("ACTIVERES_SEED")) {
    try {
      std::size_t used = 0;
      const std::string s(env);
      const unsigned long long v = std::stoull(s, &used);
      if (used != s.size()) throw std::invalid_argument(s);
      return v;
    } catch (const std::exception&) {
      throw ValidationError("invalid_seed", "ACTIVERES_SEED is not an unsigned integer", "ACTIVERES_SEED");
    }
  }
  return kDefaultSeed;
}

inline Json error_json(const std::string& code, const std::string& message, const std::string& field) {
  return Json{{"error", {{"code", code}, {"message", message}, {"field", field}}}};
}

inline Json monotone_json(const std::string& which, const MonotoneResult& r) {
  Json cert = Json::object();
  if (r.primal.size() > 0) cert["g"] = io::real_vector_to_json(r.primal);
  if (r.cone.size() > 0) cert["u"] = io::real_vector_to_json(r.cone);
  if (r.passive.size() > 0) cert["passive_state"] = io::real_vector_to_json(r.passive);
  if (r.witness.size() > 0) {
    cert[which == "rmax-coh" ? "correlation_matrix" : "dual_witness"] = io::matrix_to_json(r.witness);
  }
  return Json{{"which", which}, {"value", io::number(r.value)}, {"gap", io::number(r.gap)}, {"certificate", cert}};
}

inline Json report_json(const ConvertibilityReport& r, const DensityMatrix& from, const DensityMatrix& to) {
  Json out{{"verdict", to_string(r.verdict)},
           {"regime", to_string(r.regime)},
           {"p_minus", io::number(r.bounds.p_minus)},
           {"p_plus", io::number(r.bounds.p_plus)},
           {"literal_reading_disagrees", r.literal_reading_disagrees},
           {"trials_used", r.trials_used}};
  out["feasible_p_interval"] = r.feasible_p_interval
                                   ? Json::array({io::number(r.feasible_p_interval->first),
                                                  io::number(r.feasible_p_interval->second)})
                                   : Json(nullptr);
  if (r.certificate) {
    out["p"] = io::number(r.certificate->p);
    out["certificate"] = io::epcpr_to_json(*r.certificate);
    out["certificate_error"] = io::number(certificate_error(from, to, *r.certificate));
    out["certificate_verified"] = verify_certificate(from, to, *r.certificate);
  } else {
    out["p"] = nullptr;
    out["certificate"] = nullptr;
  }
  if (!r.reason.empty()) out["reason"] = r.reason;
  return out;
}

inline Json suite_json(const SuiteReport& r, long n, std::uint64_t seed) {
  Json props = Json::object();
  long checks = 0;
  long failures = 0;
  for (const auto& [name, s] : r.properties) {
    props[name] = {{"checks", s.checks}, {"failures", s.failures}, {"worst_slack", io::number(s.worst_slack)}};
    checks += s.checks;
    failures += s.failures;
  }
  return Json{{"suite", r.suite},     {"n", n},           {"seed", seed},        {"instances", r.instances},
              {"checks", checks},     {"failures", failures}, {"passed", r.passed()}, {"properties", props},
              {"errors", r.errors}};
}

/// Parses argv (argv[0] is the program name), runs the verb and writes JSON
/// to `out`. Returns the process exit code.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Resource theory of activity: ergotropy, activity monotones, EPCPR convertibility, witnesses",
               "activeres"};
  app.require_subcommand(1);

  std::string state_path, ham_path, from_path, to_path, which, suite = "all";
  std::string epcpr_path, povm_path, xi_path, check_path;
  int trials = 100;
  long n = 100;
  std::optional<std::uint64_t> seed;
  bool optimal = false, passivize = false, counterexample = false;
  SolverOptions solver;

  auto* erg = app.add_subcommand("erg", "Ergotropy of a state");
  erg->add_option("--state", state_path, "state matrix JSON")->required();
  erg->add_option("--hamiltonian", ham_path, "Hamiltonian JSON {\"energies\": [...]}")->required();

  auto* mono = app.add_subcommand("monotone", "Activity or coherence quantifier");
  mono->add_option("--which", which, "quantifier")
      ->required()
      ->check(CLI::IsMember({"weight", "robustness", "rmax-act", "inv-rmax-act", "relent-act", "rmax-coh"}));
  mono->add_option("--state", state_path, "state matrix JSON")->required();
  mono->add_option("--hamiltonian", ham_path, "also report the ergotropy upper bounds");
  mono->add_option("--max-cuts", solver.max_cuts, "cutting-plane budget")->check(CLI::PositiveNumber);

  auto* conv = app.add_subcommand("convert", "Decide EPCPR convertibility");
  conv->add_option("--from", from_path, "initial state JSON")->required();
  conv->add_option("--to", to_path, "target state JSON")->required();
  conv->add_option("--trials", trials, "random completions in the general regime")->check(CLI::PositiveNumber);
  conv->add_option("--seed", seed, "seed (default: $ACTIVERES_SEED)");

  auto* wit = app.add_subcommand("witness", "Optimal activity witness, or validate one");
  auto* opt_flag = wit->add_flag("--optimal", optimal, "compute the optimal witness for --state");
  wit->add_option("--state", state_path, "state matrix JSON")->needs(opt_flag);
  auto* check_opt = wit->add_option("--check", check_path, "witness matrix JSON to validate");
  opt_flag->excludes(check_opt);
  wit->add_option("--max-cuts", solver.max_cuts, "cutting-plane budget")->check(CLI::PositiveNumber);

  auto* chan = app.add_subcommand("channel-apply", "Apply a channel to a state");
  chan->add_option("--state", state_path, "state matrix JSON")->required();
  auto* o1 = chan->add_option("--epcpr", epcpr_path, "EPCPR JSON {p, xi, tau}");
  auto* o2 = chan->add_option("--povm", povm_path, "activity-breaking channel, POVM JSON list");
  auto* o3 = chan->add_option("--correlation", xi_path, "energy-preserving channel, correlation matrix JSON");
  auto* o4 = chan->add_flag("--passivize", passivize, "canonical passivization");
  auto* o5 = chan->add_flag("--counterexample", counterexample, "the d = 4 passivity-preserving example channel");
  for (auto* a : {o1, o2, o3, o4, o5}) {
    for (auto* b : {o1, o2, o3, o4, o5}) {
      if (a != b) a->excludes(b);
    }
  }

  auto* chk = app.add_subcommand("check", "Run randomized property suites");
  chk->add_option("--suite", suite, "suite name")
      ->check(CLI::IsMember({"second-law", "duality", "convertibility", "witnesses", "passivization", "all"}));
  chk->add_option("--n", n, "instances")->check(CLI::PositiveNumber);
  chk->add_option("--seed", seed, "seed (default: $ACTIVERES_SEED)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    out << error_json("usage", e.what(), "").dump() << "\n";
    err << e.what() << "\n";
    return kValidation;
  }

  try {
    Json result;
    int code = kOk;
    if (*erg) {
      const DensityMatrix rho = io::state_from_json(io::read_file(state_path, "state"));
      const HamiltonianSpectrum h = io::hamiltonian_from_json(io::read_file(ham_path, "hamiltonian"));
      result = {{"ergotropy", io::number(ergotropy(rho, h))},
                {"average_energy", io::number(average_energy(rho, h))},
                {"passive_state", io::matrix_to_json(passive_rearrangement(rho, h).matrix())}};
    } else if (*mono) {
      const DensityMatrix rho = io::state_from_json(io::read_file(state_path, "state"));
      std::optional<HamiltonianSpectrum> h;
      if (!ham_path.empty()) {
        h = io::hamiltonian_from_json(io::read_file(ham_path, "hamiltonian"));
        require_same_dim(rho, *h);
      }
      MonotoneResult r;
      if (which == "weight") r = activity_weight(rho, solver);
      if (which == "robustness") r = robustness_of_activity(rho, solver);
      if (which == "rmax-act") r = max_relent_activity(rho, solver);
      if (which == "inv-rmax-act") r = inverse_max_relent_activity(rho, solver);
      if (which == "relent-act") r = relent_activity(rho);
      if (which == "rmax-coh") r = max_relent_coherence(rho, solver);
      result = monotone_json(which, r);
      if (h) {
        const ErgotropyBounds b = ergotropy_upper_bounds(rho, *h, solver);
        result["ergotropy"] = io::number(ergotropy(rho, *h));
        result["ergotropy_upper_bounds"] = {{"weight_bound", io::number(b.weight_bound)},
                                            {"robustness_bound", io::number(b.robustness_bound)}};
      }
    } else if (*conv) {
      const DensityMatrix from = io::state_from_json(io::read_file(from_path, "from"), "from");
      const DensityMatrix to = io::state_from_json(io::read_file(to_path, "to"), "to");
      const ConvertibilityReport r = decide_general(from, to, trials, resolve_seed(seed));
      result = report_json(r, from, to);
      if (r.verdict == Verdict::Unknown) code = kUnknownVerdict;
    } else if (*wit) {
      if (optimal) {
        if (state_path.empty()) throw ValidationError("missing_flag", "--optimal needs --state", "state");
        const DensityMatrix rho = io::state_from_json(io::read_file(state_path, "state"));
        const OptimalWitness w = optimal_witness(rho, solver);
        result = {{"witness", io::matrix_to_json(w.witness)}, {"value", io::number(w.value)},
                  {"gap", io::number(w.gap)}};
      } else if (!check_path.empty()) {
        const ComplexMatrix w = io::matrix_from_json(io::read_file(check_path, "witness"), "witness");
        const HermitianMatrix hw(w, default_tolerances().eps_herm, "witness");
        result = {{"is_witness", is_activity_witness(w)},
                  {"min_eigenvalue", io::number(min_eigenvalue(hw))},
                  {"max_passive_expectation", io::number(max_passive_expectation(hw.matrix()))}};
      } else {
        throw ValidationError("missing_flag", "witness needs --optimal --state or --check", "witness");
      }
    } else if (*chan) {
      const DensityMatrix rho = io::state_from_json(io::read_file(state_path, "state"));
      std::optional<DensityMatrix> image;
      if (!epcpr_path.empty()) image = apply_epcpr(io::epcpr_from_json(io::read_file(epcpr_path, "epcpr"), "epcpr"), rho);
      if (!povm_path.empty()) image = apply_activity_breaking(io::povm_from_json(io::read_file(povm_path, "povm")), rho);
      if (!xi_path.empty()) {
        image = apply_energy_preserving(
            CorrelationMatrix(io::matrix_from_json(io::read_file(xi_path, "xi"), "xi"), default_tolerances(), "xi"),
            rho);
      }
      if (passivize) image = passivization(rho);
      if (counterexample) image = counterexample_channel(rho);
      if (!image) {
        throw ValidationError("missing_flag",
                              "channel-apply needs one of --epcpr, --povm, --correlation, --passivize, --counterexample",
                              "channel");
      }
      result = {{"state", io::matrix_to_json(image->matrix())}};
    } else if (*chk) {
      const std::uint64_t s = resolve_seed(seed);
      const SuiteReport r = run_suite(suite, n, s);
      result = suite_json(r, n, s);
      if (!r.passed()) code = kCheckFailed;
    }
    out << result.dump() << "\n";
    return code;
  } catch (const SolverError& e) {
    Json j = error_json(e.code(), e.what(), e.field());
    j["error"]["lower_bound"] = io::number(e.lower_bound());
    j["error"]["upper_bound"] = io::number(e.upper_bound());
    j["error"]["cuts"] = e.cuts();
    j["error"]["iterations"] = e.iterations();
    out << j.dump() << "\n";
    return kSolver;
  } catch (const Error& e) {
    out << error_json(e.code(), e.what(), e.field()).dump() << "\n";
    return kValidation;
  } catch (const Json::exception& e) {
    out << error_json("malformed_json", e.what(), "").dump() << "\n";
    return kValidation;
  }
}

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv;
  argv.push_back("activeres");
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace activeres::cli

#endif  // ACTIVERES_CLI_HPP
