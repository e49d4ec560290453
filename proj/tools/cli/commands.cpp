// Copyright 2026 The qcap Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "commands.hpp"

#include <cstdio>
#include <fstream>
#include <functional>
#include <iomanip>
#include <sstream>
#include <vector>

#include "CLI11.hpp"
#include "qcap/families.hpp"

namespace qcap::cli {
namespace {

// Writes text to path, or to out for "-".
int emit(const std::string& text, const std::string& path, std::ostream& out, std::ostream& err) {
  if (path.empty() || path == "-") {
    out << text;
    return kExitOk;
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (file) file << text;
  if (!file) {
    err << "error: cannot write " << path << '\n';
    return kExitUsage;
  }
  return kExitOk;
}

// Maps library exceptions onto exit codes.
int guarded(std::ostream& err, const std::function<int()>& body) {
  try {
    return body();
  } catch (const HypothesisError& e) {
    err << "hypothesis failure: " << e.what() << '\n';
    return kExitFailure;
  } catch (const std::ios_base::failure& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

SearchStrategy parse_strategy(const std::string& name) {
  if (name == "auto") return SearchStrategy::kAuto;
  if (name == "bloch-grid") return SearchStrategy::kBlochGrid;
  if (name == "cholesky") return SearchStrategy::kCholeskyCoordinate;
  throw UsageError("unknown strategy '" + name + "' (auto, bloch-grid, cholesky)");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::ios_base::failure("cannot read " + path);
  std::stringstream text;
  text << in.rdbuf();
  return text.str();
}

}  // namespace

int cmd_sweep(const SweepSpec& spec, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] { return emit(sweep_csv(spec), spec.output_path, out, err); });
}

int cmd_certificate_theorem1(double eta, double delta, const std::string& output,
                             std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Theorem1Certificate c = theorem1_certificate(eta, delta);
    const int code = emit(certificate_json(c) + "\n", output, out, err);
    if (code != kExitOk) return code;
    if (!c.holds()) err << "certificate does not hold\n";
    return c.holds() ? kExitOk : kExitFailure;
  });
}

int cmd_certificate_theorem2(const std::array<double, 4>& p, double delta,
                             const std::string& output, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Theorem2Certificate c = theorem2_certificate(PauliProbs(p), delta);
    const int code = emit(certificate_json(c) + "\n", output, out, err);
    if (code != kExitOk) return code;
    if (!c.holds()) err << "certificate does not hold\n";
    return c.holds() ? kExitOk : kExitFailure;
  });
}

int cmd_verify(const VerifyOptions& options, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] { return report(run_suites(options), out); });
}

int cmd_families(std::ostream& out) {
  out << std::left << std::setw(19) << "family" << std::setw(22) << "parameter" << std::setw(8)
      << "range" << "description\n";
  for (const FamilyInfo& f : family_catalog()) {
    out << std::setw(19) << f.name << std::setw(22) << f.parameter << std::setw(8) << f.range
        << f.description << '\n';
  }
  return kExitOk;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Coherent information and capacity lower bounds for qubit channels", "qcap"};
  app.require_subcommand(1);

  // Shared family options.
  std::string family, weights, keep = "A", channel_file;
  bool complement = false;
  auto add_family_flags = [&](CLI::App* cmd) {
    cmd->add_option("--family", family, "built-in family (see 'families')");
    cmd->add_option("--p", weights, "mixed-pauli weights w1,w2,w3 (default 1,1,1)");
    cmd->add_option("--keep", keep, "joint-isometry factors to keep, e.g. S1,A (default A)");
    cmd->add_flag("--complement", complement, "use the complementary channel");
    cmd->add_option("--channel-file", channel_file, "JSON channel instead of a built-in family");
  };
  auto family_options = [&] {
    FamilyOptions o;
    if (!weights.empty()) o.pauli_weights = parse_weights(weights);
    o.keep = parse_keep(keep);
    o.complement = complement;
    return o;
  };

  // sweep
  SweepSpec spec;
  std::string policy = "threshold";
  auto* sweep = app.add_subcommand("sweep", "parameter sweep to CSV");
  add_family_flags(sweep);
  sweep->add_option("--min", spec.param_min, "first parameter value")->capture_default_str();
  sweep->add_option("--max", spec.param_max, "last parameter value")->capture_default_str();
  sweep->add_option("--steps", spec.steps, "number of grid points")->capture_default_str();
  sweep->add_option("--delta-policy", policy, "threshold | fixed | optimize")->capture_default_str();
  sweep->add_option("--delta", spec.fixed_delta, "input weight for --delta-policy fixed");
  sweep->add_option("--output,-o", spec.output_path, "CSV path, '-' for stdout")->capture_default_str();
  sweep->add_option("--threads", spec.threads, "worker threads, 0 = all cores");

  // certificate
  auto* cert = app.add_subcommand("certificate", "closed-form certificate as JSON");
  cert->require_subcommand(1);
  double eta = 0.0, delta = 0.0;
  std::string probs, cert_output = "-";
  auto* th1 = cert->add_subcommand("theorem1", "epolarizing channel certificate");
  th1->add_option("--eta", eta, "noise parameter")->required();
  th1->add_option("--delta", delta, "input weight diag(1 - delta, delta)")->required();
  th1->add_option("--output,-o", cert_output, "JSON path, '-' for stdout");
  auto* th2 = cert->add_subcommand("theorem2", "mixed Pauli complement certificate");
  th2->add_option("--p", probs, "probabilities p0,p1,p2,p3")->required();
  th2->add_option("--delta", delta, "input weight diag(1 - delta, delta)")->required();
  th2->add_option("--output,-o", cert_output, "JSON path, '-' for stdout");

  // verify
  VerifyOptions verify_options;
  double spectrum_tol = -1.0;
  std::vector<std::string> overrides;
  auto* verify = app.add_subcommand("verify", "run every invariant suite");
  verify->add_option("--spectrum-tol", spectrum_tol, "override the spectrum tolerance");
  verify->add_option("--tol", overrides, "override a tolerance, name=value (repeatable)");
  verify->add_option("--perturb-kraus", verify_options.kraus_perturbation,
                     "fault injection: perturb one depolarizing Kraus weight");
  verify->add_flag("--list", "list suite names and exit");

  // families
  auto* families = app.add_subcommand("families", "list built-in channel families");

  // optimize
  double param = 0.0;
  std::string strategy = "auto";
  SearchConfig search;
  auto* optimize = app.add_subcommand("optimize", "maximize one-shot coherent information");
  add_family_flags(optimize);
  optimize->add_option("--param", param, "family parameter");
  optimize->add_option("--strategy", strategy, "auto | bloch-grid | cholesky")->capture_default_str();
  optimize->add_option("--seed", search.seed, "restart seed")->capture_default_str();
  optimize->add_option("--restarts", search.restarts, "cholesky restarts")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (families->parsed()) return cmd_families(out);

  if (sweep->parsed()) {
    return guarded(err, [&] {
      spec.delta_policy = parse_delta_policy(policy);
      spec.family = family;
      spec.options = family_options();
      if (!channel_file.empty()) spec.channel_file = channel_file;
      else if (family.empty()) throw UsageError("sweep needs --family or --channel-file");
      return cmd_sweep(spec, out, err);
    });
  }

  if (th1->parsed()) return cmd_certificate_theorem1(eta, delta, cert_output, out, err);
  if (th2->parsed()) {
    return guarded(err, [&] {
      return cmd_certificate_theorem2(parse_probabilities(probs), delta, cert_output, out, err);
    });
  }

  if (verify->parsed()) {
    if (verify->count("--list") > 0) {
      for (const auto& name : suite_names()) out << name << '\n';
      return kExitOk;
    }
    return guarded(err, [&] {
      if (spectrum_tol >= 0.0) verify_options.tol.spectrum = spectrum_tol;
      for (const std::string& kv : overrides) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos) throw UsageError("--tol expects name=value, got '" + kv + "'");
        double value = 0.0;
        try {
          value = std::stod(kv.substr(eq + 1));
        } catch (const std::exception&) {
          throw UsageError("bad tolerance value in '" + kv + "'");
        }
        set_tolerance(verify_options.tol, kv.substr(0, eq), value);
      }
      return cmd_verify(verify_options, out, err);
    });
  }

  if (optimize->parsed()) {
    return guarded(err, [&] {
      search.strategy = parse_strategy(strategy);
      const KrausChannel ch = !channel_file.empty() ? channel_from_json(read_file(channel_file))
                              : !family.empty()
                                  ? build_family(family, param, family_options())
                                  : throw UsageError("optimize needs --family or --channel-file");
      out << result_json(maximize_coherent_information(ch, search)) << '\n';
      return kExitOk;
    });
  }
  return kExitUsage;
}

}  // namespace qcap::cli
