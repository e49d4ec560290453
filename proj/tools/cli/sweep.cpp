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

#include "sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>
#include <thread>

#include "qcap/families.hpp"

namespace qcap::cli {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kMaxThresholdDelta = 0.4;

bool is_eta_family(const std::string& family) {
  return family == "depolarizing" || family == "epolarizing";
}

PauliProbs mixed_pauli_probs(double t, const std::array<double, 3>& w) {
  const double total = w[0] + w[1] + w[2];
  if (!(total > 0.0) || w[0] < 0.0 || w[1] < 0.0 || w[2] < 0.0) {
    throw UsageError("--p weights must be non-negative with a positive sum");
  }
  if (!(t >= 0.0 && t <= 1.0)) throw ParameterError("mixed-pauli parameter t must lie in [0, 1]");
  return PauliProbs(1.0 - t, t * w[0] / total, t * w[1] / total, t * w[2] / total);
}

// Whether the row's channel is the epolarizing channel (either by name or as
// the complement of depolarizing).
bool is_epolarizing(const std::string& family, const FamilyOptions& o) {
  return (family == "epolarizing" && !o.complement) ||
         (family == "depolarizing" && o.complement);
}

double smallest_eigenvalue(const Matrix& m) {
  return hermitian_eig(m).eigenvalues.back();
}

SweepRow compute_row(const SweepSpec& spec, const KrausChannel& ch, const std::string& family,
                     double param) {
  SweepRow row;
  row.family = family;
  row.param = param;
  row.lower_bound = kNaN;
  row.threshold_log2 = kNaN;

  const bool eta_family = !spec.channel_file && is_eta_family(family);
  if (eta_family) {
    row.threshold_log2 = param > 0.0 ? log2_delta_threshold(param)
                                     : -std::numeric_limits<double>::infinity();
  }

  switch (spec.delta_policy) {
    case DeltaPolicy::kThreshold:
      row.delta = param > 0.0 ? std::min(delta_threshold(param), kMaxThresholdDelta) : 0.0;
      break;
    case DeltaPolicy::kFixed:
      row.delta = spec.fixed_delta;
      break;
    case DeltaPolicy::kOptimize:
      break;
  }

  if (spec.delta_policy == DeltaPolicy::kOptimize) {
    const CoherentInfoResult best = maximize_coherent_information(ch, spec.search);
    row.ic_value = best.value;
    row.delta = std::max(0.0, smallest_eigenvalue(best.argmax_state));
  } else {
    Matrix rho(ch.d_in(), ch.d_in());
    if (ch.d_in() == 2) {
      rho = DensityOperator::diagonal_qubit(row.delta).matrix();
    } else {
      // diag(1 - (d-1) delta, delta, ..., delta)
      rho(0, 0) = 1.0 - static_cast<double>(ch.d_in() - 1) * row.delta;
      for (std::size_t i = 1; i < ch.d_in(); ++i) rho(i, i) = row.delta;
    }
    row.ic_value = coherent_information_extended(ch, DensityOperator(rho));
  }

  if (spec.channel_file) return row;
  if (is_epolarizing(family, spec.options) && param > 0.0 && row.delta <= 0.5) {
    row.lower_bound = theorem1_lower_bound(param, row.delta);
  } else if (family == "mixed-pauli" && spec.options.complement && row.delta > 0.0 &&
             row.delta < 0.5) {
    const PauliProbs p = mixed_pauli_probs(param, spec.options.pauli_weights);
    if (p.nonzero_count() >= 3) {
      const Theorem2Certificate cert = theorem2_certificate(p, row.delta);
      if (cert.bound_applies) row.lower_bound = cert.lower_bound;
    }
  }
  return row;
}

}  // namespace

DeltaPolicy parse_delta_policy(const std::string& name) {
  if (name == "threshold") return DeltaPolicy::kThreshold;
  if (name == "fixed") return DeltaPolicy::kFixed;
  if (name == "optimize") return DeltaPolicy::kOptimize;
  throw UsageError("unknown delta policy '" + name + "' (threshold, fixed, optimize)");
}

std::vector<std::size_t> parse_keep(const std::string& text) {
  static const std::array<const char*, 5> kNames = {"S1", "S2", "G1", "G2", "A"};
  std::vector<std::size_t> keep;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), [](unsigned char c) { return std::isspace(c); }),
               item.end());
    std::size_t idx = kNames.size();
    for (std::size_t i = 0; i < kNames.size(); ++i) {
      if (item == kNames[i] || item == std::to_string(i)) idx = i;
    }
    if (idx == kNames.size()) throw UsageError("unknown joint-isometry factor '" + item + "'");
    keep.push_back(idx);
  }
  std::sort(keep.begin(), keep.end());
  if (keep.empty() || std::adjacent_find(keep.begin(), keep.end()) != keep.end()) {
    throw UsageError("--keep needs distinct factors from S1,S2,G1,G2,A");
  }
  return keep;
}

KrausChannel build_family(const std::string& family, double param, const FamilyOptions& o) {
  auto finish = [&](KrausChannel ch) { return o.complement ? complementary(ch) : ch; };
  if (family == "depolarizing") return finish(depolarizing(NoiseParam(param)));
  if (family == "epolarizing") return finish(epolarizing(NoiseParam(param)));
  if (family == "erasure") return finish(erasure(NoiseParam(param)));
  if (family == "dephasing") return finish(dephasing(param));
  if (family == "amplitude-damping") return finish(amplitude_damping(NoiseParam(param)));
  if (family == "mixed-pauli") return finish(mixed_pauli(mixed_pauli_probs(param, o.pauli_weights)));
  if (family == "joint-isometry") {
    return finish(restrict_to(joint_isometry(NoiseParam(param)), o.keep));
  }
  throw UsageError("unknown family '" + family + "' (see 'families')");
}

void SweepSpec::validate() const {
  if (!(param_min <= param_max)) throw UsageError("param_min must not exceed param_max");
  if (steps < 1) throw UsageError("steps must be at least 1");
  if (channel_file && delta_policy == DeltaPolicy::kThreshold) {
    throw UsageError("delta policy 'threshold' needs a depolarizing or epolarizing family");
  }
  if (!channel_file && delta_policy == DeltaPolicy::kThreshold && !is_eta_family(family)) {
    throw UsageError("delta policy 'threshold' needs a depolarizing or epolarizing family");
  }
  if (delta_policy == DeltaPolicy::kFixed && !(fixed_delta >= 0.0 && fixed_delta <= 0.5)) {
    throw UsageError("--delta must lie in [0, 1/2]");
  }
}

std::vector<SweepRow> sweep_rows(const SweepSpec& spec) {
  spec.validate();
  if (spec.channel_file) {
    std::ifstream in(*spec.channel_file);
    if (!in) throw std::ios_base::failure("cannot read channel file " + *spec.channel_file);
    std::stringstream text;
    text << in.rdbuf();
    const KrausChannel ch = channel_from_json(text.str());
    if (spec.delta_policy == DeltaPolicy::kFixed &&
        spec.fixed_delta * static_cast<double>(ch.d_in() - 1) > 1.0) {
      throw UsageError("--delta too large for the channel's input dimension");
    }
    return {compute_row(spec, ch, "custom", kNaN)};
  }

  const std::size_t n = static_cast<std::size_t>(spec.steps);
  std::vector<double> params(n);
  for (std::size_t i = 0; i < n; ++i) {
    params[i] = n == 1 ? spec.param_min
                       : spec.param_min + (spec.param_max - spec.param_min) *
                                              static_cast<double>(i) / static_cast<double>(n - 1);
  }
  params.back() = n == 1 ? spec.param_min : spec.param_max;
  // Surface argument errors before spawning workers.
  build_family(spec.family, params.front(), spec.options);

  std::vector<SweepRow> rows(n);
  std::vector<std::exception_ptr> errors(n);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      try {
        rows[i] = compute_row(spec, build_family(spec.family, params[i], spec.options),
                              spec.family, params[i]);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  unsigned threads = spec.threads ? spec.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, n));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return rows;
}

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  if (x == 0.0) return "0";  // no "-0"
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void write_csv(const std::vector<SweepRow>& rows, std::ostream& out) {
  out << kCsvHeader << '\n';
  for (const auto& r : rows) {
    out << r.family << ',' << format_number(r.param) << ',' << format_number(r.delta) << ','
        << format_number(r.ic_value) << ',' << format_number(r.lower_bound) << ','
        << format_number(r.threshold_log2) << '\n';
  }
}

std::string sweep_csv(const SweepSpec& spec) {
  std::ostringstream out;
  write_csv(sweep_rows(spec), out);
  return out.str();
}

}  // namespace qcap::cli
