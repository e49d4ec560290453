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

// Parameter sweeps over the built-in channel families, written as CSV.

#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "qcap/channel.hpp"
#include "qcap/coherent.hpp"

namespace qcap::cli {

/// Bad command-line input (exit code 2).
class UsageError : public Error {
 public:
  using Error::Error;
};

enum class DeltaPolicy { kThreshold, kFixed, kOptimize };

DeltaPolicy parse_delta_policy(const std::string& name);

/// Extra family arguments beyond the scalar parameter.
struct FamilyOptions {
  std::array<double, 3> pauli_weights{1.0, 1.0, 1.0};  // mixed-pauli only
  std::vector<std::size_t> keep{kA};                    // joint-isometry only
  bool complement = false;
};

/// Builds a named family at parameter value param. UsageError on an
/// unknown family name.
KrausChannel build_family(const std::string& family, double param, const FamilyOptions& options);

/// Parses "S1,A" style factor lists (or indices 0..4) for joint-isometry.
std::vector<std::size_t> parse_keep(const std::string& text);

struct SweepSpec {
  std::string family;
  double param_min = 0.0;
  double param_max = 1.0;
  int steps = 10;
  DeltaPolicy delta_policy = DeltaPolicy::kThreshold;
  double fixed_delta = 0.0;
  std::string output_path = "-";  // "-" writes to stdout
  FamilyOptions options;
  std::optional<std::string> channel_file;  // replaces family with a JSON channel
  SearchConfig search;
  unsigned threads = 0;  // 0 = hardware concurrency

  /// UsageError if the invariants param_min <= param_max, steps >= 1 fail.
  void validate() const;
};

struct SweepRow {
  std::string family;
  double param = 0.0;
  double delta = 0.0;
  double ic_value = 0.0;
  double lower_bound = 0.0;
  double threshold_log2 = 0.0;
};

inline constexpr const char* kCsvHeader = "family,param,delta,ic_value,lower_bound,threshold_log2";

/// Rows in grid order. Rows are computed concurrently; the result does not
/// depend on scheduling.
std::vector<SweepRow> sweep_rows(const SweepSpec& spec);

/// %.17g, with "nan", "inf" and "-inf" spelled out.
std::string format_number(double x);
void write_csv(const std::vector<SweepRow>& rows, std::ostream& out);
std::string sweep_csv(const SweepSpec& spec);

}  // namespace qcap::cli
