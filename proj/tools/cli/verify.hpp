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

// The invariant suites behind the verify subcommand.

#pragma once

#include <functional>
#include <ostream>
#include <string>
#include <vector>

#include "qcap/config.hpp"

namespace qcap::cli {

struct VerifyOptions {
  Tolerances tol = default_tolerances();
  /// Added to the identity weight of one depolarizing Kraus operator before
  /// the CPTP suite runs. Zero in normal operation; a test hook otherwise.
  double kraus_perturbation = 0.0;
};

struct SuiteResult {
  std::string name;
  double worst_deviation = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  std::string detail;  // failure reason, empty on success
  double seconds = 0.0;
};

/// Sets one Tolerances field by name. UsageError on an unknown name.
void set_tolerance(Tolerances& tol, const std::string& name, double value);

std::vector<std::string> suite_names();
std::vector<SuiteResult> run_suites(const VerifyOptions& options);
/// One line per suite plus a summary; returns 0 iff every suite passed.
int report(const std::vector<SuiteResult>& results, std::ostream& out);

}  // namespace qcap::cli
