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

// Entry points for the qcap command-line tool. Every command reports on the
// given streams and returns its exit code: 0 success, 1 verification or
// hypothesis failure, 2 I/O or argument error.

#pragma once

#include <ostream>
#include <string>

#include "certificate.hpp"
#include "sweep.hpp"
#include "verify.hpp"

namespace qcap::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

int cmd_sweep(const SweepSpec& spec, std::ostream& out, std::ostream& err);
int cmd_certificate_theorem1(double eta, double delta, const std::string& output,
                             std::ostream& out, std::ostream& err);
int cmd_certificate_theorem2(const std::array<double, 4>& p, double delta,
                             const std::string& output, std::ostream& out, std::ostream& err);
int cmd_verify(const VerifyOptions& options, std::ostream& out, std::ostream& err);
int cmd_families(std::ostream& out);

/// Parses argv and dispatches to the commands above.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qcap::cli
