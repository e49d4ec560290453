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

// JSON serialization of certificates and optimizer results.

#pragma once

#include <array>
#include <string>

#include "qcap/coherent.hpp"

namespace qcap::cli {

std::string certificate_json(const Theorem1Certificate& c);
std::string certificate_json(const Theorem2Certificate& c);
std::string result_json(const CoherentInfoResult& r);

/// Parses "p0,p1,p2,p3". UsageError unless there are exactly four numbers.
std::array<double, 4> parse_probabilities(const std::string& text);
/// Parses "w1,w2,w3".
std::array<double, 3> parse_weights(const std::string& text);

}  // namespace qcap::cli
