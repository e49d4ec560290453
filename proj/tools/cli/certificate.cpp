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

#include "certificate.hpp"

#include <cctype>
#include <cmath>
#include <sstream>
#include <vector>

#include "json.hpp"
#include "sweep.hpp"

namespace qcap::cli {
namespace {

using json = nlohmann::ordered_json;

// NaN and infinities are not JSON; they become null.
json number(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

json checks_json(const std::vector<CertificateCheck>& checks) {
  json out = json::array();
  for (const auto& c : checks) {
    out.push_back({{"name", c.name},
                   {"deviation", number(c.deviation)},
                   {"tolerance", c.tolerance},
                   {"passed", c.passed}});
  }
  return out;
}

json matrix_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back({m(i, j).real(), m(i, j).imag()});
    rows.push_back(row);
  }
  return rows;
}

template <std::size_t N>
std::array<double, N> parse_list(const std::string& text, const char* what) {
  std::array<double, N> out{};
  std::stringstream ss(text);
  std::string item;
  std::size_t n = 0;
  while (std::getline(ss, item, ',')) {
    if (n == N) {
      ++n;
      break;
    }
    try {
      std::size_t used = 0;
      out[n] = std::stod(item, &used);
      while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used]))) ++used;
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError(std::string("bad number '") + item + "' in " + what);
    }
    ++n;
  }
  if (n != N) {
    throw UsageError(std::string(what) + " needs exactly " + std::to_string(N) +
                     " comma-separated numbers");
  }
  return out;
}

}  // namespace

std::string certificate_json(const Theorem1Certificate& c) {
  json j = {
      {"kind", "theorem1"},
      {"eta", c.eta},
      {"delta", c.delta},
      {"xi_spectrum", c.xi_spectrum},
      {"xi_spectrum_closed_form", c.xi_spectrum_closed_form},
      {"h_xi", c.h_xi},
      {"h_xi_numeric", c.h_xi_numeric},
      {"h_out", c.h_out},
      {"lower_bound", c.lower_bound},
      {"ic_numeric", c.ic_numeric},
      {"checks", checks_json(c.checks)},
      {"holds", c.holds()},
  };
  return j.dump(2);
}

std::string certificate_json(const Theorem2Certificate& c) {
  json j = {
      {"kind", "theorem2"},
      {"probs", c.probs.values()},
      {"alpha", c.alpha},
      {"eta_prime", c.eta_prime},
      {"theta", c.theta},
      {"delta", c.delta},
      {"delta_prime", c.delta_prime},
      {"spectrum", c.spectrum},
      {"spectrum_closed_form", c.spectrum_closed_form},
      {"h_xi_prime", c.h_xi_prime},
      {"lower_bound", c.lower_bound},
      {"ic_numeric", c.ic_numeric},
      {"bound_applies", c.bound_applies},
      {"checks", checks_json(c.checks)},
      {"holds", c.holds()},
  };
  return j.dump(2);
}

std::string result_json(const CoherentInfoResult& r) {
  json j = {
      {"value", r.value},
      {"argmax_state", matrix_json(r.argmax_state)},
      {"strategy", r.strategy},
      {"evaluations", r.evaluations},
  };
  return j.dump(2);
}

std::array<double, 4> parse_probabilities(const std::string& text) {
  return parse_list<4>(text, "--p");
}

std::array<double, 3> parse_weights(const std::string& text) { return parse_list<3>(text, "--p"); }

}  // namespace qcap::cli
