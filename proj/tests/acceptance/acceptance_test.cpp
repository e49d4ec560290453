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

// Acceptance suite: one PASS/FAIL line per criterion, with its tolerance and,
// where one applies, its runtime budget. Exit code 0 iff every line passes.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "qcap/channel.hpp"
#include "qcap/coherent.hpp"
#include "qcap/families.hpp"
#include "qcap/linalg.hpp"
#include "test_support.hpp"

#ifdef QCAP_HAVE_CLI
#include "commands.hpp"
#endif

namespace {

using namespace qcap;

struct Outcome {
  bool ok = true;
  double worst = 0.0;  // largest observed deviation (criterion-specific meaning)
  std::string note;

  void require(bool cond, const std::string& why) {
    if (!cond && ok) {
      ok = false;
      note = why;
    }
  }
  void bound(double deviation, double limit, const std::string& what) {
    worst = std::max(worst, deviation);
    require(deviation <= limit, what);
  }
};

struct Criterion {
  int id;
  const char* title;
  double budget_seconds;  // 0 = no runtime limit
  std::function<Outcome()> run;
};

std::vector<double> grid(double lo, double hi, int n) {
  std::vector<double> out;
  for (int i = 0; i < n; ++i) out.push_back(lo + (hi - lo) * i / (n - 1));
  return out;
}
const std::vector<double> kEtas = grid(0.05, 1.0, 20);
const std::vector<double> kDeltas = grid(0.01, 0.49, 20);

std::string fmt(const char* pattern, double a, double b = 0.0) {
  char buf[160];
  std::snprintf(buf, sizeof buf, pattern, a, b);
  return buf;
}

Outcome epolarizing_identity() {
  Outcome o;
  testing::Generator gen(101);
  for (int i = 0; i < 50; ++i) {
    const NoiseParam eta(gen.uniform());
    const DensityOperator rho = gen.density(2);
    const Matrix via_kraus = apply(complementary(depolarizing(eta)), rho);
    o.bound(max_abs_diff(via_kraus, epolarizing_direct(eta, rho.matrix())), 1e-12,
            fmt("entry mismatch at eta = %.4f", eta.eta()));
  }
  return o;
}

Outcome xi_spectrum() {
  Outcome o;
  for (double eta : kEtas) {
    for (double delta : kDeltas) {
      std::vector<double> expect = {1 - eta / 2, 0.0, eta * (1 - delta) / 2, eta * delta / 2};
      std::sort(expect.rbegin(), expect.rend());
      const HermitianSpectrum s = hermitian_eig(xi_state(eta, delta));
      for (std::size_t i = 0; i < 4; ++i) {
        o.bound(std::abs(s[i] - expect[i]), 1e-10, fmt("spectrum mismatch at (%.2f, %.4f)", eta, delta));
      }
    }
  }
  return o;
}

Outcome xi_entropy() {
  Outcome o;
  for (double eta : kEtas) {
    for (double delta : kDeltas) {
      const double closed = 0.5 * eta * binary_entropy(delta) + binary_entropy(eta / 2);
      o.bound(std::abs(von_neumann_entropy(xi_state(eta, delta)) - closed), 1e-10,
              fmt("entropy mismatch at (%.2f, %.4f)", eta, delta));
    }
  }
  return o;
}

// worst = smallest coherent information seen (reported, must be > 0).
Outcome theorem1_positivity() {
  Outcome o;
  o.worst = INFINITY;
  for (int k = 1; k <= 50; ++k) {
    const double eta = 0.02 * k;
    const double delta = std::min(delta_threshold(eta), 0.4);
    const double ic = coherent_information_extended(epolarizing(NoiseParam(eta)),
                                                    DensityOperator::diagonal_qubit(delta));
    o.worst = std::min(o.worst, ic);
    o.require(ic > 0.0, fmt("I_C = %.3g at eta = %.2f", ic, eta));
  }
  const double margin = log2_bound_margin(0.005, log2_delta_threshold(0.005));
  o.require(margin > 0.0, fmt("log-domain margin %.3g at eta = 0.005", margin));
  return o;
}

Outcome lower_bound_dominance() {
  Outcome o;
  o.worst = -INFINITY;
  for (double eta : kEtas) {
    for (double delta : kDeltas) {
      const Theorem1Certificate c = theorem1_certificate(eta, delta);
      const double independent = 0.5 * eta * binary_entropy(delta) -
                                 (1 - eta) * delta * std::log2(2 / eta);
      o.require(std::abs(c.lower_bound - independent) <= 1e-15, "lower bound formula mismatch");
      o.worst = std::max(o.worst, c.lower_bound - c.ic_numeric);
      o.require(c.ic_numeric >= c.lower_bound - 1e-12, fmt("bound exceeds I_C at (%.2f, %.4f)", eta, delta));
    }
  }
  return o;
}

Outcome erasure_value() {
  Outcome o;
  for (double eta : {0.1, 0.3, 0.5, 0.7}) {
    const double v = maximize_coherent_information(erasure(NoiseParam(eta))).value;
    o.bound(std::abs(v - std::max(0.0, 1 - 2 * eta)), 1e-6, fmt("value %.9f at eta = %.1f", v, eta));
  }
  return o;
}

Outcome dephasing_value() {
  Outcome o;
  for (double p3 : {0.1, 0.25, 0.5}) {
    const double v = maximize_coherent_information(dephasing(p3)).value;
    o.bound(std::abs(v - (1 - binary_entropy(p3))), 1e-6, fmt("value %.9f at p3 = %.2f", v, p3));
  }
  return o;
}

// worst = largest optimizer value (must be <= 1e-9).
Outcome depolarizing_nonpositive() {
  Outcome o;
  o.worst = -INFINITY;
  for (double eta : {0.35, 0.5, 0.8}) {
    const double v = maximize_coherent_information(depolarizing(NoiseParam(eta))).value;
    o.worst = std::max(o.worst, v);
    o.require(v <= 1e-9, fmt("value %.3g at eta = %.2f", v, eta));
  }
  return o;
}

Outcome joint_construction() {
  Outcome o;
  testing::Generator gen(109);
  const std::vector<std::size_t> keep_a = {kA};
  const std::vector<std::size_t> rest = complement_factors(5, keep_a);
  const std::vector<std::size_t> keep_s1a = {kS1, kA};
  for (double eta : {0.2, 0.5, 0.8}) {
    const NoiseParam p(eta);
    const Isometry iso = joint_isometry(p);
    for (int trial = 0; trial < 10; ++trial) {
      const DensityOperator rho = gen.density(2);
      o.bound(max_abs_diff(apply_isometry(iso, rho, keep_a), apply(depolarizing(p), rho)), 1e-12,
              fmt("keep-{A} output differs at eta = %.1f", eta));
      const HermitianSpectrum env = hermitian_eig(apply_isometry(iso, rho, rest));
      const HermitianSpectrum psi = hermitian_eig(apply(epolarizing(p), rho));
      for (std::size_t i = 0; i < env.size(); ++i) {
        const double expect = i < psi.size() ? psi[i] : 0.0;
        o.bound(std::abs(env[i] - expect), 1e-9, fmt("complement spectrum differs at eta = %.1f", eta));
      }
      o.bound(std::abs(coherent_information(iso, rho, keep_s1a) -
                       coherent_information(erasure(p), rho)),
              1e-9, fmt("keep-{S1,A} coherent information differs at eta = %.1f", eta));
    }
  }
  return o;
}

Outcome theorem2() {
  Outcome o;
  const Theorem2Certificate c = theorem2_certificate(PauliProbs(0.7, 0.15, 0.1, 0.05), 0.01);
  o.require(c.holds(), "certificate checks fail");
  o.require(c.lower_bound > 0.0, fmt("lower bound %.3g", c.lower_bound));
  o.require(c.ic_numeric >= c.lower_bound, "ic_numeric below lower bound");
  const double ep = c.eta_prime, dp = c.delta_prime;
  std::vector<double> expect = {1 - ep / 2, 0.0, ep * (1 - dp) / 2, ep * dp / 2};
  std::sort(expect.rbegin(), expect.rend());
  const HermitianSpectrum s = hermitian_eig(xi_prime_state(c.probs, c.delta));
  for (std::size_t i = 0; i < 4; ++i) o.bound(std::abs(s[i] - expect[i]), 1e-10, "xi' spectrum mismatch");

  // Depolarizing probabilities: alpha = 1, theta = pi/4, delta' = delta, eta' = eta.
  for (double eta : kEtas) {
    const double eps = 0.75 * eta;
    const PauliProbs p(1 - eps, eps / 3, eps / 3, eps / 3);
    for (double delta : kDeltas) {
      const Theorem1Certificate c1 = theorem1_certificate(eta, delta);
      const Theorem2Certificate c2 = theorem2_certificate(p, delta);
      const double dev = std::max({std::abs(c2.eta_prime - eta), std::abs(c2.delta_prime - delta),
                                   std::abs(c2.lower_bound - c1.lower_bound),
                                   std::abs(c2.ic_numeric - c1.ic_numeric),
                                   std::abs(c2.h_xi_prime - c1.h_xi)});
      o.bound(dev, 1e-12, fmt("depolarizing reduction differs at (%.2f, %.4f)", eta, delta));
      for (std::size_t i = 0; i < 4; ++i) {
        o.bound(std::abs(c2.spectrum[i] - c1.xi_spectrum[i]), 1e-12, "reduced spectrum differs");
      }
    }
  }
  return o;
}

Outcome amplitude_damping_regimes() {
  Outcome o;
  const double low = maximize_coherent_information(amplitude_damping(NoiseParam(0.3))).value;
  o.require(low > 0.1, fmt("value %.6f at eta = 0.3", low));
  for (double eta : {0.5, 0.6}) {
    const double v = maximize_coherent_information(amplitude_damping(NoiseParam(eta))).value;
    o.bound(std::max(0.0, v), 1e-9, fmt("value %.3g at eta = %.1f", v, eta));
  }
  return o;
}

Outcome property_suite() {
  Outcome o;
#ifdef QCAP_HAVE_CLI
  std::ostringstream out, err;
  const int code = qcap::cli::cmd_verify(qcap::cli::VerifyOptions{}, out, err);
  o.require(code == 0, "verify failed:\n" + out.str() + err.str());
#else
  o.require(false, "built without the command-line tools");
#endif
  return o;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "epolarizing matrix identity (<= 1e-12)", 1, epolarizing_identity},
      {2, "xi spectrum on 20x20 grid (<= 1e-10)", 5, xi_spectrum},
      {3, "xi entropy closed form (<= 1e-10)", 0, xi_entropy},
      {4, "positivity at min(delta*, 0.4), eta in 0.02..1, log check at 0.005", 10,
       theorem1_positivity},
      {5, "lower-bound dominance (slack 1e-12)", 0, lower_bound_dominance},
      {6, "erasure one-shot value (+-1e-6)", 30, erasure_value},
      {7, "dephasing one-shot value (+-1e-6)", 0, dephasing_value},
      {8, "depolarizing one-shot value <= 1e-9", 0, depolarizing_nonpositive},
      {9, "joint isometry reductions", 0, joint_construction},
      {10, "mixed Pauli complement certificate", 0, theorem2},
      {11, "amplitude damping regimes", 0, amplitude_damping_regimes},
      {12, "property suite end-to-end", 60, property_suite},
  };

  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.budget_seconds > 0 && secs >= c.budget_seconds) {
      o.require(false, fmt("runtime %.2fs over budget %.0fs", secs, c.budget_seconds));
    }
    std::string budget = c.budget_seconds > 0 ? fmt(" (budget %.0fs)", c.budget_seconds) : "";
    std::printf("%s  AC%02d  %-66s worst=%-11.4g %6.2fs%s%s%s\n", o.ok ? "PASS" : "FAIL", c.id,
                c.title, o.worst, secs, budget.c_str(), o.ok ? "" : "  ", o.note.c_str());
    if (!o.ok) ++failed;
  }
  std::printf("%d of %zu acceptance criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
