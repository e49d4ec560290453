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

// Named channel families: depolarizing and its complement (the
// epolarizing channel), erasure, mixed Pauli, dephasing, amplitude damping,
// and the five-qubit isometry that yields the first three by discarding
// subsystems.

#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "qcap/channel.hpp"

namespace qcap {

/// Noise probability eta in [0, 1].
class NoiseParam {
 public:
  /// ParameterError outside [0, 1] or for non-finite input.
  explicit NoiseParam(double eta);
  double eta() const { return eta_; }
  /// Pauli error weight of the depolarizing channel, 3 eta / 4.
  double eps() const { return 0.75 * eta_; }

 private:
  double eta_;
};

/// Probabilities (p0, p1, p2, p3) of identity and the three Pauli errors.
class PauliProbs {
 public:
  /// ParameterError on a negative entry or |sum - 1| > tol.probability_sum.
  PauliProbs(double p0, double p1, double p2, double p3,
             const Tolerances& tol = default_tolerances());
  explicit PauliProbs(std::array<double, 4> p, const Tolerances& tol = default_tolerances());

  double operator[](std::size_t i) const { return p_[i]; }
  const std::array<double, 4>& values() const { return p_; }
  int nonzero_count() const;
  /// Same probabilities sorted descending.
  PauliProbs sorted_descending() const;

 private:
  std::array<double, 4> p_;
};

/// Kraus order (sigma0, sigma1, sigma2, sigma3) with weights
/// sqrt(1 - eps), sqrt(eps/3) x 3.
KrausChannel depolarizing(NoiseParam eta);
/// complementary(depolarizing(eta)); 4-dimensional output.
KrausChannel epolarizing(NoiseParam eta);
/// The epolarizing output matrix assembled entry by entry from the Pauli
/// expectations <sigma_i, rho>, without going through Kraus operators.
Matrix epolarizing_direct(NoiseParam eta, const Matrix& rho);

/// d_in = 2, d_out = 3; the erasure flag is basis state |2>.
KrausChannel erasure(NoiseParam eta);

/// Kraus operators sqrt(p_i) sigma_i, i = 0..3 (zero weights are kept).
KrausChannel mixed_pauli(const PauliProbs& p);
/// Complement from A = sum_i sqrt(p_i) sigma_i (x) |i>.
KrausChannel mixed_pauli_complement(const PauliProbs& p);
/// Complement output assembled entry by entry from <sigma_i, rho>.
Matrix mixed_pauli_complement_direct(const PauliProbs& p, const Matrix& rho);
/// mixed_pauli(1 - p3, 0, 0, p3).
KrausChannel dephasing(double p3);

/// K0 = diag(1, sqrt(1 - eta)), K1 = sqrt(eta) |0><1|.
KrausChannel amplitude_damping(NoiseParam eta);

/// Output factor positions of joint_isometry.
enum JointFactor : std::size_t { kS1 = 0, kS2 = 1, kG1 = 2, kG2 = 3, kA = 4 };

/// Isometry C^2 -> (S1, S2, G1, G2, A): prepares |s> on S1 S2 with
/// |s> = sqrt(1-eta)|00> + sqrt(eta)|11>, a maximally entangled pair on
/// G1 G2, and swaps A with G1 controlled on S1.
Isometry joint_isometry(NoiseParam eta);

/// Built-in family description for CLI listings.
struct FamilyInfo {
  std::string name;
  std::string parameter;
  std::string range;
  std::string description;
};
const std::vector<FamilyInfo>& family_catalog();

}  // namespace qcap
