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

// Entropies, coherent information, input optimization and the closed-form
// quantities behind the positivity results for the epolarizing channel and
// mixed Pauli complements. All entropies are in bits.

#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "qcap/channel.hpp"
#include "qcap/families.hpp"

namespace qcap {

/// H2(x) = -x log2 x - (1-x) log2(1-x), with 0 log 0 = 0.
double binary_entropy(double x);

/// -sum lambda log2 lambda. Eigenvalues in [-tol.psd, 0] count as zero;
/// StateError on anything more negative.
double von_neumann_entropy(const Matrix& rho, const Tolerances& tol = default_tolerances());
double von_neumann_entropy(const DensityOperator& rho,
                           const Tolerances& tol = default_tolerances());
/// Entropy of a spectrum (same clamping rule).
double spectrum_entropy(std::span<const double> eigenvalues,
                        const Tolerances& tol = default_tolerances());

/// H(Phi(rho)) - H(Phi^c(rho)).
double coherent_information(const KrausChannel& ch, const DensityOperator& rho,
                            const Tolerances& tol = default_tolerances());
/// Coherent information of the channel obtained by keeping `keep` of the
/// isometry's output factors; the discarded factors form the environment.
double coherent_information(const Isometry& iso, const DensityOperator& rho,
                            std::span<const std::size_t> keep,
                            const Tolerances& tol = default_tolerances());

/// Same quantity evaluated in ~320-digit arithmetic from the binary64
/// Kraus operators and state. Resolves coherent information many orders of
/// magnitude below binary64 rounding of the individual entropies.
double coherent_information_extended(const KrausChannel& ch, const DensityOperator& rho);

// ---------------------------------------------------------------------------
// Optimization over inputs

enum class SearchStrategy {
  kAuto,         // bloch-grid for qubits, cholesky-coordinate otherwise
  kBlochGrid,    // d_in == 2
  kCholeskyCoordinate,  // d_in <= 4
};

struct SearchConfig {
  SearchStrategy strategy = SearchStrategy::kAuto;
  int grid_points = 21;        // per Bloch axis
  int golden_iterations = 60;  // per coordinate line search
  int refinement_rounds = 3;   // passes over all coordinates
  int restarts = 8;            // cholesky-coordinate only
  std::uint64_t seed = 20170911;
};

struct CoherentInfoResult {
  double value = 0.0;
  Matrix argmax_state;
  std::string strategy;
  std::size_t evaluations = 0;
};

using InputObjective = std::function<double(const DensityOperator&)>;

/// Maximizes an objective over density operators on C^dim. The result is a
/// best-found value, i.e. a certified lower bound on the true maximum.
CoherentInfoResult maximize_over_inputs(const InputObjective& objective, std::size_t dim,
                                        const SearchConfig& config = {});
CoherentInfoResult maximize_coherent_information(const KrausChannel& ch,
                                                 const SearchConfig& config = {});

/// Best value over the diagonal family diag(1-delta, delta) of a qubit
/// channel, by golden-section search on delta in [0, 1/2] (plus endpoints).
struct DiagonalOptimum {
  double delta = 0.0;
  double value = 0.0;
};
DiagonalOptimum maximize_over_diagonal_inputs(const KrausChannel& ch, int iterations = 100);

// ---------------------------------------------------------------------------
// Closed forms

/// Exponent -(2(1-eta)/eta) log2(2/eta). ParameterError unless 0 < eta <= 1.
double log2_delta_threshold(double eta);
/// 2^log2_delta_threshold(eta); underflows to 0 for eta below ~0.0135.
double delta_threshold(double eta);

/// (eta/2) H2(delta) - (1-eta) delta log2(2/eta).
double theorem1_lower_bound(double eta, double delta);

/// log2 of (eta/2) H2(delta) minus log2 of (1-eta) delta log2(2/eta),
/// given log2(delta) only. Positive iff the lower bound is positive.
/// Valid for log2_delta <= -1; uses the small-delta limit of H2(delta)/delta
/// once delta itself underflows.
double log2_bound_margin(double eta, double log2_delta);

/// The 4x4 state xi(eta, delta) whose unitary mixture is the epolarizing
/// output on diag(1-delta, delta).
Matrix xi_state(double eta, double delta);
/// diag(1, 1, 1, -1).
Matrix xi_mixing_unitary();
/// xi' for sorted probabilities.
Matrix xi_prime_state(const PauliProbs& sorted, double delta);

/// One named numeric check inside a certificate.
struct CertificateCheck {
  std::string name;
  double deviation = 0.0;  // observed value that must not exceed tolerance
  double tolerance = 0.0;
  bool passed = false;
};

struct Theorem1Certificate {
  double eta = 0.0;
  double delta = 0.0;
  std::array<double, 4> xi_spectrum{};              // numeric, descending
  std::array<double, 4> xi_spectrum_closed_form{};  // descending
  double h_xi = 0.0;          // (eta/2) H2(delta) + H2(eta/2)
  double h_xi_numeric = 0.0;
  double h_out = 0.0;         // H2((1-eta) delta + eta/2)
  double lower_bound = 0.0;
  double ic_numeric = 0.0;    // I_C(rho_delta; epolarizing(eta))
  std::vector<CertificateCheck> checks;

  bool holds() const;
};

/// ParameterError unless 0 < eta <= 1 and 0 < delta < 1/2.
Theorem1Certificate theorem1_certificate(double eta, double delta,
                                         const Tolerances& tol = default_tolerances());

struct Theorem2Certificate {
  PauliProbs probs{1.0, 0.0, 0.0, 0.0};  // sorted descending
  double alpha = 0.0;       // p2 / p1
  double eta_prime = 0.0;   // 2 (1 + alpha) p1
  double theta = 0.0;       // cos^2 theta = 1 / (1 + alpha)
  double delta = 0.0;
  double delta_prime = 0.0; // smaller root of d'(1-d') = d(1-d) sin^2(2 theta)
  std::array<double, 4> spectrum{};              // numeric spectrum of xi', descending
  std::array<double, 4> spectrum_closed_form{};  // descending
  double h_xi_prime = 0.0;  // (eta'/2) H2(delta') + H2(eta'/2)
  double lower_bound = 0.0; // (eta'/2) H2(delta') - (1-eta') delta log2(2/eta')
  double ic_numeric = 0.0;  // I_C(rho_delta; complement of mixed_pauli(sorted p))
  bool bound_applies = false;  // eta' <= 1
  std::vector<CertificateCheck> checks;

  bool holds() const;
};

/// HypothesisError if fewer than three probabilities are nonzero;
/// ParameterError unless 0 < delta < 1/2.
Theorem2Certificate theorem2_certificate(const PauliProbs& p, double delta,
                                         const Tolerances& tol = default_tolerances());

/// Known capacities: "erasure" -> max(0, 1 - 2 eta); "dephasing" -> 1 - H2(p3).
double capacity_formula(const std::string& family, double param);

}  // namespace qcap
