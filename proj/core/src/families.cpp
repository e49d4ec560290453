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

#include "qcap/families.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

namespace qcap {

using namespace std::complex_literals;

NoiseParam::NoiseParam(double eta) : eta_(eta) {
  if (!(eta >= 0.0 && eta <= 1.0)) {
    throw ParameterError("noise parameter must lie in [0, 1], got " + std::to_string(eta));
  }
}

PauliProbs::PauliProbs(double p0, double p1, double p2, double p3, const Tolerances& tol)
    : PauliProbs(std::array<double, 4>{p0, p1, p2, p3}, tol) {}

PauliProbs::PauliProbs(std::array<double, 4> p, const Tolerances& tol) : p_(p) {
  double sum = 0.0;
  for (double x : p_) {
    if (!(x >= 0.0) || !std::isfinite(x)) {
      throw ParameterError("Pauli probabilities must be nonnegative and finite");
    }
    sum += x;
  }
  if (std::abs(sum - 1.0) > tol.probability_sum) {
    throw ParameterError("Pauli probabilities must sum to 1, got " + std::to_string(sum));
  }
}

int PauliProbs::nonzero_count() const {
  return static_cast<int>(std::count_if(p_.begin(), p_.end(), [](double x) { return x > 0.0; }));
}

PauliProbs PauliProbs::sorted_descending() const {
  std::array<double, 4> s = p_;
  std::sort(s.begin(), s.end(), std::greater<>());
  return PauliProbs(s);
}

KrausChannel depolarizing(NoiseParam eta) {
  return mixed_pauli(PauliProbs(1.0 - eta.eps(), eta.eps() / 3.0, eta.eps() / 3.0,
                                eta.eps() / 3.0));
}

KrausChannel epolarizing(NoiseParam eta) { return complementary(depolarizing(eta)); }

namespace {

// <sigma_i, rho> for i = 0..3.
std::array<Complex, 4> pauli_expectations(const Matrix& rho) {
  if (rho.rows() != 2 || rho.cols() != 2) throw DimensionError("expected a qubit operator");
  return {hs_inner(pauli(0), rho), hs_inner(pauli(1), rho), hs_inner(pauli(2), rho),
          hs_inner(pauli(3), rho)};
}

}  // namespace

Matrix epolarizing_direct(NoiseParam eta, const Matrix& rho) {
  const double e = eta.eps();
  const auto s = pauli_expectations(rho);
  const double c = std::sqrt(e * (1.0 - e) / 3.0);
  const double d = e / 3.0;
  return Matrix{
      {(1.0 - e) * s[0], c * s[1], c * s[2], c * s[3]},
      {c * s[1], d * s[0], -1.0i * d * s[3], 1.0i * d * s[2]},
      {c * s[2], 1.0i * d * s[3], d * s[0], -1.0i * d * s[1]},
      {c * s[3], -1.0i * d * s[2], 1.0i * d * s[1], d * s[0]},
  };
}

KrausChannel erasure(NoiseParam eta) {
  const double keep = std::sqrt(1.0 - eta.eta());
  const double lose = std::sqrt(eta.eta());
  Matrix k0(3, 2), k1(3, 2), k2(3, 2);
  k0(0, 0) = keep;
  k0(1, 1) = keep;
  k1(2, 0) = lose;
  k2(2, 1) = lose;
  return KrausChannel({k0, k1, k2}, 2, 3);
}

KrausChannel mixed_pauli(const PauliProbs& p) {
  std::vector<Matrix> ops;
  for (int i = 0; i < 4; ++i) ops.push_back(pauli(i) * Complex(std::sqrt(p[i])));
  return KrausChannel(std::move(ops), 2, 2);
}

KrausChannel mixed_pauli_complement(const PauliProbs& p) { return complementary(mixed_pauli(p)); }

Matrix mixed_pauli_complement_direct(const PauliProbs& p, const Matrix& rho) {
  const auto s = pauli_expectations(rho);
  auto r = [&](int i, int j) { return std::sqrt(p[i] * p[j]); };
  return Matrix{
      {p[0] * s[0], r(0, 1) * s[1], r(0, 2) * s[2], r(0, 3) * s[3]},
      {r(0, 1) * s[1], p[1] * s[0], -1.0i * r(1, 2) * s[3], 1.0i * r(1, 3) * s[2]},
      {r(0, 2) * s[2], 1.0i * r(1, 2) * s[3], p[2] * s[0], -1.0i * r(2, 3) * s[1]},
      {r(0, 3) * s[3], -1.0i * r(1, 3) * s[2], 1.0i * r(2, 3) * s[1], p[3] * s[0]},
  };
}

KrausChannel dephasing(double p3) {
  if (!(p3 >= 0.0 && p3 <= 1.0)) throw ParameterError("dephasing probability must lie in [0, 1]");
  return mixed_pauli(PauliProbs(1.0 - p3, 0.0, 0.0, p3));
}

KrausChannel amplitude_damping(NoiseParam eta) {
  Matrix k0 = Matrix::diagonal({1.0, std::sqrt(1.0 - eta.eta())});
  Matrix k1(2, 2);
  k1(0, 1) = std::sqrt(eta.eta());
  return KrausChannel({k0, k1}, 2, 2);
}

Isometry joint_isometry(NoiseParam eta) {
  // Output index for qubits (s1, s2, g1, g2, a), S1 most significant.
  auto index = [](std::size_t s1, std::size_t s2, std::size_t g1, std::size_t g2, std::size_t a) {
    return (((s1 * 2 + s2) * 2 + g1) * 2 + g2) * 2 + a;
  };
  const double syndrome[2] = {std::sqrt(1.0 - eta.eta()), std::sqrt(eta.eta())};
  const double bell = 1.0 / std::sqrt(2.0);
  Matrix a(32, 2);
  for (std::size_t in = 0; in < 2; ++in) {
    for (std::size_t s = 0; s < 2; ++s) {  // |s> = sum_s amp |s s>
      for (std::size_t g = 0; g < 2; ++g) {  // |Phi> = sum_g |g g> / sqrt 2
        const double amp = syndrome[s] * bell;
        if (s == 0) {
          a(index(0, 0, g, g, in), in) += amp;
        } else {
          a(index(1, 1, in, g, g), in) += amp;  // A <-> G1 swapped
        }
      }
    }
  }
  return Isometry(std::move(a), {2, 2, 2, 2, 2});
}

const std::vector<FamilyInfo>& family_catalog() {
  static const std::vector<FamilyInfo> kCatalog = {
      {"depolarizing", "eta", "[0, 1]", "(1 - eta) rho + eta 1/2"},
      {"epolarizing", "eta", "[0, 1]", "complement of depolarizing(eta), 4-dim output"},
      {"erasure", "eta", "[0, 1]", "erases to flag |2> with probability eta"},
      {"dephasing", "p3", "[0, 1]", "(1 - p3) rho + p3 sigma3 rho sigma3"},
      {"mixed-pauli", "t (with --p weights)", "[0, 1]",
       "p0 = 1 - t, (p1, p2, p3) = t * normalized --p weights"},
      {"amplitude-damping", "eta", "[0, 1]", "|1> decays to |0> with probability eta"},
      {"joint-isometry", "eta (with --keep)", "[0, 1]",
       "C^2 -> S1 S2 G1 G2 A, channel obtained by keeping the --keep factors"},
  };
  return kCatalog;
}

}  // namespace qcap
