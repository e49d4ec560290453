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

// Seeded random matrices, states and channels for property checks.

#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include "qcap/channel.hpp"
#include "qcap/linalg.hpp"

namespace qcap {

class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo = 0.0, double hi = 1.0) {
    return std::uniform_real_distribution<double>(lo, hi)(rng_);
  }
  double normal() { return std::normal_distribution<double>()(rng_); }

  Matrix matrix(std::size_t rows, std::size_t cols) {
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = Complex(normal(), normal());
    }
    return m;
  }

  Matrix hermitian(std::size_t n) {
    const Matrix g = matrix(n, n);
    return (g + g.adjoint()) * Complex(0.5);
  }

  /// Gram-Schmidt on a Gaussian matrix.
  Matrix unitary(std::size_t n) {
    Matrix g = matrix(n, n);
    for (std::size_t c = 0; c < n; ++c) {
      for (std::size_t prev = 0; prev < c; ++prev) {
        Complex dot = 0.0;
        for (std::size_t r = 0; r < n; ++r) dot += std::conj(g(r, prev)) * g(r, c);
        for (std::size_t r = 0; r < n; ++r) g(r, c) -= dot * g(r, prev);
      }
      double norm = 0.0;
      for (std::size_t r = 0; r < n; ++r) norm += std::norm(g(r, c));
      norm = std::sqrt(norm);
      for (std::size_t r = 0; r < n; ++r) g(r, c) /= norm;
    }
    return g;
  }

  /// G G^dagger / Tr, full rank almost surely.
  DensityOperator density(std::size_t n) {
    const Matrix g = matrix(n, n);
    Matrix rho = g * g.adjoint();
    rho *= Complex(1.0 / rho.trace().real());
    return DensityOperator((rho + rho.adjoint()) * Complex(0.5));
  }

  /// Channel with `count` Kraus operators cut from the first d_in columns of
  /// a random unitary on C^{d_out * count}.
  KrausChannel channel(std::size_t d_in, std::size_t d_out, std::size_t count) {
    const Matrix u = unitary(d_out * count);
    std::vector<Matrix> ops(count, Matrix(d_out, d_in));
    for (std::size_t r = 0; r < d_out; ++r) {
      for (std::size_t k = 0; k < count; ++k) {
        for (std::size_t i = 0; i < d_in; ++i) ops[k](r, i) = u(r * count + k, i);
      }
    }
    return KrausChannel(std::move(ops), d_in, d_out);
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace qcap
