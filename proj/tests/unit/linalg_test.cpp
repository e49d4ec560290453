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

#include "qcap/linalg.hpp"

#include <gtest/gtest.h>

#include <cmath>

#include "test_support.hpp"

namespace qcap {
namespace {

using namespace std::complex_literals;

TEST(TensorProduct, IdentityTimesIdentity) {
  EXPECT_EQ(tensor_product(Matrix::identity(2), Matrix::identity(2)), Matrix::identity(4));
}

TEST(TensorProduct, ZTimesZIsDiagonalSignPattern) {
  EXPECT_EQ(tensor_product(pauli(3), pauli(3)), Matrix::diagonal({1, -1, -1, 1}));
}

TEST(TensorProduct, XTimesYHandExpanded) {
  // [[0, Y], [Y, 0]] with Y = [[0, -i], [i, 0]].
  const Matrix expected{{0, 0, 0, -1.0i}, {0, 0, 1.0i, 0}, {0, -1.0i, 0, 0}, {1.0i, 0, 0, 0}};
  EXPECT_EQ(tensor_product(pauli(1), pauli(2)), expected);
}

TEST(TensorProduct, RejectsOversizedProducts) {
  Tolerances tol;
  tol.max_dimension = 8;
  EXPECT_THROW(tensor_product(Matrix::identity(4), Matrix::identity(4), tol), SizeError);
  EXPECT_NO_THROW(tensor_product(Matrix::identity(2), Matrix::identity(4), tol));
}

TEST(TensorProduct, MixedProductProperty) {
  testing::Generator gen(1);
  for (int trial = 0; trial < 20; ++trial) {
    const Matrix a = gen.matrix(2, 3), b = gen.matrix(3, 2), c = gen.matrix(3, 2),
                 d = gen.matrix(2, 3);
    const Matrix lhs = tensor_product(a, b) * tensor_product(c, d);
    const Matrix rhs = tensor_product(a * c, b * d);
    EXPECT_LE(max_abs_diff(lhs, rhs), 1e-12);
  }
}

TEST(PartialTrace, ProductStateFactorizes) {
  testing::Generator gen(2);
  const Matrix rho = gen.density(2).matrix();
  const Matrix sigma = gen.matrix(2, 2);
  const Matrix reduced = partial_trace(tensor_product(rho, sigma), {2, 2}, {0});
  EXPECT_LE(max_abs_diff(reduced, rho * sigma.trace()), 1e-12);
}

TEST(PartialTrace, BellStateMarginalIsMaximallyMixed) {
  const double r = 1.0 / std::sqrt(2.0);
  const std::vector<Complex> phi = {r, 0, 0, r};
  const Matrix bell = Matrix::outer(phi, phi);
  EXPECT_LE(max_abs_diff(partial_trace(bell, {2, 2}, {1}), Matrix::identity(2) * 0.5), 1e-15);
  EXPECT_LE(max_abs_diff(partial_trace(bell, {2, 2}, {0}), Matrix::identity(2) * 0.5), 1e-15);
}

// Direct index summation over the middle factor of a 2 x 2 x 2 system.
Matrix trace_middle_oracle(const Matrix& m) {
  Matrix out(4, 4);
  for (int a = 0; a < 2; ++a) {
    for (int c = 0; c < 2; ++c) {
      for (int a2 = 0; a2 < 2; ++a2) {
        for (int c2 = 0; c2 < 2; ++c2) {
          Complex s = 0.0;
          for (int b = 0; b < 2; ++b) s += m(a * 4 + b * 2 + c, a2 * 4 + b * 2 + c2);
          out(a * 2 + c, a2 * 2 + c2) = s;
        }
      }
    }
  }
  return out;
}

TEST(PartialTrace, KeepOuterFactorsMatchesIndexSummation) {
  testing::Generator gen(3);
  for (int trial = 0; trial < 10; ++trial) {
    const Matrix m = gen.hermitian(8);
    EXPECT_LE(max_abs_diff(partial_trace(m, {2, 2, 2}, {0, 2}), trace_middle_oracle(m)), 1e-12);
  }
}

TEST(PartialTrace, LinearAndTracePreserving) {
  testing::Generator gen(4);
  const std::vector<std::size_t> dims = {2, 3, 2};
  const std::vector<std::size_t> keep = {1};
  for (int trial = 0; trial < 20; ++trial) {
    const Matrix x = gen.matrix(12, 12), y = gen.matrix(12, 12);
    const Complex a(gen.normal(), gen.normal());
    const Matrix lhs = partial_trace(x * a + y, dims, keep);
    const Matrix rhs = partial_trace(x, dims, keep) * a + partial_trace(y, dims, keep);
    EXPECT_LE(max_abs_diff(lhs, rhs), 1e-12);
    EXPECT_LE(std::abs(partial_trace(x, dims, keep).trace() - x.trace()), 1e-12);
  }
}

TEST(PartialTrace, ErrorPaths) {
  const Matrix m = Matrix::identity(4);
  EXPECT_THROW(partial_trace(m, {2, 3}, {0}), DimensionError);
  EXPECT_THROW(partial_trace(m, {2, 2}, {}), DimensionError);
  EXPECT_THROW(partial_trace(m, {2, 2}, {2}), DimensionError);
  EXPECT_THROW(partial_trace(Matrix(2, 4), {2, 2}, {0}), DimensionError);
}

TEST(HermitianEig, DiagonalInput) {
  const HermitianSpectrum s = hermitian_eig(Matrix::diagonal({3, 1, 2}));
  ASSERT_EQ(s.size(), 3u);
  EXPECT_DOUBLE_EQ(s[0], 3);
  EXPECT_DOUBLE_EQ(s[1], 2);
  EXPECT_DOUBLE_EQ(s[2], 1);
}

TEST(HermitianEig, PauliSpectra) {
  for (int i = 1; i <= 3; ++i) {
    const HermitianSpectrum s = hermitian_eig(pauli(i));
    EXPECT_NEAR(s[0], 1.0, 1e-15);
    EXPECT_NEAR(s[1], -1.0, 1e-15);
  }
}

TEST(HermitianEig, RejectsNonHermitian) {
  EXPECT_THROW(hermitian_eig(Matrix{{0, 1}, {0, 0}}), ShapeError);
  EXPECT_THROW(hermitian_eig(Matrix(2, 3)), ShapeError);
}

TEST(HermitianEig, SweepCapReportsConvergenceError) {
  Tolerances tol;
  tol.eig_max_sweeps = 0;
  EXPECT_THROW(hermitian_eig(pauli(1), tol), ConvergenceError);
}

TEST(HermitianEig, TraceResidualAndUnitaryInvariance) {
  testing::Generator gen(5);
  for (std::size_t n : {2u, 3u, 4u, 8u, 16u, 32u}) {
    const Matrix h = gen.hermitian(n);
    const HermitianEigensystem es = hermitian_eigensystem(h);
    EXPECT_NEAR(es.spectrum.sum(), h.trace().real(), 1e-10);
    EXPECT_LE(eigen_residual(h, es), 1e-9);
    for (std::size_t k = 1; k < n; ++k) EXPECT_GE(es.spectrum[k - 1], es.spectrum[k]);

    const Matrix u = gen.unitary(n);
    const HermitianSpectrum rotated = hermitian_eig(u * h * u.adjoint(), Tolerances{});
    for (std::size_t k = 0; k < n; ++k) EXPECT_NEAR(rotated[k], es.spectrum[k], 1e-9);
  }
}

TEST(HermitianEig, DensitySpectrumUnitarilyInvariant) {
  testing::Generator gen(6);
  for (int trial = 0; trial < 20; ++trial) {
    const Matrix rho = gen.density(4).matrix();
    const Matrix u = gen.unitary(4);
    const HermitianSpectrum a = hermitian_eig(rho), b = hermitian_eig(u * rho * u.adjoint());
    for (std::size_t k = 0; k < 4; ++k) EXPECT_NEAR(a[k], b[k], 1e-9);
  }
}

TEST(HsInner, PauliExamples) {
  for (double delta : {0.0, 0.1, 0.37, 0.5}) {
    const Matrix rho = Matrix::diagonal({1.0 - delta, delta});
    EXPECT_NEAR(std::abs(hs_inner(pauli(3), rho) - Complex(1.0 - 2.0 * delta)), 0.0, 1e-15);
  }
  EXPECT_EQ(hs_inner(pauli(1), pauli(2)), Complex(0.0));
  EXPECT_EQ(hs_inner(pauli(2), pauli(2)), Complex(2.0));
  EXPECT_THROW(hs_inner(Matrix(2, 2), Matrix(2, 3)), DimensionError);
}

TEST(HsInner, ConjugateSymmetric) {
  testing::Generator gen(7);
  for (int trial = 0; trial < 10; ++trial) {
    const Matrix x = gen.matrix(3, 3), y = gen.matrix(3, 3);
    EXPECT_LE(std::abs(hs_inner(x, y) - std::conj(hs_inner(y, x))), 1e-12);
  }
}

TEST(Matrix, RejectsNonFiniteAndBadSizes) {
  EXPECT_THROW(Matrix(2, 2, std::vector<Complex>(3)), DimensionError);
  EXPECT_THROW(Matrix(1, 1, {Complex(std::nan(""), 0.0)}), ShapeError);
}

}  // namespace
}  // namespace qcap
