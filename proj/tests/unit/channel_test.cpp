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

#include "qcap/channel.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "qcap/coherent.hpp"
#include "qcap/families.hpp"
#include "test_support.hpp"

namespace qcap {
namespace {

using namespace std::complex_literals;

KrausChannel identity_channel(std::size_t d = 2) {
  return KrausChannel({Matrix::identity(d)}, d, d);
}

std::vector<KrausChannel> sample_channels() {
  return {depolarizing(NoiseParam(0.3)), epolarizing(NoiseParam(0.7)), erasure(NoiseParam(0.4)),
          amplitude_damping(NoiseParam(0.25)), mixed_pauli(PauliProbs(0.6, 0.2, 0.15, 0.05)),
          dephasing(0.1), identity_channel()};
}

TEST(Apply, DepolarizingExamples) {
  testing::Generator gen(11);
  for (int trial = 0; trial < 5; ++trial) {
    const DensityOperator rho = gen.density(2);
    EXPECT_LE(max_abs_diff(apply(depolarizing(NoiseParam(1.0)), rho), Matrix::identity(2) * 0.5),
              1e-15);
    EXPECT_LE(max_abs_diff(apply(depolarizing(NoiseParam(0.0)), rho), rho.matrix()), 1e-15);
  }
  const DensityOperator zero(Matrix::diagonal({1.0, 0.0}));
  EXPECT_LE(max_abs_diff(apply(depolarizing(NoiseParam(0.5)), zero), Matrix::diagonal({0.75, 0.25})),
            1e-15);
}

TEST(Apply, OutputIsAStateForEveryFamily) {
  testing::Generator gen(12);
  for (const KrausChannel& ch : sample_channels()) {
    for (int trial = 0; trial < 5; ++trial) {
      EXPECT_NO_THROW(DensityOperator(apply(ch, gen.density(ch.d_in()))));
    }
  }
}

TEST(Apply, ErrorPaths) {
  EXPECT_THROW(apply(depolarizing(NoiseParam(0.2)), DensityOperator::maximally_mixed(3)),
               DimensionError);
  EXPECT_THROW(DensityOperator(Matrix::diagonal({1.2, -0.2})), StateError);
  EXPECT_THROW(DensityOperator(Matrix::diagonal({0.5, 0.4})), StateError);
  EXPECT_THROW(DensityOperator(Matrix{{0.5, 1.0}, {0.0, 0.5}}), StateError);
}

TEST(IsometricExtension, DepolarizingIsTheStandardIsometry) {
  for (double eta : {0.0, 0.2, 0.6, 1.0}) {
    const double e = 0.75 * eta;
    Matrix expected = tensor_product(pauli(0), Matrix::basis(4, 0)) * std::sqrt(1.0 - e);
    for (int k = 1; k <= 3; ++k) {
      expected += tensor_product(pauli(k), Matrix::basis(4, k)) * std::sqrt(e / 3.0);
    }
    const Isometry iso = isometric_extension(depolarizing(NoiseParam(eta)));
    EXPECT_EQ(iso.out_dims(), (std::vector<std::size_t>{2, 4}));
    EXPECT_LE(max_abs_diff(iso.matrix(), expected), 1e-15);
  }
}

TEST(IsometricExtension, IdentityChannel) {
  const Isometry iso = isometric_extension(identity_channel());
  EXPECT_EQ(iso.matrix(), tensor_product(Matrix::identity(2), Matrix::basis(1, 0)));
}

TEST(IsometricExtension, ErasureIsAnIsometry) {
  for (double eta : {0.0, 0.3, 0.5, 1.0}) {
    const Matrix a = isometric_extension(erasure(NoiseParam(eta))).matrix();
    // A^dagger A by explicit summation.
    for (std::size_t i = 0; i < 2; ++i) {
      for (std::size_t j = 0; j < 2; ++j) {
        Complex s = 0.0;
        for (std::size_t r = 0; r < a.rows(); ++r) s += std::conj(a(r, i)) * a(r, j);
        EXPECT_LE(std::abs(s - Complex(i == j ? 1.0 : 0.0)), 1e-12);
      }
    }
  }
}

TEST(Complementary, ConsistentWithIsometricExtension) {
  testing::Generator gen(13);
  for (const KrausChannel& ch : sample_channels()) {
    const Isometry iso = isometric_extension(ch);
    const KrausChannel env = complementary(ch);
    EXPECT_LE(env.completeness_deviation(), 1e-10);
    for (int trial = 0; trial < 20; ++trial) {
      const DensityOperator rho = gen.density(ch.d_in());
      EXPECT_LE(max_abs_diff(apply_isometry(iso, rho, {0}), apply(ch, rho)), 1e-12);
      EXPECT_LE(max_abs_diff(apply_isometry(iso, rho, {1}), apply(env, rho)), 1e-12);
    }
  }
}

TEST(Complementary, DepolarizingGivesDisplayedMatrixOnDiagonalInput) {
  for (double eta : {0.1, 0.45, 0.9}) {
    for (double delta : {0.05, 0.3}) {
      const double e = 0.75 * eta;
      const double c = std::sqrt(e * (1 - e) / 3) * (1 - 2 * delta);
      const double d = e / 3;
      const double r = (1 - 2 * delta);
      const Matrix expected{{1 - e, 0, 0, c},
                            {0, d, -1.0i * d * r, 0},
                            {0, 1.0i * d * r, d, 0},
                            {c, 0, 0, d}};
      const Matrix got =
          apply(complementary(depolarizing(NoiseParam(eta))), DensityOperator::diagonal_qubit(delta));
      EXPECT_LE(max_abs_diff(got, expected), 1e-12);
    }
  }
}

TEST(Complementary, IdentityHasTrivialEnvironment) {
  const KrausChannel env = complementary(identity_channel());
  EXPECT_EQ(env.d_out(), 1u);
  testing::Generator gen(14);
  const Matrix out = apply(env, gen.density(2));
  EXPECT_NEAR(out(0, 0).real(), 1.0, 1e-15);
}

TEST(Complementary, BicomplementReproducesChannel) {
  const KrausChannel ch = depolarizing(NoiseParam(0.5));
  const KrausChannel twice = complementary(complementary(ch));
  testing::Generator gen(15);
  for (int trial = 0; trial < 10; ++trial) {
    const DensityOperator rho = gen.density(2);
    EXPECT_NEAR(coherent_information(twice, rho), coherent_information(ch, rho), 1e-9);
  }
}

TEST(Complementary, CoherentInformationIndependentOfKrausOrder) {
  testing::Generator gen(16);
  for (const KrausChannel& ch : sample_channels()) {
    std::vector<Matrix> ops = ch.kraus();
    std::reverse(ops.begin(), ops.end());
    // A unitary mix of the Kraus operators is another valid Kraus set.
    const Matrix u = gen.unitary(ops.size());
    std::vector<Matrix> mixed;
    for (std::size_t i = 0; i < ops.size(); ++i) {
      Matrix m(ch.d_out(), ch.d_in());
      for (std::size_t j = 0; j < ops.size(); ++j) m += ops[j] * u(i, j);
      mixed.push_back(m);
    }
    const KrausChannel reordered(ops, ch.d_in(), ch.d_out());
    const KrausChannel rotated(mixed, ch.d_in(), ch.d_out());
    for (int trial = 0; trial < 5; ++trial) {
      const DensityOperator rho = gen.density(ch.d_in());
      const double ref = coherent_information(ch, rho);
      EXPECT_NEAR(coherent_information(reordered, rho), ref, 1e-9);
      EXPECT_NEAR(coherent_information(rotated, rho), ref, 1e-9);
    }
  }
}

TEST(Choi, IdentityIsUnnormalizedBellProjector) {
  const ChoiMatrix c = choi(identity_channel());
  const std::vector<Complex> phi = {1, 0, 0, 1};
  EXPECT_EQ(c.m, Matrix::outer(phi, phi));
  const HermitianSpectrum s = hermitian_eig(c.m);
  EXPECT_NEAR(s[0], 2.0, 1e-15);
  EXPECT_NEAR(s[1], 0.0, 1e-15);
}

TEST(Choi, DepolarizingSpectrum) {
  for (double eta : {0.0, 0.3, 0.8, 1.0}) {
    const HermitianSpectrum s = hermitian_eig(choi(depolarizing(NoiseParam(eta))).m);
    std::vector<double> expected = {2 - 1.5 * eta, eta / 2, eta / 2, eta / 2};
    std::sort(expected.rbegin(), expected.rend());
    for (std::size_t k = 0; k < 4; ++k) EXPECT_NEAR(s[k], expected[k], 1e-12);
  }
}

TEST(Choi, ScaledKrausSetIsNotTracePreserving) {
  const KrausChannel good = depolarizing(NoiseParam(0.4));
  std::vector<Matrix> ops;
  for (const Matrix& k : good.kraus()) ops.push_back(k * 0.9);
  EXPECT_THROW(KrausChannel(ops, 2, 2), ValidationError);
  const KrausChannel bad = KrausChannel::unchecked(ops, 2, 2);
  try {
    choi(bad);
    FAIL() << "expected a validation error";
  } catch (const ValidationError& e) {
    EXPECT_NEAR(e.offending(), 0.19, 1e-12);
  }
}

TEST(Tensor, Identities) {
  const KrausChannel id2 = tensor(identity_channel(), identity_channel());
  EXPECT_EQ(id2.d_in(), 4u);
  EXPECT_EQ(id2.kraus().front(), Matrix::identity(4));

  const KrausChannel dd = tensor(depolarizing(NoiseParam(0.6)), depolarizing(NoiseParam(0.6)));
  EXPECT_LE(max_abs_diff(apply(dd, DensityOperator::maximally_mixed(4)), Matrix::identity(4) * 0.25),
            1e-15);
}

TEST(Tensor, ProductInputsFactorize) {
  testing::Generator gen(17);
  const KrausChannel a = amplitude_damping(NoiseParam(0.3)), b = erasure(NoiseParam(0.2));
  const KrausChannel ab = tensor(a, b);
  for (int trial = 0; trial < 10; ++trial) {
    const DensityOperator r1 = gen.density(2), r2 = gen.density(2);
    EXPECT_LE(max_abs_diff(apply(ab, tensor_product(r1, r2)),
                           tensor_product(apply(a, r1), apply(b, r2))),
              1e-12);
  }
}

TEST(Tensor, CoherentInformationAdditiveOnProductStates) {
  const KrausChannel phi = depolarizing(NoiseParam(0.3));
  const DensityOperator rho(Matrix::diagonal({0.9, 0.1}));
  const double single = coherent_information(phi, rho);
  const double pair = coherent_information(tensor(phi, phi), tensor_product(rho, rho));
  EXPECT_NEAR(pair, 2 * single, 1e-9);
  // mpmath oracle, tests/oracles/oracle_values.py
  EXPECT_NEAR(single, -0.0846287784079249, 1e-12);
}

TEST(Tensor, DimensionCap) {
  Tolerances tol;
  tol.max_dimension = 8;
  const KrausChannel phi = depolarizing(NoiseParam(0.3));
  const KrausChannel two = tensor(phi, phi, tol);
  EXPECT_NO_THROW(tensor(two, phi, tol));
  EXPECT_THROW(tensor(two, two, tol), SizeError);
}

TEST(ApplyIsometry, KeepEverything) {
  testing::Generator gen(18);
  const Isometry iso = isometric_extension(amplitude_damping(NoiseParam(0.4)));
  const DensityOperator rho = gen.density(2);
  const Matrix full = iso.matrix() * rho.matrix() * iso.matrix().adjoint();
  EXPECT_LE(max_abs_diff(apply_isometry(iso, rho, {0, 1}), full), 1e-15);
  EXPECT_NEAR(apply_isometry(iso, rho, {1}).trace().real(), 1.0, 1e-12);
  EXPECT_THROW(apply_isometry(iso, rho, {2}), DimensionError);
}

TEST(Isometry, Validation) {
  EXPECT_THROW(Isometry(Matrix::identity(2) * 0.5, {2}), ValidationError);
  EXPECT_THROW(Isometry(Matrix::identity(4), {2, 3}), DimensionError);
}

TEST(Json, RoundTripPreservesEveryFamilyChannel) {
  for (const KrausChannel& ch : sample_channels()) {
    const KrausChannel back = channel_from_json(to_json(ch));
    ASSERT_EQ(back.size(), ch.size());
    EXPECT_EQ(back.d_in(), ch.d_in());
    EXPECT_EQ(back.d_out(), ch.d_out());
    for (std::size_t k = 0; k < ch.size(); ++k) EXPECT_EQ(back[k], ch[k]);
  }
}

TEST(Json, RejectsMalformedAndNonCptpInput) {
  EXPECT_THROW(channel_from_json("{"), DimensionError);
  EXPECT_THROW(channel_from_json(R"({"d_in": 2, "d_out": 2})"), DimensionError);
  EXPECT_THROW(channel_from_json(R"({"d_in": 1, "d_out": 1, "kraus": [[[1, 0], [0, 0]]]})"),
               DimensionError);
  EXPECT_THROW(channel_from_json(R"({"d_in": 1, "d_out": 1, "kraus": [[[0.5, 0]]]})"),
               ValidationError);
  const KrausChannel one = channel_from_json(R"({"d_in": 1, "d_out": 1, "kraus": [[[0, 1]]]})");
  EXPECT_EQ(one[0](0, 0), Complex(0, 1));
}

}  // namespace
}  // namespace qcap

namespace qcap {
namespace {

TEST(RestrictTo, MatchesPartialTraceOfIsometry) {
  testing::Generator gen(19);
  const Isometry iso = joint_isometry(NoiseParam(0.35));
  const std::vector<std::vector<std::size_t>> keeps = {{kA}, {kS1, kA}, {kS1, kS2, kG1, kG2}, {kG2}};
  for (const auto& keep : keeps) {
    const KrausChannel ch = restrict_to(iso, keep);
    for (int trial = 0; trial < 5; ++trial) {
      const DensityOperator rho = gen.density(2);
      EXPECT_LE(max_abs_diff(apply(ch, rho), apply_isometry(iso, rho, keep)), 1e-12);
      EXPECT_NEAR(coherent_information(ch, rho), coherent_information(iso, rho, keep), 1e-9);
    }
  }
}

}  // namespace
}  // namespace qcap
