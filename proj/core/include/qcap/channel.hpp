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

// Channel representations: Kraus form, isometric extension, Choi matrix
// and the complementary channel.

#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "qcap/linalg.hpp"

namespace qcap {

/// A positive semidefinite, unit-trace matrix. Construction validates and
/// rejects; it never repairs.
class DensityOperator {
 public:
  /// StateError unless m is Hermitian, min eigenvalue >= -tol.psd and
  /// |tr m - 1| <= tol.trace.
  explicit DensityOperator(Matrix m, const Tolerances& tol = default_tolerances());

  static DensityOperator maximally_mixed(std::size_t dim);
  /// diag(1 - delta, delta).
  static DensityOperator diagonal_qubit(double delta);
  /// (1 + x sigma1 + y sigma2 + z sigma3) / 2 with |r| <= 1.
  static DensityOperator from_bloch(double x, double y, double z);

  const Matrix& matrix() const { return m_; }
  std::size_t dim() const { return m_.rows(); }

 private:
  Matrix m_;
};

DensityOperator tensor_product(const DensityOperator& a, const DensityOperator& b,
                               const Tolerances& tol = default_tolerances());

/// CPTP map as an ordered list of Kraus operators, each d_out x d_in.
class KrausChannel {
 public:
  /// Validates shapes and completeness; ValidationError carries the
  /// completeness deviation when it exceeds tol.kraus_completeness.
  KrausChannel(std::vector<Matrix> kraus, std::size_t d_in, std::size_t d_out,
               const Tolerances& tol = default_tolerances());

  /// Shape checks only. For fault injection and for inspecting maps that
  /// are not trace preserving.
  static KrausChannel unchecked(std::vector<Matrix> kraus, std::size_t d_in, std::size_t d_out);

  std::size_t d_in() const { return d_in_; }
  std::size_t d_out() const { return d_out_; }
  std::size_t size() const { return kraus_.size(); }
  const std::vector<Matrix>& kraus() const { return kraus_; }
  const Matrix& operator[](std::size_t k) const { return kraus_[k]; }

  /// max entry of |sum_k A_k^dagger A_k - 1|.
  double completeness_deviation() const;

 private:
  KrausChannel() = default;
  static void check_shapes(const std::vector<Matrix>& kraus, std::size_t d_in, std::size_t d_out);

  std::vector<Matrix> kraus_;
  std::size_t d_in_ = 0;
  std::size_t d_out_ = 0;
};

/// Isometry A : C^{d_in} -> C^{prod out_dims}.
class Isometry {
 public:
  /// DimensionError if prod(out_dims) != rows; ValidationError if
  /// |A^dagger A - 1| exceeds tol.isometry.
  Isometry(Matrix a, std::vector<std::size_t> out_dims,
           const Tolerances& tol = default_tolerances());

  const Matrix& matrix() const { return a_; }
  const std::vector<std::size_t>& out_dims() const { return out_dims_; }
  std::size_t d_in() const { return a_.cols(); }
  double isometry_deviation() const;

 private:
  Matrix a_;
  std::vector<std::size_t> out_dims_;
};

/// Unnormalized Choi matrix sum_ij |i><j| (x) Phi(|i><j|), input factor first.
struct ChoiMatrix {
  Matrix m;
  std::size_t d_in = 0;
  std::size_t d_out = 0;
};

/// Sum_k A_k rho A_k^dagger. DimensionError if rho is not d_in x d_in.
Matrix apply(const KrausChannel& ch, const DensityOperator& rho);
/// Same map on an arbitrary operator (no state validation).
Matrix apply(const KrausChannel& ch, const Matrix& x);

/// A = sum_k A_k (x) |k>, out_dims = {d_out, number of Kraus operators}.
Isometry isometric_extension(const KrausChannel& ch,
                             const Tolerances& tol = default_tolerances());

/// rho -> Tr_B(A rho A^dagger) in Kraus form. Environment basis follows the
/// Kraus list order: (B_j)[k, i] = (A_k)[j, i].
KrausChannel complementary(const KrausChannel& ch, const Tolerances& tol = default_tolerances());

/// Builds the Choi matrix and validates it: ValidationError with the
/// minimum eigenvalue on CP violation, or the trace-preservation deviation
/// on TP violation.
ChoiMatrix choi(const KrausChannel& ch, const Tolerances& tol = default_tolerances());
/// Unvalidated construction, for reporting.
ChoiMatrix choi_unvalidated(const KrausChannel& ch);

/// Kraus set {A_i (x) B_j}, i major.
KrausChannel tensor(const KrausChannel& a, const KrausChannel& b,
                    const Tolerances& tol = default_tolerances());

/// partial_trace(A rho A^dagger, out_dims, keep).
Matrix apply_isometry(const Isometry& iso, const DensityOperator& rho,
                      std::span<const std::size_t> keep);
Matrix apply_isometry(const Isometry& iso, const DensityOperator& rho,
                      std::initializer_list<std::size_t> keep);

/// The channel rho -> Tr_rest(A rho A^dagger) in Kraus form, one Kraus
/// operator per basis state of the discarded factors.
KrausChannel restrict_to(const Isometry& iso, std::span<const std::size_t> keep,
                         const Tolerances& tol = default_tolerances());

/// Factor indices of out_dims not in keep (ascending).
std::vector<std::size_t> complement_factors(std::size_t factor_count,
                                            std::span<const std::size_t> keep);

// JSON interchange: {"d_in": n, "d_out": m, "kraus": [[[re, im], ...], ...]},
// each Kraus operator a flat row-major list of d_out * d_in pairs.
std::string to_json(const KrausChannel& ch);
/// Throws DimensionError / ValidationError on malformed or non-CPTP input.
KrausChannel channel_from_json(const std::string& text,
                               const Tolerances& tol = default_tolerances());

}  // namespace qcap
