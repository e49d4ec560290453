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

// Dense complex matrices and the handful of operations the channel code
// needs. Storage is row-major. For tensor products the first factor is the
// most significant: index (i, j) of a (da x db) product space is i * db + j.

#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "qcap/config.hpp"

namespace qcap {

using Complex = std::complex<double>;

class Matrix {
 public:
  Matrix() = default;
  /// Zero matrix.
  Matrix(std::size_t rows, std::size_t cols);
  /// Takes ownership of row-major entries; throws DimensionError on a size
  /// mismatch and ShapeError on non-finite entries.
  Matrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);
  Matrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static Matrix identity(std::size_t n);
  static Matrix diagonal(std::span<const double> values);
  static Matrix diagonal(std::initializer_list<double> values);
  /// |v><w| for column vectors given as entry lists.
  static Matrix outer(std::span<const Complex> v, std::span<const Complex> w);
  /// Column vector with a single 1 at `index`.
  static Matrix basis(std::size_t dim, std::size_t index);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  bool empty() const { return entries_.empty(); }

  Complex& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  std::span<const Complex> entries() const { return entries_; }

  Matrix adjoint() const;
  Complex trace() const;
  /// Frobenius norm.
  double norm() const;
  double max_abs() const;

  Matrix& operator+=(const Matrix& other);
  Matrix& operator-=(const Matrix& other);
  Matrix& operator*=(Complex s);

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, Complex s) { return a *= s; }
  friend Matrix operator*(Complex s, Matrix a) { return a *= s; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> entries_;
};

/// max_ij |a_ij - b_ij|; DimensionError on shape mismatch.
double max_abs_diff(const Matrix& a, const Matrix& b);

bool is_hermitian(const Matrix& h, double tol);

/// Kronecker product a (x) b. SizeError if either output dimension exceeds
/// max_dimension.
Matrix tensor_product(const Matrix& a, const Matrix& b,
                      const Tolerances& tol = default_tolerances());

/// Reduced matrix on the factors listed in `keep` (ascending, unique),
/// in their original order. `dims` lists the factor dimensions of m.
Matrix partial_trace(const Matrix& m, std::span<const std::size_t> dims,
                     std::span<const std::size_t> keep);
Matrix partial_trace(const Matrix& m, std::initializer_list<std::size_t> dims,
                     std::initializer_list<std::size_t> keep);

/// Tr(x^dagger y).
Complex hs_inner(const Matrix& x, const Matrix& y);

/// Eigenvalues of a Hermitian matrix, sorted descending.
struct HermitianSpectrum {
  std::vector<double> eigenvalues;

  std::size_t size() const { return eigenvalues.size(); }
  double operator[](std::size_t i) const { return eigenvalues[i]; }
  double sum() const;
  double min() const { return eigenvalues.back(); }
};

struct HermitianEigensystem {
  HermitianSpectrum spectrum;
  Matrix vectors;  // column k is the eigenvector of spectrum[k]
  int sweeps = 0;
};

/// Cyclic complex Jacobi. ShapeError on non-Hermitian input (beyond
/// tol.hermitian), ConvergenceError after tol.eig_max_sweeps sweeps.
HermitianEigensystem hermitian_eigensystem(const Matrix& h,
                                           const Tolerances& tol = default_tolerances());
HermitianSpectrum hermitian_eig(const Matrix& h, const Tolerances& tol = default_tolerances());

/// max_k |h v_k - lambda_k v_k| / ||h||, for self-checks.
double eigen_residual(const Matrix& h, const HermitianEigensystem& es);

/// Pauli matrices sigma_0 = 1, sigma_1, sigma_2, sigma_3.
const Matrix& pauli(int index);

}  // namespace qcap
