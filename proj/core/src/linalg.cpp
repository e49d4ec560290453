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

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <string>

namespace qcap {

const Tolerances& default_tolerances() {
  static const Tolerances kDefaults{};
  return kDefaults;
}

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) {
    throw DimensionError("matrix entry count " + std::to_string(entries_.size()) +
                         " does not match " + std::to_string(rows_) + "x" +
                         std::to_string(cols_));
  }
  for (const Complex& z : entries_) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw ShapeError("matrix entries must be finite");
    }
  }
}

Matrix::Matrix(std::initializer_list<std::initializer_list<Complex>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  entries_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw DimensionError("ragged matrix literal");
    entries_.insert(entries_.end(), row.begin(), row.end());
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Matrix Matrix::diagonal(std::span<const double> values) {
  Matrix m(values.size(), values.size());
  for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
  return m;
}

Matrix Matrix::diagonal(std::initializer_list<double> values) {
  return diagonal(std::span<const double>(values.begin(), values.size()));
}

Matrix Matrix::outer(std::span<const Complex> v, std::span<const Complex> w) {
  Matrix m(v.size(), w.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = 0; j < w.size(); ++j) m(i, j) = v[i] * std::conj(w[j]);
  }
  return m;
}

Matrix Matrix::basis(std::size_t dim, std::size_t index) {
  Matrix m(dim, 1);
  m(index, 0) = 1.0;
  return m;
}

Matrix Matrix::adjoint() const {
  Matrix m(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) m(c, r) = std::conj((*this)(r, c));
  }
  return m;
}

Complex Matrix::trace() const {
  Complex t = 0.0;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

double Matrix::norm() const {
  double s = 0.0;
  for (const Complex& z : entries_) s += std::norm(z);
  return std::sqrt(s);
}

double Matrix::max_abs() const {
  double m = 0.0;
  for (const Complex& z : entries_) m = std::max(m, std::abs(z));
  return m;
}

Matrix& Matrix::operator+=(const Matrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw DimensionError("matrix sum shape mismatch");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += other.entries_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) {
    throw DimensionError("matrix difference shape mismatch");
  }
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= other.entries_[i];
  return *this;
}

Matrix& Matrix::operator*=(Complex s) {
  for (Complex& z : entries_) z *= s;
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) {
    throw DimensionError("matrix product: " + std::to_string(a.rows_) + "x" +
                         std::to_string(a.cols_) + " times " + std::to_string(b.rows_) +
                         "x" + std::to_string(b.cols_));
  }
  Matrix m(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex(0.0)) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) m(i, j) += aik * b(k, j);
    }
  }
  return m;
}

double max_abs_diff(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionError("shape mismatch");
  double d = 0.0;
  auto ea = a.entries();
  auto eb = b.entries();
  for (std::size_t i = 0; i < ea.size(); ++i) d = std::max(d, std::abs(ea[i] - eb[i]));
  return d;
}

bool is_hermitian(const Matrix& h, double tol) {
  if (!h.is_square()) return false;
  for (std::size_t i = 0; i < h.rows(); ++i) {
    for (std::size_t j = i; j < h.cols(); ++j) {
      if (std::abs(h(i, j) - std::conj(h(j, i))) > tol) return false;
    }
  }
  return true;
}

Matrix tensor_product(const Matrix& a, const Matrix& b, const Tolerances& tol) {
  const std::size_t rows = a.rows() * b.rows();
  const std::size_t cols = a.cols() * b.cols();
  if (rows > tol.max_dimension || cols > tol.max_dimension) {
    throw SizeError("tensor product " + std::to_string(rows) + "x" + std::to_string(cols) +
                    " exceeds maximum dimension " + std::to_string(tol.max_dimension));
  }
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Complex aij = a(i, j);
      if (aij == Complex(0.0)) continue;
      for (std::size_t k = 0; k < b.rows(); ++k) {
        for (std::size_t l = 0; l < b.cols(); ++l) {
          m(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
        }
      }
    }
  }
  return m;
}

Matrix partial_trace(const Matrix& m, std::span<const std::size_t> dims,
                     std::span<const std::size_t> keep) {
  if (!m.is_square()) throw DimensionError("partial_trace needs a square matrix");
  const std::size_t n = dims.size();
  std::size_t total = 1;
  for (std::size_t d : dims) {
    if (d == 0) throw DimensionError("factor dimensions must be positive");
    total *= d;
  }
  if (total != m.rows()) {
    throw DimensionError("factor dimensions multiply to " + std::to_string(total) +
                         " but matrix has dimension " + std::to_string(m.rows()));
  }
  if (keep.empty()) throw DimensionError("keep set must be nonempty");
  std::vector<bool> kept(n, false);
  for (std::size_t i = 0; i < keep.size(); ++i) {
    if (keep[i] >= n) throw DimensionError("keep index out of range");
    if (i > 0 && keep[i] <= keep[i - 1]) {
      throw DimensionError("keep indices must be ascending and unique");
    }
    kept[keep[i]] = true;
  }

  // Per full index: its coordinate in the kept subspace and in the traced
  // subspace (mixed-radix, first factor most significant).
  std::vector<std::size_t> kept_index(total), traced_index(total);
  std::size_t kept_dim = 1;
  for (std::size_t f = 0; f < n; ++f) {
    if (kept[f]) kept_dim *= dims[f];
  }
  std::vector<std::size_t> digits(n, 0);
  for (std::size_t idx = 0; idx < total; ++idx) {
    std::size_t k = 0, t = 0;
    for (std::size_t f = 0; f < n; ++f) {
      if (kept[f]) {
        k = k * dims[f] + digits[f];
      } else {
        t = t * dims[f] + digits[f];
      }
    }
    kept_index[idx] = k;
    traced_index[idx] = t;
    for (std::size_t f = n; f-- > 0;) {
      if (++digits[f] < dims[f]) break;
      digits[f] = 0;
    }
  }

  Matrix out(kept_dim, kept_dim);
  for (std::size_t r = 0; r < total; ++r) {
    for (std::size_t c = 0; c < total; ++c) {
      if (traced_index[r] == traced_index[c]) out(kept_index[r], kept_index[c]) += m(r, c);
    }
  }
  return out;
}

Matrix partial_trace(const Matrix& m, std::initializer_list<std::size_t> dims,
                     std::initializer_list<std::size_t> keep) {
  return partial_trace(m, std::span<const std::size_t>(dims.begin(), dims.size()),
                       std::span<const std::size_t>(keep.begin(), keep.size()));
}

Complex hs_inner(const Matrix& x, const Matrix& y) {
  if (x.rows() != y.rows() || x.cols() != y.cols()) {
    throw DimensionError("hs_inner shape mismatch");
  }
  Complex s = 0.0;
  auto ex = x.entries();
  auto ey = y.entries();
  for (std::size_t i = 0; i < ex.size(); ++i) s += std::conj(ex[i]) * ey[i];
  return s;
}

double HermitianSpectrum::sum() const {
  return std::accumulate(eigenvalues.begin(), eigenvalues.end(), 0.0);
}

namespace {

double off_diagonal_norm(const Matrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (i != j) s += std::norm(a(i, j));
    }
  }
  return std::sqrt(s);
}

}  // namespace

HermitianEigensystem hermitian_eigensystem(const Matrix& h, const Tolerances& tol) {
  if (!h.is_square()) throw ShapeError("hermitian_eig needs a square matrix");
  if (!is_hermitian(h, tol.hermitian)) throw ShapeError("hermitian_eig input is not Hermitian");
  const std::size_t n = h.rows();

  // Work on the exactly Hermitian part.
  Matrix a = 0.5 * (h + h.adjoint());
  Matrix v = Matrix::identity(n);
  const double scale = a.norm();
  const double stop = tol.eig_offdiag * scale;

  int sweep = 0;
  while (off_diagonal_norm(a) > stop) {
    if (sweep >= tol.eig_max_sweeps) {
      throw ConvergenceError("Jacobi did not converge in " + std::to_string(tol.eig_max_sweeps) +
                             " sweeps");
    }
    ++sweep;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const Complex apq = a(p, q);
        const double g = std::abs(apq);
        if (g == 0.0 || g < 1e-300) continue;
        // Phase e makes the (p,q) element real; then a real rotation zeroes it.
        const Complex e = apq / g;
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double theta = (aqq - app) / (2.0 * g);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        // J acts on columns p, q: J_pp = c, J_pq = s, J_qp = -s conj(e), J_qq = c conj(e).
        const Complex jpp = c, jpq = s, jqp = -s * std::conj(e), jqq = c * std::conj(e);
        for (std::size_t k = 0; k < n; ++k) {
          const Complex akp = a(k, p), akq = a(k, q);
          a(k, p) = akp * jpp + akq * jqp;
          a(k, q) = akp * jpq + akq * jqq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const Complex apk = a(p, k), aqk = a(q, k);
          a(p, k) = std::conj(jpp) * apk + std::conj(jqp) * aqk;
          a(q, k) = std::conj(jpq) * apk + std::conj(jqq) * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
        for (std::size_t k = 0; k < n; ++k) {
          const Complex vkp = v(k, p), vkq = v(k, q);
          v(k, p) = vkp * jpp + vkq * jqp;
          v(k, q) = vkp * jpq + vkq * jqq;
        }
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return a(i, i).real() > a(j, j).real();
  });
  HermitianEigensystem es;
  es.sweeps = sweep;
  es.spectrum.eigenvalues.resize(n);
  es.vectors = Matrix(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    es.spectrum.eigenvalues[k] = a(order[k], order[k]).real();
    for (std::size_t r = 0; r < n; ++r) es.vectors(r, k) = v(r, order[k]);
  }
  return es;
}

HermitianSpectrum hermitian_eig(const Matrix& h, const Tolerances& tol) {
  return hermitian_eigensystem(h, tol).spectrum;
}

double eigen_residual(const Matrix& h, const HermitianEigensystem& es) {
  const std::size_t n = h.rows();
  const double scale = std::max(h.norm(), 1e-300);
  double worst = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t r = 0; r < n; ++r) {
      Complex hv = 0.0;
      for (std::size_t c = 0; c < n; ++c) hv += h(r, c) * es.vectors(c, k);
      worst = std::max(worst, std::abs(hv - es.spectrum[k] * es.vectors(r, k)));
    }
  }
  return worst / scale;
}

const Matrix& pauli(int index) {
  using namespace std::complex_literals;
  static const std::array<Matrix, 4> kPauli = {
      Matrix{{1.0, 0.0}, {0.0, 1.0}},
      Matrix{{0.0, 1.0}, {1.0, 0.0}},
      Matrix{{0.0, -1.0i}, {1.0i, 0.0}},
      Matrix{{1.0, 0.0}, {0.0, -1.0}},
  };
  if (index < 0 || index > 3) throw ParameterError("Pauli index must be 0..3");
  return kPauli[static_cast<std::size_t>(index)];
}

}  // namespace qcap
