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

// Extended-precision coherent information. Every entropy is computed from a
// real symmetric embedding [[X, -Y], [Y, X]] of the Hermitian matrix X + iY,
// whose spectrum is that of X + iY with each eigenvalue doubled.

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <cmath>
#include <vector>

#include "qcap/coherent.hpp"

namespace qcap {

namespace {

using Real = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<320>,
                                           boost::multiprecision::et_off>;

struct Cx {
  Real re = 0;
  Real im = 0;
};

Cx mul(const Cx& a, const Cx& b) { return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re}; }
Cx mul_conj(const Cx& a, const Cx& b) {  // a * conj(b)
  return {a.re * b.re + a.im * b.im, a.im * b.re - a.re * b.im};
}
void add_to(Cx& acc, const Cx& v) {
  acc.re += v.re;
  acc.im += v.im;
}

class CxMatrix {
 public:
  CxMatrix(std::size_t r, std::size_t c) : rows_(r), cols_(c), e_(r * c) {}
  explicit CxMatrix(const Matrix& m) : CxMatrix(m.rows(), m.cols()) {
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) {
        e_[i * cols_ + j] = {Real(m(i, j).real()), Real(m(i, j).imag())};
      }
    }
  }
  Cx& operator()(std::size_t r, std::size_t c) { return e_[r * cols_ + c]; }
  const Cx& operator()(std::size_t r, std::size_t c) const { return e_[r * cols_ + c]; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

 private:
  std::size_t rows_, cols_;
  std::vector<Cx> e_;
};

CxMatrix product(const CxMatrix& a, const CxMatrix& b) {
  CxMatrix m(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      for (std::size_t j = 0; j < b.cols(); ++j) add_to(m(i, j), mul(a(i, k), b(k, j)));
    }
  }
  return m;
}

// Eigenvalues of a real symmetric matrix (row-major, n x n), cyclic Jacobi.
std::vector<Real> symmetric_eigenvalues(std::vector<Real> a, std::size_t n) {
  auto at = [&](std::size_t i, std::size_t j) -> Real& { return a[i * n + j]; };
  Real scale = 0;
  for (const Real& x : a) scale += x * x;
  const Real stop = scale * Real("1e-600");
  for (int sweep = 0; sweep < 100; ++sweep) {
    Real off = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (i != j) off += at(i, j) * at(i, j);
      }
    }
    if (off <= stop) break;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const Real apq = at(p, q);
        if (apq == 0) continue;
        const Real theta = (at(q, q) - at(p, p)) / (2 * apq);
        Real t = 1 / (abs(theta) + sqrt(theta * theta + 1));
        if (theta < 0) t = -t;
        const Real c = 1 / sqrt(t * t + 1);
        const Real s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const Real akp = at(k, p), akq = at(k, q);
          at(k, p) = c * akp - s * akq;
          at(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const Real apk = at(p, k), aqk = at(q, k);
          at(p, k) = c * apk - s * aqk;
          at(q, k) = s * apk + c * aqk;
        }
        at(p, q) = 0;
        at(q, p) = 0;
      }
    }
  }
  std::vector<Real> ev(n);
  for (std::size_t i = 0; i < n; ++i) ev[i] = at(i, i);
  return ev;
}

Real entropy_bits(const CxMatrix& h) {
  const std::size_t n = h.rows();
  const std::size_t m = 2 * n;
  std::vector<Real> s(m * m);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      // Hermitian part only.
      const Real x = (h(i, j).re + h(j, i).re) / 2;
      const Real y = (h(i, j).im - h(j, i).im) / 2;
      s[i * m + j] = x;
      s[(i + n) * m + (j + n)] = x;
      s[i * m + (j + n)] = -y;
      s[(i + n) * m + j] = y;
    }
  }
  Real sum = 0;
  for (const Real& l : symmetric_eigenvalues(std::move(s), m)) {
    if (l < Real(-1e-9)) throw StateError("negative eigenvalue in extended-precision entropy");
    if (l > 0) sum -= l * log(l);
  }
  return sum / (2 * log(Real(2)));
}

}  // namespace

double coherent_information_extended(const KrausChannel& ch, const DensityOperator& rho) {
  if (rho.dim() != ch.d_in()) throw DimensionError("state does not match channel input");
  const CxMatrix r(rho.matrix());
  const std::size_t n = ch.size();
  std::vector<CxMatrix> kraus;
  std::vector<CxMatrix> kr;  // K_k rho
  kraus.reserve(n);
  kr.reserve(n);
  for (const Matrix& k : ch.kraus()) {
    kraus.emplace_back(k);
    kr.push_back(product(kraus.back(), r));
  }
  const std::size_t dout = ch.d_out(), din = ch.d_in();

  CxMatrix bob(dout, dout);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < dout; ++i) {
      for (std::size_t j = 0; j < dout; ++j) {
        for (std::size_t a = 0; a < din; ++a) add_to(bob(i, j), mul_conj(kr[k](i, a), kraus[k](j, a)));
      }
    }
  }
  CxMatrix eve(n, n);  // Tr(K_k rho K_l^dagger)
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t l = 0; l < n; ++l) {
      for (std::size_t j = 0; j < dout; ++j) {
        for (std::size_t a = 0; a < din; ++a) add_to(eve(k, l), mul_conj(kr[k](j, a), kraus[l](j, a)));
      }
    }
  }
  const Real ic = entropy_bits(bob) - entropy_bits(eve);
  return ic.convert_to<double>();
}

}  // namespace qcap
