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

#include <algorithm>
#include <cmath>
#include <string>

#include "json.hpp"

namespace qcap {

namespace {

std::string fmt_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

}  // namespace

DensityOperator::DensityOperator(Matrix m, const Tolerances& tol) : m_(std::move(m)) {
  if (!m_.is_square() || m_.empty()) throw StateError("density operator must be square");
  if (!is_hermitian(m_, tol.hermitian)) throw StateError("density operator is not Hermitian");
  const double tr_err = std::abs(m_.trace() - Complex(1.0));
  if (tr_err > tol.trace) throw StateError("density operator trace deviates from 1 by " + fmt_double(tr_err));
  const double min_eig = hermitian_eig(m_, tol).min();
  if (min_eig < -tol.psd) {
    throw StateError("density operator has negative eigenvalue " + fmt_double(min_eig));
  }
}

DensityOperator DensityOperator::maximally_mixed(std::size_t dim) {
  return DensityOperator(Matrix::identity(dim) * Complex(1.0 / static_cast<double>(dim)));
}

DensityOperator DensityOperator::diagonal_qubit(double delta) {
  return DensityOperator(Matrix::diagonal({1.0 - delta, delta}));
}

DensityOperator DensityOperator::from_bloch(double x, double y, double z) {
  Matrix m = pauli(0) + x * pauli(1) + y * pauli(2) + z * pauli(3);
  return DensityOperator(m * Complex(0.5));
}

DensityOperator tensor_product(const DensityOperator& a, const DensityOperator& b,
                               const Tolerances& tol) {
  return DensityOperator(tensor_product(a.matrix(), b.matrix(), tol), tol);
}

void KrausChannel::check_shapes(const std::vector<Matrix>& kraus, std::size_t d_in,
                                std::size_t d_out) {
  if (kraus.empty()) throw DimensionError("Kraus list must be nonempty");
  if (d_in == 0 || d_out == 0) throw DimensionError("channel dimensions must be positive");
  for (const Matrix& k : kraus) {
    if (k.rows() != d_out || k.cols() != d_in) {
      throw DimensionError("Kraus operator is " + std::to_string(k.rows()) + "x" +
                           std::to_string(k.cols()) + ", expected " + std::to_string(d_out) +
                           "x" + std::to_string(d_in));
    }
  }
}

KrausChannel::KrausChannel(std::vector<Matrix> kraus, std::size_t d_in, std::size_t d_out,
                           const Tolerances& tol)
    : kraus_(std::move(kraus)), d_in_(d_in), d_out_(d_out) {
  check_shapes(kraus_, d_in_, d_out_);
  const double dev = completeness_deviation();
  if (dev > tol.kraus_completeness) {
    throw ValidationError("Kraus completeness violated: max |sum A^dagger A - 1| = " +
                              fmt_double(dev),
                          dev);
  }
}

KrausChannel KrausChannel::unchecked(std::vector<Matrix> kraus, std::size_t d_in,
                                     std::size_t d_out) {
  check_shapes(kraus, d_in, d_out);
  KrausChannel ch;
  ch.kraus_ = std::move(kraus);
  ch.d_in_ = d_in;
  ch.d_out_ = d_out;
  return ch;
}

double KrausChannel::completeness_deviation() const {
  Matrix sum(d_in_, d_in_);
  for (const Matrix& k : kraus_) sum += k.adjoint() * k;
  return max_abs_diff(sum, Matrix::identity(d_in_));
}

Isometry::Isometry(Matrix a, std::vector<std::size_t> out_dims, const Tolerances& tol)
    : a_(std::move(a)), out_dims_(std::move(out_dims)) {
  std::size_t prod = 1;
  for (std::size_t d : out_dims_) prod *= d;
  if (out_dims_.empty() || prod != a_.rows()) {
    throw DimensionError("isometry output factors multiply to " + std::to_string(prod) +
                         ", matrix has " + std::to_string(a_.rows()) + " rows");
  }
  const double dev = isometry_deviation();
  if (dev > tol.isometry) {
    throw ValidationError("A^dagger A deviates from identity by " + fmt_double(dev), dev);
  }
}

double Isometry::isometry_deviation() const {
  return max_abs_diff(a_.adjoint() * a_, Matrix::identity(a_.cols()));
}

Matrix apply(const KrausChannel& ch, const Matrix& x) {
  if (x.rows() != ch.d_in() || x.cols() != ch.d_in()) {
    throw DimensionError("channel input is " + std::to_string(ch.d_in()) + "-dimensional, got " +
                         std::to_string(x.rows()) + "x" + std::to_string(x.cols()));
  }
  Matrix out(ch.d_out(), ch.d_out());
  for (const Matrix& k : ch.kraus()) out += k * x * k.adjoint();
  return out;
}

Matrix apply(const KrausChannel& ch, const DensityOperator& rho) {
  return apply(ch, rho.matrix());
}

Isometry isometric_extension(const KrausChannel& ch, const Tolerances& tol) {
  const std::size_t n = ch.size();
  Matrix a(ch.d_out() * n, ch.d_in());
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t b = 0; b < ch.d_out(); ++b) {
      for (std::size_t i = 0; i < ch.d_in(); ++i) a(b * n + k, i) = ch[k](b, i);
    }
  }
  return Isometry(std::move(a), {ch.d_out(), n}, tol);
}

KrausChannel complementary(const KrausChannel& ch, const Tolerances& tol) {
  const std::size_t n = ch.size();
  std::vector<Matrix> ops;
  ops.reserve(ch.d_out());
  for (std::size_t j = 0; j < ch.d_out(); ++j) {
    Matrix b(n, ch.d_in());
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t i = 0; i < ch.d_in(); ++i) b(k, i) = ch[k](j, i);
    }
    ops.push_back(std::move(b));
  }
  return KrausChannel(std::move(ops), ch.d_in(), n, tol);
}

ChoiMatrix choi_unvalidated(const KrausChannel& ch) {
  const std::size_t din = ch.d_in(), dout = ch.d_out();
  ChoiMatrix c{Matrix(din * dout, din * dout), din, dout};
  for (std::size_t i = 0; i < din; ++i) {
    for (std::size_t j = 0; j < din; ++j) {
      Matrix eij(din, din);
      eij(i, j) = 1.0;
      const Matrix out = apply(ch, eij);
      for (std::size_t r = 0; r < dout; ++r) {
        for (std::size_t s = 0; s < dout; ++s) c.m(i * dout + r, j * dout + s) = out(r, s);
      }
    }
  }
  return c;
}

ChoiMatrix choi(const KrausChannel& ch, const Tolerances& tol) {
  ChoiMatrix c = choi_unvalidated(ch);
  const double min_eig = hermitian_eig(c.m, tol).min();
  if (min_eig < -tol.psd) {
    throw ValidationError("Choi matrix not positive: minimum eigenvalue " + fmt_double(min_eig),
                          min_eig);
  }
  const Matrix reduced = partial_trace(c.m, {c.d_in, c.d_out}, {0});
  const double tp = max_abs_diff(reduced, Matrix::identity(c.d_in));
  if (tp > tol.psd) {
    throw ValidationError("Choi matrix not trace preserving: max |Tr_out J - 1| = " +
                              fmt_double(tp),
                          tp);
  }
  return c;
}

KrausChannel tensor(const KrausChannel& a, const KrausChannel& b, const Tolerances& tol) {
  std::vector<Matrix> ops;
  ops.reserve(a.size() * b.size());
  for (const Matrix& ka : a.kraus()) {
    for (const Matrix& kb : b.kraus()) ops.push_back(tensor_product(ka, kb, tol));
  }
  return KrausChannel(std::move(ops), a.d_in() * b.d_in(), a.d_out() * b.d_out(), tol);
}

Matrix apply_isometry(const Isometry& iso, const DensityOperator& rho,
                      std::span<const std::size_t> keep) {
  if (rho.dim() != iso.d_in()) throw DimensionError("state does not match isometry input");
  const Matrix full = iso.matrix() * rho.matrix() * iso.matrix().adjoint();
  return partial_trace(full, iso.out_dims(), keep);
}

Matrix apply_isometry(const Isometry& iso, const DensityOperator& rho,
                      std::initializer_list<std::size_t> keep) {
  return apply_isometry(iso, rho, std::span<const std::size_t>(keep.begin(), keep.size()));
}

KrausChannel restrict_to(const Isometry& iso, std::span<const std::size_t> keep,
                         const Tolerances& tol) {
  const auto& dims = iso.out_dims();
  const std::vector<std::size_t> rest = complement_factors(dims.size(), keep);
  for (std::size_t k : keep) {
    if (k >= dims.size()) throw DimensionError("keep index out of range");
  }
  std::size_t kept_dim = 1, env_dim = 1;
  for (std::size_t k : keep) kept_dim *= dims[k];
  for (std::size_t r : rest) env_dim *= dims[r];

  std::vector<Matrix> ops(env_dim, Matrix(kept_dim, iso.d_in()));
  std::vector<std::size_t> digits(dims.size(), 0);
  for (std::size_t row = 0; row < iso.matrix().rows(); ++row) {
    std::size_t k_idx = 0, e_idx = 0;
    for (std::size_t k : keep) k_idx = k_idx * dims[k] + digits[k];
    for (std::size_t r : rest) e_idx = e_idx * dims[r] + digits[r];
    for (std::size_t i = 0; i < iso.d_in(); ++i) ops[e_idx](k_idx, i) = iso.matrix()(row, i);
    for (std::size_t f = dims.size(); f-- > 0;) {
      if (++digits[f] < dims[f]) break;
      digits[f] = 0;
    }
  }
  return KrausChannel(std::move(ops), iso.d_in(), kept_dim, tol);
}

std::vector<std::size_t> complement_factors(std::size_t factor_count,
                                            std::span<const std::size_t> keep) {
  std::vector<std::size_t> rest;
  for (std::size_t f = 0; f < factor_count; ++f) {
    if (std::find(keep.begin(), keep.end(), f) == keep.end()) rest.push_back(f);
  }
  return rest;
}

std::string to_json(const KrausChannel& ch) {
  nlohmann::json j;
  j["d_in"] = ch.d_in();
  j["d_out"] = ch.d_out();
  j["kraus"] = nlohmann::json::array();
  for (const Matrix& k : ch.kraus()) {
    nlohmann::json op = nlohmann::json::array();
    for (const Complex& z : k.entries()) op.push_back({z.real(), z.imag()});
    j["kraus"].push_back(std::move(op));
  }
  return j.dump();
}

KrausChannel channel_from_json(const std::string& text, const Tolerances& tol) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw DimensionError(std::string("channel JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("d_in") || !j.contains("d_out") || !j.contains("kraus") ||
      !j["kraus"].is_array()) {
    throw DimensionError("channel JSON needs d_in, d_out and a kraus array");
  }
  const auto d_in = j["d_in"].get<std::size_t>();
  const auto d_out = j["d_out"].get<std::size_t>();
  std::vector<Matrix> ops;
  for (const auto& op : j["kraus"]) {
    if (!op.is_array() || op.size() != d_in * d_out) {
      throw DimensionError("each Kraus operator must list d_out * d_in entries");
    }
    std::vector<Complex> entries;
    entries.reserve(op.size());
    for (const auto& z : op) {
      if (!z.is_array() || z.size() != 2 || !z[0].is_number() || !z[1].is_number()) {
        throw DimensionError("Kraus entries must be [re, im] pairs");
      }
      entries.emplace_back(z[0].get<double>(), z[1].get<double>());
    }
    ops.emplace_back(d_out, d_in, std::move(entries));
  }
  return KrausChannel(std::move(ops), d_in, d_out, tol);
}

}  // namespace qcap
