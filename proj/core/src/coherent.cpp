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

#include "qcap/coherent.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <random>
#include <string>

namespace qcap {

double binary_entropy(double x) {
  if (!(x >= 0.0 && x <= 1.0)) {
    throw ParameterError("binary entropy argument must lie in [0, 1], got " + std::to_string(x));
  }
  double h = 0.0;
  if (x > 0.0) h -= x * std::log2(x);
  if (x < 1.0) h -= (1.0 - x) * std::log2(1.0 - x);
  return h;
}

double spectrum_entropy(std::span<const double> eigenvalues, const Tolerances& tol) {
  double h = 0.0;
  for (double l : eigenvalues) {
    if (l < -tol.psd) {
      throw StateError("entropy of an operator with eigenvalue " + std::to_string(l));
    }
    if (l > 0.0) h -= l * std::log2(l);
  }
  return h;
}

double von_neumann_entropy(const Matrix& rho, const Tolerances& tol) {
  const HermitianSpectrum s = hermitian_eig(rho, tol);
  return spectrum_entropy(s.eigenvalues, tol);
}

double von_neumann_entropy(const DensityOperator& rho, const Tolerances& tol) {
  return von_neumann_entropy(rho.matrix(), tol);
}

double coherent_information(const KrausChannel& ch, const DensityOperator& rho,
                            const Tolerances& tol) {
  const KrausChannel env = complementary(ch, tol);
  return von_neumann_entropy(apply(ch, rho), tol) - von_neumann_entropy(apply(env, rho), tol);
}

double coherent_information(const Isometry& iso, const DensityOperator& rho,
                            std::span<const std::size_t> keep, const Tolerances& tol) {
  const std::vector<std::size_t> rest = complement_factors(iso.out_dims().size(), keep);
  if (rest.empty()) {
    return von_neumann_entropy(apply_isometry(iso, rho, keep), tol);
  }
  return von_neumann_entropy(apply_isometry(iso, rho, keep), tol) -
         von_neumann_entropy(apply_isometry(iso, rho, rest), tol);
}

// ---------------------------------------------------------------------------
// Search

namespace {

constexpr double kInvPhi = 0.6180339887498948482;

// Maximizes f on [lo, hi]; returns the best abscissa seen.
std::pair<double, double> golden_maximize(const std::function<double(double)>& f, double lo,
                                          double hi, int iterations, std::size_t& evaluations) {
  double a = lo, b = hi;
  double c = b - kInvPhi * (b - a);
  double d = a + kInvPhi * (b - a);
  double fc = f(c), fd = f(d);
  evaluations += 2;
  for (int i = 0; i < iterations; ++i) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kInvPhi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kInvPhi * (b - a);
      fd = f(d);
    }
    ++evaluations;
  }
  return fc >= fd ? std::pair{c, fc} : std::pair{d, fd};
}

DensityOperator bloch_state(std::array<double, 3> r) {
  const double n = std::sqrt(r[0] * r[0] + r[1] * r[1] + r[2] * r[2]);
  if (n > 1.0) {
    for (double& x : r) x /= n;
  }
  return DensityOperator::from_bloch(r[0], r[1], r[2]);
}

CoherentInfoResult bloch_grid_search(const InputObjective& objective, const SearchConfig& cfg) {
  if (cfg.grid_points < 2) throw StrategyError("bloch-grid needs at least 2 points per axis");
  CoherentInfoResult res;
  res.strategy = "bloch-grid";
  std::array<double, 3> best{0.0, 0.0, 0.0};
  double best_value = -std::numeric_limits<double>::infinity();
  const int n = cfg.grid_points;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        std::array<double, 3> r = {-1.0 + 2.0 * i / (n - 1), -1.0 + 2.0 * j / (n - 1),
                                   -1.0 + 2.0 * k / (n - 1)};
        const double v = objective(bloch_state(r));
        ++res.evaluations;
        if (v > best_value) {
          best_value = v;
          best = r;
        }
      }
    }
  }
  {
    const double nr = std::sqrt(best[0] * best[0] + best[1] * best[1] + best[2] * best[2]);
    if (nr > 1.0) {
      for (double& x : best) x /= nr;
    }
  }

  for (int round = 0; round < cfg.refinement_rounds; ++round) {
    for (int axis = 0; axis < 3; ++axis) {
      double others = 0.0;
      for (int a = 0; a < 3; ++a) {
        if (a != axis) others += best[a] * best[a];
      }
      const double limit = std::sqrt(std::max(0.0, 1.0 - others));
      if (limit == 0.0) continue;
      auto line = [&](double x) {
        std::array<double, 3> r = best;
        r[axis] = x;
        return objective(bloch_state(r));
      };
      const auto [x, v] = golden_maximize(line, -limit, limit, cfg.golden_iterations,
                                          res.evaluations);
      if (v > best_value) {
        best_value = v;
        best[axis] = x;
      }
    }
  }
  res.value = best_value;
  res.argmax_state = bloch_state(best).matrix();
  return res;
}

// rho = T T^dagger / Tr(T T^dagger), T lower triangular: params are the
// real diagonal followed by (re, im) of each strictly lower entry.
Matrix cholesky_state(std::span<const double> params, std::size_t dim) {
  Matrix t(dim, dim);
  std::size_t p = 0;
  for (std::size_t i = 0; i < dim; ++i) t(i, i) = params[p++];
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      t(i, j) = Complex(params[p], params[p + 1]);
      p += 2;
    }
  }
  Matrix rho = t * t.adjoint();
  const double tr = rho.trace().real();
  if (tr <= 0.0) return Matrix::identity(dim) * Complex(1.0 / static_cast<double>(dim));
  rho *= Complex(1.0 / tr);
  // Symmetrize away rounding.
  return (rho + rho.adjoint()) * Complex(0.5);
}

CoherentInfoResult cholesky_search(const InputObjective& objective, std::size_t dim,
                                   const SearchConfig& cfg) {
  CoherentInfoResult res;
  res.strategy = "cholesky-coordinate";
  const std::size_t np = dim * dim;
  std::mt19937_64 rng(cfg.seed);
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  double best_value = -std::numeric_limits<double>::infinity();
  std::vector<double> best_params;

  auto eval = [&](const std::vector<double>& params) {
    ++res.evaluations;
    return objective(DensityOperator(cholesky_state(params, dim)));
  };

  for (int restart = 0; restart < std::max(1, cfg.restarts); ++restart) {
    std::vector<double> params(np, 0.0);
    if (restart == 0) {
      for (std::size_t i = 0; i < dim; ++i) params[i] = 1.0;  // maximally mixed
    } else {
      for (double& x : params) x = uni(rng);
    }
    double value = eval(params);
    for (int round = 0; round < cfg.refinement_rounds; ++round) {
      for (std::size_t c = 0; c < np; ++c) {
        auto line = [&](double x) {
          std::vector<double> trial = params;
          trial[c] = x;
          return objective(DensityOperator(cholesky_state(trial, dim)));
        };
        const auto [x, v] =
            golden_maximize(line, -1.0, 1.0, cfg.golden_iterations, res.evaluations);
        if (v > value) {
          value = v;
          params[c] = x;
        }
      }
    }
    if (value > best_value) {
      best_value = value;
      best_params = params;
    }
  }
  res.value = best_value;
  res.argmax_state = cholesky_state(best_params, dim);
  return res;
}

}  // namespace

CoherentInfoResult maximize_over_inputs(const InputObjective& objective, std::size_t dim,
                                        const SearchConfig& config) {
  SearchStrategy strategy = config.strategy;
  if (strategy == SearchStrategy::kAuto) {
    strategy = dim == 2 ? SearchStrategy::kBlochGrid : SearchStrategy::kCholeskyCoordinate;
  }
  if (dim == 0 || dim > 4) {
    throw StrategyError("input dimension " + std::to_string(dim) +
                        " is too large for the exhaustive strategies (max 4)");
  }
  if (strategy == SearchStrategy::kBlochGrid) {
    if (dim != 2) throw StrategyError("bloch-grid search needs a qubit input");
    return bloch_grid_search(objective, config);
  }
  return cholesky_search(objective, dim, config);
}

CoherentInfoResult maximize_coherent_information(const KrausChannel& ch,
                                                 const SearchConfig& config) {
  const KrausChannel env = complementary(ch);
  auto objective = [&](const DensityOperator& rho) {
    return von_neumann_entropy(apply(ch, rho)) - von_neumann_entropy(apply(env, rho));
  };
  return maximize_over_inputs(objective, ch.d_in(), config);
}

DiagonalOptimum maximize_over_diagonal_inputs(const KrausChannel& ch, int iterations) {
  if (ch.d_in() != 2) throw StrategyError("diagonal-family search needs a qubit input");
  auto f = [&](double delta) {
    return coherent_information(ch, DensityOperator::diagonal_qubit(delta));
  };
  constexpr int kScan = 100;
  DiagonalOptimum best{0.0, f(0.0)};
  int best_i = 0;
  for (int i = 1; i <= kScan; ++i) {
    const double d = static_cast<double>(i) / kScan;
    const double v = f(d);
    if (v > best.value) {
      best = {d, v};
      best_i = i;
    }
  }
  const double lo = std::max(0, best_i - 1) / static_cast<double>(kScan);
  const double hi = std::min(kScan, best_i + 1) / static_cast<double>(kScan);
  std::size_t evals = 0;
  const auto [d, v] = golden_maximize(f, lo, hi, iterations, evals);
  if (v > best.value) best = {d, v};
  return best;
}

// ---------------------------------------------------------------------------
// Closed forms

double log2_delta_threshold(double eta) {
  if (!(eta > 0.0 && eta <= 1.0)) {
    throw ParameterError("threshold needs 0 < eta <= 1, got " + std::to_string(eta));
  }
  return -(2.0 * (1.0 - eta) / eta) * std::log2(2.0 / eta);
}

double delta_threshold(double eta) { return std::exp2(log2_delta_threshold(eta)); }

double theorem1_lower_bound(double eta, double delta) {
  return 0.5 * eta * binary_entropy(delta) - (1.0 - eta) * delta * std::log2(2.0 / eta);
}

double log2_bound_margin(double eta, double log2_delta) {
  if (!(eta > 0.0 && eta <= 1.0)) throw ParameterError("log2_bound_margin needs 0 < eta <= 1");
  if (!(log2_delta <= -1.0)) throw ParameterError("log2_bound_margin needs delta <= 1/2");
  if (eta == 1.0) return std::numeric_limits<double>::infinity();
  // H2(delta) / delta = -log2(delta) + g(delta), g -> 1/ln 2 as delta -> 0.
  const double delta = std::exp2(log2_delta);
  double g = 1.0 / std::numbers::ln2;
  if (delta >= std::numeric_limits<double>::min()) {
    g = -(1.0 - delta) * std::log1p(-delta) / (delta * std::numbers::ln2);
  }
  const double lhs = std::log2(0.5 * eta) + std::log2(-log2_delta + g);
  const double rhs = std::log2(1.0 - eta) + std::log2(std::log2(2.0 / eta));
  return lhs - rhs;
}

Matrix xi_state(double eta, double delta) {
  using namespace std::complex_literals;
  const double e = 0.75 * eta;
  const double c = std::sqrt(e * (1.0 - e) / 3.0);
  const double d = e / 3.0;
  const double r = 1.0 - 2.0 * delta;
  return Matrix{
      {1.0 - e, 0.0, 0.0, c},
      {0.0, d, -1.0i * d * r, 0.0},
      {0.0, 1.0i * d * r, d, 0.0},
      {c, 0.0, 0.0, d},
  };
}

Matrix xi_mixing_unitary() { return Matrix::diagonal({1.0, 1.0, 1.0, -1.0}); }

Matrix xi_prime_state(const PauliProbs& p, double delta) {
  using namespace std::complex_literals;
  const double r = 1.0 - 2.0 * delta;
  const double c03 = std::sqrt(p[0] * p[3]);
  const double c12 = std::sqrt(p[1] * p[2]);
  return Matrix{
      {p[0], 0.0, 0.0, c03},
      {0.0, p[1], -1.0i * c12 * r, 0.0},
      {0.0, 1.0i * c12 * r, p[2], 0.0},
      {c03, 0.0, 0.0, p[3]},
  };
}

namespace {

std::array<double, 4> descending4(std::array<double, 4> v) {
  std::sort(v.begin(), v.end(), std::greater<>());
  return v;
}

std::array<double, 4> to_array4(const HermitianSpectrum& s) {
  return {s[0], s[1], s[2], s[3]};
}

double max_abs_diff4(const std::array<double, 4>& a, const std::array<double, 4>& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < 4; ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

CertificateCheck make_check(std::string name, double deviation, double tolerance) {
  return {std::move(name), deviation, tolerance, deviation <= tolerance};
}

bool all_pass(const std::vector<CertificateCheck>& checks) {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CertificateCheck& c) { return c.passed; });
}

}  // namespace

bool Theorem1Certificate::holds() const { return all_pass(checks); }
bool Theorem2Certificate::holds() const { return all_pass(checks); }

Theorem1Certificate theorem1_certificate(double eta, double delta, const Tolerances& tol) {
  if (!(eta > 0.0 && eta <= 1.0)) {
    throw ParameterError("theorem1 needs 0 < eta <= 1, got " + std::to_string(eta));
  }
  if (!(delta > 0.0 && delta < 0.5)) {
    throw ParameterError("theorem1 needs 0 < delta < 1/2, got " + std::to_string(delta));
  }
  Theorem1Certificate c;
  c.eta = eta;
  c.delta = delta;

  const Matrix xi = xi_state(eta, delta);
  c.xi_spectrum = to_array4(hermitian_eig(xi, tol));
  c.xi_spectrum_closed_form =
      descending4({1.0 - eta / 2.0, 0.0, eta * (1.0 - delta) / 2.0, eta * delta / 2.0});
  c.h_xi = 0.5 * eta * binary_entropy(delta) + binary_entropy(eta / 2.0);
  c.h_xi_numeric = spectrum_entropy(c.xi_spectrum, tol);

  const NoiseParam np(eta);
  const DensityOperator rho = DensityOperator::diagonal_qubit(delta);
  const Matrix bob = apply(depolarizing(np), rho);
  const KrausChannel psi = epolarizing(np);
  const Matrix eve = apply(psi, rho);
  c.h_out = binary_entropy((1.0 - eta) * delta + eta / 2.0);
  c.lower_bound = theorem1_lower_bound(eta, delta);
  c.ic_numeric = coherent_information(psi, rho, tol);

  const Matrix u = xi_mixing_unitary();
  const Matrix mixture = Complex(1.0 - delta) * xi + Complex(delta) * (u * xi * u.adjoint());

  c.checks.push_back(
      make_check("xi_spectrum", max_abs_diff4(c.xi_spectrum, c.xi_spectrum_closed_form),
                 tol.entry));
  c.checks.push_back(make_check("h_xi", std::abs(c.h_xi - c.h_xi_numeric), tol.entropy));
  c.checks.push_back(
      make_check("h_out", std::abs(c.h_out - von_neumann_entropy(bob, tol)), tol.entropy));
  c.checks.push_back(make_check("xi_mixture_identity", max_abs_diff(eve, mixture), tol.entry));
  c.checks.push_back(make_check(
      "concavity", std::max(0.0, c.h_xi_numeric - von_neumann_entropy(eve, tol)), tol.bound));
  c.checks.push_back(
      make_check("lower_bound_dominance", std::max(0.0, c.lower_bound - c.ic_numeric), tol.bound));
  return c;
}

Theorem2Certificate theorem2_certificate(const PauliProbs& p, double delta,
                                         const Tolerances& tol) {
  if (p.nonzero_count() < 3) {
    throw HypothesisError("theorem2 needs at least three nonzero probabilities, got " +
                          std::to_string(p.nonzero_count()));
  }
  if (!(delta > 0.0 && delta < 0.5)) {
    throw ParameterError("theorem2 needs 0 < delta < 1/2, got " + std::to_string(delta));
  }
  Theorem2Certificate c;
  c.probs = p.sorted_descending();
  c.delta = delta;
  const double p1 = c.probs[1];
  const double p2 = c.probs[2];
  c.alpha = p2 / p1;
  c.eta_prime = 2.0 * (1.0 + c.alpha) * p1;
  c.theta = std::acos(std::sqrt(1.0 / (1.0 + c.alpha)));
  const double sin2 = std::pow(std::sin(2.0 * c.theta), 2);
  const double prod = delta * (1.0 - delta) * sin2;
  // Smaller root of x^2 - x + prod = 0, written to avoid cancellation.
  c.delta_prime = 2.0 * prod / (1.0 + std::sqrt(1.0 - 4.0 * prod));

  const double ep = c.eta_prime;
  const Matrix xi = xi_prime_state(c.probs, delta);
  c.spectrum = to_array4(hermitian_eig(xi, tol));
  c.spectrum_closed_form = descending4(
      {1.0 - ep / 2.0, 0.0, ep * (1.0 - c.delta_prime) / 2.0, ep * c.delta_prime / 2.0});
  c.h_xi_prime = 0.5 * ep * binary_entropy(c.delta_prime) + binary_entropy(ep / 2.0);
  c.lower_bound = 0.5 * ep * binary_entropy(c.delta_prime) -
                  (1.0 - ep) * delta * std::log2(2.0 / ep);
  c.bound_applies = ep <= 1.0;

  const DensityOperator rho = DensityOperator::diagonal_qubit(delta);
  const KrausChannel comp = mixed_pauli_complement(c.probs);
  const Matrix eve = apply(comp, rho);
  c.ic_numeric = coherent_information(comp, rho, tol);
  const Matrix u = xi_mixing_unitary();
  const Matrix mixture = Complex(1.0 - delta) * xi + Complex(delta) * (u * xi * u.adjoint());
  const double h_numeric = spectrum_entropy(c.spectrum, tol);

  c.checks.push_back(make_check(
      "delta_prime_equation",
      std::abs(prod - c.delta_prime * (1.0 - c.delta_prime)), tol.entry));
  c.checks.push_back(make_check(
      "theta_parametrization",
      std::abs(std::pow(std::cos(c.theta), 2) - 1.0 / (1.0 + c.alpha)), tol.entry));
  c.checks.push_back(
      make_check("xi_prime_spectrum", max_abs_diff4(c.spectrum, c.spectrum_closed_form),
                 tol.spectrum));
  c.checks.push_back(make_check("h_xi_prime", std::abs(c.h_xi_prime - h_numeric), tol.entropy));
  c.checks.push_back(make_check("xi_prime_mixture_identity", max_abs_diff(eve, mixture),
                                tol.entry));
  c.checks.push_back(make_check(
      "concavity", std::max(0.0, h_numeric - von_neumann_entropy(eve, tol)), tol.bound));
  if (c.bound_applies) {
    c.checks.push_back(make_check("lower_bound_dominance",
                                  std::max(0.0, c.lower_bound - c.ic_numeric), tol.bound));
  }
  return c;
}

double capacity_formula(const std::string& family, double param) {
  if (!(param >= 0.0 && param <= 1.0)) throw ParameterError("parameter must lie in [0, 1]");
  if (family == "erasure") return std::max(0.0, 1.0 - 2.0 * param);
  if (family == "dephasing") return 1.0 - binary_entropy(param);
  throw ParameterError("no capacity formula for family '" + family + "'");
}

}  // namespace qcap
