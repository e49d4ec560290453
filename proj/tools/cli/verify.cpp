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

#include "verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>

#include "qcap/channel.hpp"
#include "qcap/coherent.hpp"
#include "qcap/families.hpp"
#include "qcap/linalg.hpp"
#include "qcap/random.hpp"
#include "sweep.hpp"

namespace qcap::cli {
namespace {

constexpr std::uint64_t kSeed = 0x5eed2017;

// Running worst case for one suite.
class Tracker {
 public:
  void observe(double deviation) {
    if (std::isnan(deviation)) deviation = std::numeric_limits<double>::infinity();
    worst = std::max(worst, deviation);
  }
  void fail(const std::string& why) {
    if (detail.empty()) detail = why;
  }

  double worst = -std::numeric_limits<double>::infinity();
  std::string detail;
};

struct Suite {
  const char* name;
  double (*tolerance)(const Tolerances&);
  void (*run)(const VerifyOptions&, Tracker&);
  bool strict = false;  // pass iff worst < tolerance
};

std::vector<double> grid(double lo, double hi, int n) {
  std::vector<double> out(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = lo + (hi - lo) * i / (n - 1);
  return out;
}

// eta in {0.05, ..., 1.0} x delta in {0.01, ..., 0.49}.
std::vector<double> eta_grid() { return grid(0.05, 1.0, 20); }
std::vector<double> delta_grid() { return grid(0.01, 0.49, 20); }

std::vector<KrausChannel> sample_channels(RandomSource& gen) {
  std::vector<KrausChannel> out;
  for (double eta : {0.0, 0.13, 0.5, 0.77, 1.0}) {
    const NoiseParam p(eta);
    out.push_back(depolarizing(p));
    out.push_back(epolarizing(p));
    out.push_back(erasure(p));
    out.push_back(amplitude_damping(p));
    out.push_back(dephasing(eta));
  }
  out.push_back(mixed_pauli(PauliProbs(0.7, 0.15, 0.1, 0.05)));
  out.push_back(mixed_pauli_complement(PauliProbs(0.4, 0.3, 0.2, 0.1)));
  const std::vector<std::size_t> keep_a = {kA};
  out.push_back(restrict_to(joint_isometry(NoiseParam(0.3)), keep_a));
  out.push_back(gen.channel(2, 2, 3));
  out.push_back(gen.channel(2, 3, 2));
  out.push_back(gen.channel(3, 2, 4));
  out.push_back(gen.channel(4, 4, 2));
  return out;
}

std::vector<PauliProbs> sample_probs(RandomSource& gen) {
  std::vector<PauliProbs> out = {
      PauliProbs(0.7, 0.15, 0.1, 0.05), PauliProbs(0.4, 0.3, 0.2, 0.1),
      PauliProbs(0.5, 0.25, 0.25, 0.0), PauliProbs(0.85, 0.05, 0.05, 0.05),
      PauliProbs(0.25, 0.25, 0.25, 0.25)};
  for (int i = 0; i < 10; ++i) {
    std::array<double, 4> w{};
    double total = 0.0;
    for (auto& x : w) total += (x = gen.uniform(0.01, 1.0));
    for (auto& x : w) x /= total;
    w[3] = 1.0 - w[0] - w[1] - w[2];
    out.push_back(PauliProbs(w).sorted_descending());
  }
  return out;
}

double max_spectrum_diff(const HermitianSpectrum& a, const HermitianSpectrum& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < std::max(a.size(), b.size()); ++i) {
    const double x = i < a.size() ? a[i] : 0.0;
    const double y = i < b.size() ? b[i] : 0.0;
    worst = std::max(worst, std::abs(x - y));
  }
  return worst;
}

// --- linalg ---------------------------------------------------------------

void kron_mixed_product(const VerifyOptions&, Tracker& t) {
  RandomSource gen(kSeed + 1);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 1 + trial % 4, m = 1 + (trial / 4) % 4;
    const Matrix a = gen.matrix(n, n), c = gen.matrix(n, n);
    const Matrix b = gen.matrix(m, m), d = gen.matrix(m, m);
    const Matrix lhs = tensor_product(a, b) * tensor_product(c, d);
    const Matrix rhs = tensor_product(a * c, b * d);
    t.observe(max_abs_diff(lhs, rhs) / std::max(1.0, rhs.max_abs()));
  }
}

void partial_trace_rules(const VerifyOptions&, Tracker& t) {
  RandomSource gen(kSeed + 2);
  for (int trial = 0; trial < 20; ++trial) {
    const Matrix x = gen.matrix(2, 2), y = gen.matrix(3, 3);
    const Matrix xy = tensor_product(x, y);
    t.observe(max_abs_diff(partial_trace(xy, {2, 3}, {0}), x * y.trace()));
    t.observe(max_abs_diff(partial_trace(xy, {2, 3}, {1}), y * x.trace()));

    const Matrix m = gen.matrix(12, 12), n = gen.matrix(12, 12);
    const Complex a(gen.normal(), gen.normal()), b(gen.normal(), gen.normal());
    const Matrix lhs = partial_trace(m * a + n * b, {2, 3, 2}, {0, 2});
    const Matrix rhs = partial_trace(m, {2, 3, 2}, {0, 2}) * a + partial_trace(n, {2, 3, 2}, {0, 2}) * b;
    t.observe(max_abs_diff(lhs, rhs) / std::max(1.0, rhs.max_abs()));
    t.observe(std::abs(partial_trace(m, {2, 3, 2}, {1}).trace() - m.trace()) /
              std::max(1.0, std::abs(m.trace())));
  }
}

void eig_trace(const VerifyOptions& o, Tracker& t) {
  RandomSource gen(kSeed + 3);
  for (std::size_t n : {2, 3, 4, 8, 16, 32}) {
    for (int trial = 0; trial < 5; ++trial) {
      const Matrix h = gen.hermitian(n);
      t.observe(std::abs(hermitian_eig(h, o.tol).sum() - h.trace().real()));
    }
  }
}

void eig_unitary_invariance(const VerifyOptions& o, Tracker& t) {
  RandomSource gen(kSeed + 4);
  for (std::size_t n : {2, 3, 4, 8, 16, 32}) {
    for (int trial = 0; trial < 5; ++trial) {
      const Matrix h = gen.hermitian(n);
      const Matrix u = gen.unitary(n);
      Matrix conj = u * h * u.adjoint();
      conj = (conj + conj.adjoint()) * Complex(0.5);
      const HermitianEigensystem es = hermitian_eigensystem(h, o.tol);
      const double scale = std::max(1.0, h.norm());
      t.observe(max_spectrum_diff(es.spectrum, hermitian_eig(conj, o.tol)) / scale);
      t.observe(eigen_residual(h, es));
    }
  }
}

// --- channel --------------------------------------------------------------

void family_cptp(const VerifyOptions& o, Tracker& t) {
  RandomSource gen(kSeed + 5);
  for (double eta : grid(0.0, 1.0, 50)) {
    const NoiseParam p(eta);
    for (const KrausChannel& ch :
         {depolarizing(p), epolarizing(p), erasure(p), amplitude_damping(p), dephasing(eta)}) {
      t.observe(ch.completeness_deviation());
    }
  }
  for (const KrausChannel& ch : sample_channels(gen)) t.observe(ch.completeness_deviation());

  if (o.kraus_perturbation != 0.0) {
    std::vector<Matrix> ops = depolarizing(NoiseParam(0.3)).kraus();
    const double w = std::sqrt(1.0 - 0.75 * 0.3);
    ops[0] = pauli(0) * Complex(w + o.kraus_perturbation);
    const KrausChannel bad = KrausChannel::unchecked(std::move(ops), 2, 2);
    const double dev = bad.completeness_deviation();
    t.observe(dev);
    if (dev > o.tol.kraus_completeness) t.fail("CPTP completeness violated by perturbed depolarizing channel");
  }
  if (t.worst > o.tol.kraus_completeness) t.fail("CPTP completeness");
}

void choi_cptp(const VerifyOptions& o, Tracker& t) {
  RandomSource gen(kSeed + 6);
  for (const KrausChannel& ch : sample_channels(gen)) {
    const ChoiMatrix c = choi_unvalidated(ch);
    t.observe(std::max(0.0, -hermitian_eig(c.m, o.tol).min()));
    const Matrix reduced = partial_trace(c.m, {c.d_in, c.d_out}, {0});
    t.observe(max_abs_diff(reduced, Matrix::identity(c.d_in)));
  }
}

void complement_consistency(const VerifyOptions& o, Tracker& t) {
  RandomSource gen(kSeed + 7);
  for (const KrausChannel& ch : sample_channels(gen)) {
    const Isometry v = isometric_extension(ch, o.tol);
    const KrausChannel comp = complementary(ch, o.tol);
    const KrausChannel bicomp = complementary(comp, o.tol);
    for (std::size_t k = 0; k < ch.size(); ++k) t.observe(max_abs_diff(bicomp[k], ch[k]));
    for (int trial = 0; trial < 10; ++trial) {
      const DensityOperator rho = gen.density(ch.d_in());
      const std::vector<std::size_t> out = {0}, env = {1};
      t.observe(max_abs_diff(apply_isometry(v, rho, out), apply(ch, rho)));
      t.observe(max_abs_diff(apply_isometry(v, rho, env), apply(comp, rho)));
    }
  }
}

// Coherent information does not depend on which Kraus representation the
// complement is built from.
void complement_choice(const VerifyOptions& o, Tracker& t) {
  RandomSource gen(kSeed + 8);
  for (const KrausChannel& ch : sample_channels(gen)) {
    const Matrix w = gen.unitary(ch.size());
    std::vector<Matrix> mixed(ch.size(), Matrix(ch.d_out(), ch.d_in()));
    for (std::size_t j = 0; j < ch.size(); ++j) {
      for (std::size_t k = 0; k < ch.size(); ++k) mixed[j] += ch[k] * w(j, k);
    }
    const KrausChannel other(std::move(mixed), ch.d_in(), ch.d_out(), o.tol);
    for (int trial = 0; trial < 5; ++trial) {
      const DensityOperator rho = gen.density(ch.d_in());
      t.observe(max_abs_diff(apply(ch, rho), apply(other, rho)));
      t.observe(std::abs(coherent_information(ch, rho, o.tol) -
                         coherent_information(other, rho, o.tol)));
    }
  }
}

// --- families -------------------------------------------------------------

void direct_forms(const VerifyOptions&, Tracker& t) {
  RandomSource gen(kSeed + 9);
  for (int trial = 0; trial < 50; ++trial) {
    const NoiseParam eta(gen.uniform());
    const DensityOperator rho = gen.density(2);
    t.observe(max_abs_diff(apply(epolarizing(eta), rho), epolarizing_direct(eta, rho.matrix())));
  }
  for (const PauliProbs& p : sample_probs(gen)) {
    const DensityOperator rho = gen.density(2);
    t.observe(max_abs_diff(apply(mixed_pauli_complement(p), rho),
                           mixed_pauli_complement_direct(p, rho.matrix())));
  }
}

void joint_isometry_output(const VerifyOptions&, Tracker& t) {
  RandomSource gen(kSeed + 10);
  const std::vector<std::size_t> keep = {kA};
  for (double eta : grid(0.0, 1.0, 11)) {
    const Isometry iso = joint_isometry(NoiseParam(eta));
    const KrausChannel dep = depolarizing(NoiseParam(eta));
    for (int trial = 0; trial < 5; ++trial) {
      const DensityOperator rho = gen.density(2);
      t.observe(max_abs_diff(apply_isometry(iso, rho, keep), apply(dep, rho)));
    }
  }
}

void joint_isometry_equivalence(const VerifyOptions& o, Tracker& t) {
  RandomSource gen(kSeed + 11);
  const std::vector<std::size_t> keep_a = {kA};
  const std::vector<std::size_t> rest = complement_factors(5, keep_a);
  const std::vector<std::size_t> keep_s1a = {kS1, kA};
  for (double eta : grid(0.05, 0.95, 10)) {
    const NoiseParam p(eta);
    const Isometry iso = joint_isometry(p);
    const KrausChannel psi = epolarizing(p);
    const KrausChannel xi = erasure(p);
    for (int trial = 0; trial < 5; ++trial) {
      const DensityOperator rho = gen.density(2);
      t.observe(max_spectrum_diff(hermitian_eig(apply_isometry(iso, rho, rest), o.tol),
                                  hermitian_eig(apply(psi, rho), o.tol)));
      t.observe(std::abs(coherent_information(iso, rho, keep_s1a, o.tol) -
                         coherent_information(xi, rho, o.tol)));
    }
  }
}

// --- coherent -------------------------------------------------------------

void antisymmetry(const VerifyOptions& o, Tracker& t) {
  RandomSource gen(kSeed + 12);
  for (const KrausChannel& ch : sample_channels(gen)) {
    const KrausChannel comp = complementary(ch, o.tol);
    for (int trial = 0; trial < 5; ++trial) {
      const DensityOperator rho = gen.density(ch.d_in());
      t.observe(std::abs(coherent_information(ch, rho, o.tol) +
                         coherent_information(comp, rho, o.tol)));
    }
  }
}

void xi_mixture(const VerifyOptions&, Tracker& t) {
  const Matrix u = xi_mixing_unitary();
  for (double eta : eta_grid()) {
    const KrausChannel psi = epolarizing(NoiseParam(eta));
    for (double delta : delta_grid()) {
      const Matrix xi = xi_state(eta, delta);
      const Matrix mixture = xi * Complex(1.0 - delta) + u * xi * u.adjoint() * Complex(delta);
      t.observe(max_abs_diff(apply(psi, DensityOperator::diagonal_qubit(delta)), mixture));
    }
  }
}

void concavity(const VerifyOptions& o, Tracker& t) {
  for (double eta : eta_grid()) {
    const KrausChannel psi = epolarizing(NoiseParam(eta));
    for (double delta : delta_grid()) {
      const double h_out = von_neumann_entropy(apply(psi, DensityOperator::diagonal_qubit(delta)), o.tol);
      t.observe(von_neumann_entropy(xi_state(eta, delta), o.tol) - h_out);
    }
  }
}

void closed_form_spectra(const VerifyOptions& o, Tracker& t) {
  for (double eta : eta_grid()) {
    for (double delta : delta_grid()) {
      const HermitianSpectrum s = hermitian_eig(xi_state(eta, delta), o.tol);
      std::vector<double> expect = {1 - eta / 2, 0.0, eta * (1 - delta) / 2, eta * delta / 2};
      std::sort(expect.rbegin(), expect.rend());
      t.observe(max_spectrum_diff(s, HermitianSpectrum{expect}));
    }
  }
  RandomSource gen(kSeed + 13);
  for (const PauliProbs& p : sample_probs(gen)) {
    if (p.nonzero_count() < 3) continue;
    for (double delta : delta_grid()) {
      const Theorem2Certificate c = theorem2_certificate(p, delta, o.tol);
      for (std::size_t i = 0; i < 4; ++i) {
        t.observe(std::abs(c.spectrum[i] - c.spectrum_closed_form[i]));
      }
    }
  }
}

void entropy_closed_form(const VerifyOptions& o, Tracker& t) {
  for (double eta : eta_grid()) {
    const KrausChannel dep = depolarizing(NoiseParam(eta));
    for (double delta : delta_grid()) {
      const double h_xi = 0.5 * eta * binary_entropy(delta) + binary_entropy(eta / 2);
      t.observe(std::abs(von_neumann_entropy(xi_state(eta, delta), o.tol) - h_xi));
      const DensityOperator rho = DensityOperator::diagonal_qubit(delta);
      t.observe(std::abs(von_neumann_entropy(apply(dep, rho), o.tol) -
                         binary_entropy((1 - eta) * delta + eta / 2)));
    }
  }
}

void mean_value(const VerifyOptions&, Tracker& t) {
  for (double eta : eta_grid()) {
    for (double delta : delta_grid()) {
      const double lhs = binary_entropy((1 - eta) * delta + eta / 2);
      const double rhs = binary_entropy(eta / 2) + (1 - eta) * delta * std::log2(2 / eta);
      t.observe(lhs - rhs);
    }
  }
}

void lower_bound_dominance(const VerifyOptions& o, Tracker& t) {
  for (double eta : eta_grid()) {
    for (double delta : delta_grid()) {
      const Theorem1Certificate c = theorem1_certificate(eta, delta, o.tol);
      t.observe(c.lower_bound - c.ic_numeric);
    }
  }
}

// Deviation is -I_C, so the suite passes iff every value is strictly positive.
void theorem1_positivity(const VerifyOptions&, Tracker& t) {
  for (int k = 1; k <= 50; ++k) {
    const double eta = 0.02 * k;
    const double delta = std::min(delta_threshold(eta), 0.4);
    const double ic = coherent_information_extended(epolarizing(NoiseParam(eta)),
                                                    DensityOperator::diagonal_qubit(delta));
    t.observe(-ic);
    if (!(ic > 0.0)) {
      char buf[96];
      std::snprintf(buf, sizeof buf, "non-positive coherent information at eta = %.2f", eta);
      t.fail(buf);
    }
  }
  const double margin = log2_bound_margin(0.005, log2_delta_threshold(0.005));
  t.observe(-margin);
  if (!(margin > 0.0)) t.fail("log-domain bound check fails at eta = 0.005");
}

void optimizer_sanity(const VerifyOptions& o, Tracker& t) {
  for (int k = 1; k <= 50; ++k) {
    const double eta = 0.02 * k;
    const KrausChannel psi = epolarizing(NoiseParam(eta));
    const CoherentInfoResult best = maximize_coherent_information(psi);
    const DensityOperator arg(best.argmax_state);
    t.observe(std::abs(coherent_information(psi, arg, o.tol) - best.value));
    const double delta = std::clamp(hermitian_eig(best.argmax_state, o.tol).min(), 0.0, 0.5);
    t.observe(theorem1_lower_bound(eta, delta) - best.value);
  }
}

// Largest amount by which a certificate check exceeds its own tolerance.
void certificates(const VerifyOptions& o, Tracker& t) {
  auto scan = [&](const std::vector<CertificateCheck>& checks) {
    for (const auto& c : checks) {
      t.observe(c.deviation - c.tolerance);
      if (!c.passed) t.fail("certificate check " + c.name + " failed");
    }
  };
  for (double eta : eta_grid()) {
    for (double delta : delta_grid()) scan(theorem1_certificate(eta, delta, o.tol).checks);
  }
  RandomSource gen(kSeed + 14);
  for (const PauliProbs& p : sample_probs(gen)) {
    if (p.nonzero_count() < 3) continue;
    for (double delta : {0.01, 0.1, 0.3}) scan(theorem2_certificate(p, delta, o.tol).checks);
  }
  // The depolarizing probabilities reduce the second certificate to the first.
  for (double eta : eta_grid()) {
    const double eps = 0.75 * eta;
    const PauliProbs p(1 - eps, eps / 3, eps / 3, eps / 3);
    for (double delta : {0.01, 0.2}) {
      const Theorem1Certificate c1 = theorem1_certificate(eta, delta, o.tol);
      const Theorem2Certificate c2 = theorem2_certificate(p, delta, o.tol);
      t.observe(std::abs(c1.lower_bound - c2.lower_bound) - o.tol.equivalence);
      t.observe(std::abs(c1.ic_numeric - c2.ic_numeric) - o.tol.equivalence);
    }
  }
}

void csv_determinism(const VerifyOptions&, Tracker& t) {
  SweepSpec a;
  a.family = "epolarizing";
  a.param_min = 0.1;
  a.param_max = 1.0;
  a.steps = 10;
  a.delta_policy = DeltaPolicy::kThreshold;
  SweepSpec b = a;
  b.threads = 1;
  const bool same = sweep_csv(a) == sweep_csv(b) && sweep_csv(a) == sweep_csv(a);
  t.observe(same ? 0.0 : 1.0);
  if (!same) t.fail("sweep output differs between runs");
}

double tol_equivalence(const Tolerances& t) { return t.equivalence; }
double tol_spectrum(const Tolerances& t) { return t.spectrum; }
double tol_residual(const Tolerances& t) { return t.eig_residual; }
double tol_completeness(const Tolerances& t) { return t.kraus_completeness; }
double tol_psd(const Tolerances& t) { return t.psd; }
double tol_entry(const Tolerances& t) { return t.entry; }
double tol_entropy(const Tolerances& t) { return t.entropy; }
double tol_bound(const Tolerances& t) { return t.bound; }
double zero(const Tolerances&) { return 0.0; }

const std::vector<Suite>& suites() {
  static const std::vector<Suite> kSuites = {
      {"linalg.kron-mixed-product", tol_equivalence, kron_mixed_product},
      {"linalg.partial-trace", tol_equivalence, partial_trace_rules},
      {"linalg.eig-trace", tol_spectrum, eig_trace},
      {"linalg.eig-unitary-invariance", tol_residual, eig_unitary_invariance},
      {"channel.cptp-completeness", tol_completeness, family_cptp},
      {"channel.choi-cptp", tol_psd, choi_cptp},
      {"channel.complement-consistency", tol_entry, complement_consistency},
      {"channel.complement-choice", tol_equivalence, complement_choice},
      {"families.direct-forms", tol_entry, direct_forms},
      {"families.joint-isometry-output", tol_entry, joint_isometry_output},
      {"families.joint-isometry-equivalence", tol_equivalence, joint_isometry_equivalence},
      {"coherent.antisymmetry", tol_entropy, antisymmetry},
      {"coherent.xi-mixture", tol_entry, xi_mixture},
      {"coherent.concavity", tol_bound, concavity},
      {"coherent.closed-form-spectra", tol_spectrum, closed_form_spectra},
      {"coherent.entropy-closed-form", tol_entropy, entropy_closed_form},
      {"coherent.mean-value", tol_bound, mean_value},
      {"coherent.lower-bound-dominance", tol_bound, lower_bound_dominance},
      {"coherent.theorem1-positivity", zero, theorem1_positivity, true},
      {"coherent.optimizer-sanity", tol_bound, optimizer_sanity},
      {"coherent.certificates", zero, certificates},
      {"cli.csv-determinism", zero, csv_determinism},
  };
  return kSuites;
}

}  // namespace

void set_tolerance(Tolerances& tol, const std::string& name, double value) {
  if (!(value >= 0.0)) throw UsageError("tolerance '" + name + "' must be non-negative");
  if (name == "hermitian") tol.hermitian = value;
  else if (name == "eig_offdiag") tol.eig_offdiag = value;
  else if (name == "eig_max_sweeps") tol.eig_max_sweeps = static_cast<int>(value);
  else if (name == "eig_residual") tol.eig_residual = value;
  else if (name == "max_dimension") tol.max_dimension = static_cast<std::size_t>(value);
  else if (name == "kraus_completeness") tol.kraus_completeness = value;
  else if (name == "isometry") tol.isometry = value;
  else if (name == "psd") tol.psd = value;
  else if (name == "trace") tol.trace = value;
  else if (name == "probability_sum") tol.probability_sum = value;
  else if (name == "entry") tol.entry = value;
  else if (name == "spectrum") tol.spectrum = value;
  else if (name == "entropy") tol.entropy = value;
  else if (name == "equivalence") tol.equivalence = value;
  else if (name == "bound") tol.bound = value;
  else throw UsageError("unknown tolerance '" + name + "'");
}

std::vector<std::string> suite_names() {
  std::vector<std::string> out;
  for (const auto& s : suites()) out.emplace_back(s.name);
  return out;
}

std::vector<SuiteResult> run_suites(const VerifyOptions& options) {
  std::vector<SuiteResult> out;
  for (const Suite& s : suites()) {
    SuiteResult r;
    r.name = s.name;
    r.tolerance = s.tolerance(options.tol);
    Tracker t;
    const auto start = std::chrono::steady_clock::now();
    try {
      s.run(options, t);
    } catch (const ValidationError& e) {
      t.observe(e.offending());
      t.fail(e.what());
    } catch (const std::exception& e) {
      t.fail(e.what());
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    r.worst_deviation = t.worst;
    r.passed = t.detail.empty() && (s.strict ? t.worst < r.tolerance : t.worst <= r.tolerance);
    r.detail = t.detail;
    if (!r.passed && r.detail.empty()) r.detail = "worst deviation exceeds tolerance";
    out.push_back(std::move(r));
  }
  return out;
}

int report(const std::vector<SuiteResult>& results, std::ostream& out) {
  std::size_t failed = 0;
  for (const auto& r : results) {
    char line[256];
    std::snprintf(line, sizeof line, "%s  %-38s worst=%-12.4g tol=%-10.3g %6.2fs", r.passed ? "PASS" : "FAIL",
                  r.name.c_str(), r.worst_deviation, r.tolerance, r.seconds);
    out << line;
    if (!r.passed) {
      out << "  " << r.detail;
      ++failed;
    }
    out << '\n';
  }
  out << (failed == 0 ? "all " + std::to_string(results.size()) + " suites passed"
                      : std::to_string(failed) + " of " + std::to_string(results.size()) +
                            " suites failed")
      << '\n';
  return failed == 0 ? 0 : 1;
}

}  // namespace qcap::cli
