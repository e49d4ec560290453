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

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qcap {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operand shapes or factor dimensions do not fit together.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A product space would exceed Tolerances::max_dimension.
class SizeError : public Error {
 public:
  using Error::Error;
};

/// A matrix lacks a structural property an operation requires (e.g. Hermiticity).
class ShapeError : public Error {
 public:
  using Error::Error;
};

class ConvergenceError : public Error {
 public:
  using Error::Error;
};

/// Input is not a density operator within tolerance.
class StateError : public Error {
 public:
  using Error::Error;
};

/// A channel or isometry fails its CPTP / isometry certificate.
class ValidationError : public Error {
 public:
  ValidationError(const std::string& what, double offending)
      : Error(what), offending_(offending) {}
  double offending() const { return offending_; }

 private:
  double offending_;
};

/// A scalar parameter is outside its admissible range.
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// The hypothesis of a theorem certificate does not hold.
class HypothesisError : public Error {
 public:
  using Error::Error;
};

/// The requested search strategy cannot handle the input dimension.
class StrategyError : public Error {
 public:
  using Error::Error;
};

/// Every numerical threshold used across the project. Functions take a
/// Tolerances argument defaulted to default_tolerances().
struct Tolerances {
  // linalg
  double hermitian = 1e-10;       // max |h - h^dagger| entry
  double eig_offdiag = 1e-14;     // Jacobi stop: off-diagonal norm / ||h||
  int eig_max_sweeps = 100;
  double eig_residual = 1e-9;     // max |h v - lambda v| / ||h||
  std::size_t max_dimension = 1024;

  // channel
  double kraus_completeness = 1e-10;
  double isometry = 1e-10;
  double psd = 1e-9;              // min eigenvalue >= -psd
  double trace = 1e-9;            // |tr - 1| <= trace

  // families
  double probability_sum = 1e-12;

  // identities checked by tests / verify
  double entry = 1e-12;           // entrywise matrix identities
  double spectrum = 1e-10;        // closed-form spectra
  double entropy = 1e-10;         // closed-form entropies
  double equivalence = 1e-9;      // equality up to isometry
  double bound = 1e-12;           // slack allowed in analytic inequalities
};

const Tolerances& default_tolerances();

}  // namespace qcap
