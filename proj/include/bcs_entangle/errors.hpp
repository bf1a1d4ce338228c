// Copyright 2026 The bcs-entangle Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace bcs {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the domain of the function (e.g. K0 at y <= 0).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Adaptive refinement hit its subdivision cap before meeting tolerance.
/// Carries the best estimate so callers can decide whether it is usable.
class NonConvergence : public Error {
 public:
  NonConvergence(const std::string& what, double estimate, double error_estimate)
      : Error(what), estimate_(estimate), error_estimate_(error_estimate) {}

  double estimate() const noexcept { return estimate_; }
  double error_estimate() const noexcept { return error_estimate_; }

 private:
  double estimate_;
  double error_estimate_;
};

/// A normalization denominator vanished (e.g. F(0) = 0 in the normal state).
class DivisionDegenerate : public Error {
 public:
  using Error::Error;
};

/// A dense eigen/singular-value solve failed to converge.
class NumericalDegeneracy : public Error {
 public:
  using Error::Error;
};

/// No entanglement threshold crossing exists on the search grid.
class NoRootFound : public Error {
 public:
  using Error::Error;
};

/// Invalid run configuration (grid, flags, config file).
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace bcs
