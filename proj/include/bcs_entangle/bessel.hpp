// Copyright 2026 The bcs-entangle Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <numbers>
#include <string>

#include "bcs_entangle/errors.hpp"

namespace bcs {

namespace detail {

// K0 from its power series:
//   K0(y) = -(ln(y/2) + gamma) I0(y) + sum_{k>=1} (y^2/4)^k / (k!)^2 H_k.
// Cancellation between the two parts stays below one decade for y <= 2.
inline double bessel_k0_series(double y) noexcept {
  const double q = 0.25 * y * y;
  double term = 1.0;  // (y^2/4)^k / (k!)^2
  double harmonic = 0.0;
  double i0 = 1.0;
  double tail = 0.0;
  for (int k = 1; k < 60; ++k) {
    term *= q / (static_cast<double>(k) * k);
    harmonic += 1.0 / k;
    i0 += term;
    tail += term * harmonic;
    if (term * harmonic < 1e-17 * tail) break;
  }
  return -(std::log(0.5 * y) + std::numbers::egamma) * i0 + tail;
}

// Steed's algorithm on Temme's continued fraction for K_nu, nu = 0.
// Converges quickly for y >= 2.
inline double bessel_k0_continued_fraction(double y) {
  const double a1 = 0.25;
  double b = 2.0 * (1.0 + y);
  double d = 1.0 / b;
  double delh = d;
  double q1 = 0.0;
  double q2 = 1.0;
  double q = a1;
  double c = a1;
  double a = -a1;
  double s = 1.0 + q * delh;
  for (int i = 2; i < 100'000; ++i) {
    a -= 2.0 * (i - 1);
    c = -a * c / i;
    const double qnew = (q1 - b * q2) / a;
    q1 = q2;
    q2 = qnew;
    q += c * qnew;
    b += 2.0;
    d = 1.0 / (b + a * d);
    delh = (b * d - 1.0) * delh;
    const double dels = q * delh;
    s += dels;
    if (std::abs(dels / s) < 1e-17) return std::sqrt(std::numbers::pi / (2.0 * y)) * std::exp(-y) / s;
  }
  throw NonConvergence("K0 continued fraction did not converge at y = " + std::to_string(y), 0.0, INFINITY);
}

}  // namespace detail

/// Modified Bessel function of the second kind, order 0.
///
/// Equals the integral of cos(y t) / sqrt(1 + t^2) over t in [0, inf).
/// Diverges logarithmically as y -> 0, so y must be positive.
inline double bessel_k0(double y) {
  if (!(y > 0.0)) throw DomainError("K0 requires y > 0, got " + std::to_string(y));
  if (std::isinf(y)) return 0.0;
  return y <= 2.0 ? detail::bessel_k0_series(y) : detail::bessel_k0_continued_fraction(y);
}

/// Leading large-argument form sqrt(pi / 2y) e^{-y}.
inline double bessel_k0_asymptotic(double y) {
  if (!(y > 0.0)) throw DomainError("K0 asymptotic form requires y > 0, got " + std::to_string(y));
  return std::sqrt(std::numbers::pi / (2.0 * y)) * std::exp(-y);
}

}  // namespace bcs
