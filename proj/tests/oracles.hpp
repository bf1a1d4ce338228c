// Copyright 2026 The bcs-entangle Authors
// SPDX-License-Identifier: Apache-2.0

// Independent reference computations used only by the tests. Nothing here
// calls into the library's quadrature or correlator code paths.

#pragma once

#include <cmath>
#include <functional>
#include <numbers>

#include <boost/math/quadrature/ooura_fourier_integrals.hpp>

namespace bcs::oracle {

/// Normalized free-gas correlator, the Fourier transform of the unit ball:
/// 3 (sin x - x cos x) / x^3, with its series near the origin.
inline double free_gas_g(double x) {
  if (std::abs(x) < 1e-3) {
    const double x2 = x * x;
    return 1.0 - x2 / 10.0 + x2 * x2 / 280.0;
  }
  return 3.0 * (std::sin(x) - x * std::cos(x)) / (x * x * x);
}

/// First x where 2 g^2 = 1 for the free gas, by bisection on the closed form.
inline double free_gas_entanglement_length() {
  const auto h = [](double x) { return 2.0 * free_gas_g(x) * free_gas_g(x) - 1.0; };
  double lo = 0.0;
  double hi = 0.01;
  while (h(hi) > 0.0) {
    lo = hi;
    hi += 0.01;
  }
  while (hi - lo > 1e-13) {
    const double mid = 0.5 * (lo + hi);
    (h(mid) > 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

/// Composite two-point Gauss-Legendre rule on a uniform grid of `panels`
/// panels, accumulated in long double.
inline double brute_force_integral(const std::function<double(double)>& f, double a, double b,
                                   long panels = 1'000'000) {
  const long double h = (static_cast<long double>(b) - a) / panels;
  const long double offset = h / (2.0L * std::sqrt(3.0L));
  long double sum = 0.0L;
  for (long i = 0; i < panels; ++i) {
    const long double mid = a + (i + 0.5L) * h;
    sum += f(static_cast<double>(mid - offset)) + f(static_cast<double>(mid + offset));
  }
  return static_cast<double>(sum * h / 2.0L);
}

/// K0 from its defining cosine integral over [0, inf), using Ooura's
/// double-exponential Fourier quadrature.
inline double k0_integral_definition(double y) {
  static thread_local boost::math::quadrature::ooura_fourier_cos<double> integrator(1e-13);
  return integrator.integrate([](double t) { return 1.0 / std::sqrt(1.0 + t * t); }, y).first;
}

}  // namespace bcs::oracle
