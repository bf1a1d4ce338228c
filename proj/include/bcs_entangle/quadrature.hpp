// Copyright 2026 The bcs-entangle Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file quadrature.hpp
 * @brief Integration engine for the correlator integrals.
 *
 * Every integrand the correlators need has compact support: v^2 vanishes
 * identically above the pairing shell (xi > w, no gap) and u*v vanishes
 * outside it. The k-integrals written over [0, inf) therefore reduce to
 * finite ranges, and no infinite-domain quadrature is needed.
 *
 * Three shapes are supported:
 *  - integrate_adaptive: global adaptive Gauss-Kronrod (21 points, the
 *    worst panel is bisected first) with optional breakpoints.
 *  - integrate_oscillatory: envelope(kappa) * sin(kappa x) on [a, b], split
 *    at the zeros of the sine and summed in ascending magnitude.
 *  - integrate_shell: integrals over the Debye shell, done in the variable
 *    xi = kappa^2 - 1 with breakpoints that resolve the 1/sqrt(xi^2+delta^2)
 *    peak at the Fermi surface.
 */

#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <queue>
#include <span>
#include <string>
#include <vector>

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "bcs_entangle/errors.hpp"
#include "bcs_entangle/model.hpp"

namespace bcs {

struct QuadratureSettings {
  double rel_tol = 1e-9;
  double abs_tol = 1e-12;
  int max_subdivisions = 10'000;

  void validate() const {
    if (!(rel_tol > 0.0) || !(abs_tol > 0.0) || max_subdivisions < 1)
      throw ConfigError("quadrature settings need rel_tol > 0, abs_tol > 0, max_subdivisions >= 1");
  }
};

struct QuadratureResult {
  double value = 0.0;
  double error = 0.0;
};

namespace detail {

/// Neumaier-compensated running sum.
class CompensatedSum {
 public:
  void add(double v) noexcept {
    const double t = sum_ + v;
    if (std::abs(sum_) >= std::abs(v))
      comp_ += (sum_ - t) + v;
    else
      comp_ += (v - t) + sum_;
    sum_ = t;
  }
  double value() const noexcept { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

struct Segment {
  double a;
  double b;
  double value;
  double error;
  friend bool operator<(const Segment& l, const Segment& r) { return l.error < r.error; }
};

/// One 21-point Kronrod panel with the embedded 10-point Gauss rule.
/// The error estimate is |K21 - G10|, floored at a few ulps of the result.
template <class F>
Segment gauss_kronrod_panel(F& f, double a, double b) {
  using Kronrod = boost::math::quadrature::gauss_kronrod<double, 21>;
  using Gauss = boost::math::quadrature::gauss<double, 10>;
  const auto& nodes = Kronrod::abscissa();
  const auto& kw = Kronrod::weights();
  const auto& gw = Gauss::weights();

  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);

  double kronrod = f(center) * kw[0];
  double gauss = 0.0;
  for (std::size_t i = 1; i < nodes.size(); ++i) {
    const double dx = half * nodes[i];
    const double pair = f(center + dx) + f(center - dx);
    kronrod += pair * kw[i];
    if (i % 2 == 1) gauss += pair * gw[i / 2];
  }
  kronrod *= half;
  gauss *= half;
  const double error =
      std::max(std::abs(kronrod - gauss), 2.0 * std::numeric_limits<double>::epsilon() * std::abs(kronrod));
  return {a, b, kronrod, error};
}

inline bool converged(double value, double error, const QuadratureSettings& s) noexcept {
  return error <= std::max(s.abs_tol, s.rel_tol * std::abs(value));
}

/// Sorted, de-duplicated edges: a, b, and every breakpoint strictly inside.
inline std::vector<double> panel_edges(double a, double b, std::span<const double> breakpoints) {
  std::vector<double> edges{a, b};
  for (double p : breakpoints)
    if (p > a && p < b) edges.push_back(p);
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return edges;
}

}  // namespace detail

/// Integrates f over [a, b] to max(abs_tol, rel_tol * |value|).
///
/// The range is first split at the breakpoints; thereafter the panel with
/// the largest error estimate is bisected until the summed estimate meets
/// tolerance. Throws NonConvergence with the best estimate once
/// max_subdivisions bisections have been spent.
template <class F>
QuadratureResult integrate_adaptive(F&& f, double a, double b, const QuadratureSettings& settings,
                                    std::span<const double> breakpoints = {}) {
  settings.validate();
  if (!std::isfinite(a) || !std::isfinite(b) || a > b)
    throw DomainError("integrate_adaptive needs finite a <= b");
  if (a == b) return {};

  std::priority_queue<detail::Segment> heap;
  double total = 0.0;
  double total_error = 0.0;
  const auto edges = detail::panel_edges(a, b, breakpoints);
  for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
    const auto seg = detail::gauss_kronrod_panel(f, edges[i], edges[i + 1]);
    total += seg.value;
    total_error += seg.error;
    heap.push(seg);
  }

  int subdivisions = 0;
  while (!detail::converged(total, total_error, settings)) {
    if (!std::isfinite(total) || !std::isfinite(total_error))
      throw NonConvergence("integrand is not finite on [" + std::to_string(a) + ", " + std::to_string(b) + "]",
                           total, total_error);
    const detail::Segment worst = heap.top();
    const double mid = 0.5 * (worst.a + worst.b);
    if (subdivisions >= settings.max_subdivisions || !(mid > worst.a && mid < worst.b))
      throw NonConvergence("adaptive quadrature did not converge after " + std::to_string(subdivisions) +
                               " subdivisions",
                           total, total_error);
    heap.pop();
    const auto left = detail::gauss_kronrod_panel(f, worst.a, mid);
    const auto right = detail::gauss_kronrod_panel(f, mid, worst.b);
    total += left.value + right.value - worst.value;
    total_error += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);
    ++subdivisions;
  }

  // Re-sum from the final panels so the running update does not leak drift.
  detail::CompensatedSum value;
  detail::CompensatedSum error;
  while (!heap.empty()) {
    value.add(heap.top().value);
    error.add(heap.top().error);
    heap.pop();
  }
  return {value.value(), error.value()};
}

/// Integrates f panel by panel between consecutive edges and sums the panel
/// values in ascending magnitude.
template <class F>
QuadratureResult integrate_panels(F&& f, std::span<const double> edges, const QuadratureSettings& settings) {
  std::vector<double> values;
  values.reserve(edges.size());
  detail::CompensatedSum error;
  for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
    const auto panel = integrate_adaptive(f, edges[i], edges[i + 1], settings);
    values.push_back(panel.value);
    error.add(panel.error);
  }
  std::sort(values.begin(), values.end(), [](double l, double r) { return std::abs(l) < std::abs(r); });
  detail::CompensatedSum value;
  for (double v : values) value.add(v);
  return {value.value(), error.value()};
}

/// Returns the integral of envelope(kappa) * sin(kappa x) over [a, b].
///
/// The range is cut at every zero of sin(kappa x) (panels of width pi/x) and
/// at the given breakpoints. At x = 0 the integrand vanishes and the result
/// is exactly 0; callers needing the sin(kappa x)/x limit handle it.
template <class F>
QuadratureResult integrate_oscillatory(F&& envelope, double x, double a, double b, const QuadratureSettings& settings,
                                       std::span<const double> breakpoints = {}) {
  if (!(x >= 0.0) || !std::isfinite(x)) throw DomainError("integrate_oscillatory needs finite x >= 0");
  if (!std::isfinite(a) || !std::isfinite(b) || a > b)
    throw DomainError("integrate_oscillatory needs finite a <= b");
  if (x == 0.0 || a == b) return {};

  std::vector<double> cuts(breakpoints.begin(), breakpoints.end());
  const double period = std::numbers::pi / x;
  for (auto m = static_cast<long long>(std::floor(a / period)) + 1; m * period < b; ++m) cuts.push_back(m * period);
  const auto edges = detail::panel_edges(a, b, cuts);
  return integrate_panels([&](double k) { return envelope(k) * std::sin(k * x); }, edges, settings);
}

/// Breakpoints in xi used on the Debye shell: 0 and +-delta * 10^j inside (-w, w).
inline std::vector<double> shell_breakpoints(const MaterialParams& params) {
  std::vector<double> cuts{0.0};
  if (params.delta() > 0.0) {
    for (double s = params.delta(); s < params.w(); s *= 10.0) {
      cuts.push_back(s);
      cuts.push_back(-s);
    }
  }
  return cuts;
}

/// Integral over the shell kappa in [sqrt(1-w), sqrt(1+w)] of
/// peaked(xi(kappa)) * kappa * sin(kappa x) / x, or of
/// peaked(xi(kappa)) * kappa^2 when x = 0.
///
/// Evaluated in xi = kappa^2 - 1 (dkappa = dxi / (2 kappa)), where the
/// integrand becomes peaked(xi) sin(kappa x) / (2x), resp. peaked(xi) kappa / 2.
/// For x > 0 the xi range is also cut at the zeros of sin(kappa x).
template <class F>
double integrate_shell(F&& peaked, double x, const MaterialParams& params, const QuadratureSettings& settings) {
  if (!(x >= 0.0) || !std::isfinite(x)) throw DomainError("integrate_shell needs finite x >= 0");
  const double w = params.w();
  auto cuts = shell_breakpoints(params);

  if (x == 0.0) {
    const auto edges = detail::panel_edges(-w, w, cuts);
    return integrate_panels([&](double e) { return peaked(e) * std::sqrt(1.0 + e) / 2.0; }, edges, settings).value;
  }

  const double period = std::numbers::pi / x;
  const double lo = params.shell_lower();
  const double hi = params.shell_upper();
  for (auto m = static_cast<long long>(std::floor(lo / period)) + 1; m * period < hi; ++m) {
    const double k = m * period;
    cuts.push_back((k - 1.0) * (k + 1.0));
  }
  const auto edges = detail::panel_edges(-w, w, cuts);
  return integrate_panels([&](double e) { return peaked(e) * std::sin(std::sqrt(1.0 + e) * x) / (2.0 * x); }, edges,
                          settings)
      .value;
}

}  // namespace bcs
