// Copyright 2026 The bcs-entangle Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file correlators.hpp
 * @brief Equal-time normal (G) and anomalous (F) correlators of the BCS
 *        ground state and their normalized forms.
 *
 * With x = k_F r the three-dimensional Fourier transforms reduce to
 *
 *   I_G(x) = (1/x) * int_0^{sqrt(1+w)}  v^2(kappa) kappa sin(kappa x) dkappa
 *   I_F(x) = (1/x) * int_shell          u v(kappa) kappa sin(kappa x) dkappa
 *
 * with x -> 0 limits int v^2 kappa^2 and int uv kappa^2. These are iG and iF
 * up to a common positive constant (k_F^3 / 2 pi^2), which is dropped: every
 * physical output here is a ratio. F is real in the gauge with a real,
 * positive gap.
 */

#pragma once

#include <array>
#include <cmath>
#include <numbers>
#include <vector>

#include "bcs_entangle/bessel.hpp"
#include "bcs_entangle/errors.hpp"
#include "bcs_entangle/model.hpp"
#include "bcs_entangle/quadrature.hpp"

namespace bcs {

/// Normalized correlators at one separation x = k_F r.
struct CorrelatorSample {
  double x = 0.0;
  double g = 0.0;        ///< G(r) / G(0)
  double f = 0.0;        ///< F(r) / G(0)
  double f_tilde = 0.0;  ///< F(r) / F(0)
};

namespace detail {

/// Breakpoints in kappa for v^2: shell edges plus the xi cuts mapped back.
inline std::vector<double> normal_breakpoints(const MaterialParams& params) {
  std::vector<double> cuts{params.shell_lower(), params.shell_upper()};
  for (double s : shell_breakpoints(params)) cuts.push_back(std::sqrt(1.0 + s));
  return cuts;
}

}  // namespace detail

/// Dimensionless normal correlator I_G(x), continuous at x = 0.
inline double big_g_dimensionless(double x, const MaterialParams& params, const QuadratureSettings& settings = {}) {
  if (!(x >= 0.0) || !std::isfinite(x)) throw DomainError("separation x must be finite and >= 0");
  const auto cuts = detail::normal_breakpoints(params);
  const double top = params.shell_upper();
  if (x == 0.0) {
    const auto weight = [&](double k) { return k * k * v2(Kappa(k), params); };
    return integrate_adaptive(weight, 0.0, top, settings, cuts).value;
  }
  const auto envelope = [&](double k) { return k * v2(Kappa(k), params); };
  return integrate_oscillatory(envelope, x, 0.0, top, settings, cuts).value / x;
}

/// Dimensionless anomalous correlator I_F(x); identically 0 when delta = 0.
inline double big_f_dimensionless(double x, const MaterialParams& params, const QuadratureSettings& settings = {}) {
  if (!(x >= 0.0) || !std::isfinite(x)) throw DomainError("separation x must be finite and >= 0");
  if (params.delta() == 0.0) return 0.0;
  return integrate_shell([&](double e) { return coherence_at_xi(e, params).uv; }, x, params, settings);
}

/// g(x) = G(r) / G(0).
inline double g_norm(double x, const MaterialParams& params, const QuadratureSettings& settings = {}) {
  return big_g_dimensionless(x, params, settings) / big_g_dimensionless(0.0, params, settings);
}

/// f(x) = F(r) / G(0).
inline double f_norm(double x, const MaterialParams& params, const QuadratureSettings& settings = {}) {
  return big_f_dimensionless(x, params, settings) / big_g_dimensionless(0.0, params, settings);
}

/// F~(x) = F(r) / F(0). Undefined in the normal state.
inline double f_tilde(double x, const MaterialParams& params, const QuadratureSettings& settings = {}) {
  const double f0 = big_f_dimensionless(0.0, params, settings);
  if (f0 == 0.0) throw DivisionDegenerate("F(0) = 0: F~ is undefined for delta = 0");
  return big_f_dimensionless(x, params, settings) / f0;
}

/// Closed-form approximation sin(x)/x * K0(x / (pi k_F xi_0)), normalized by
/// ln(2w / delta), the weak-coupling value of F(0) in the same units.
/// Only meaningful away from the origin, where K0 diverges.
inline double approx_f(double x, const MaterialParams& params) {
  if (!(x > 0.0)) throw DomainError("approx_f requires x > 0");
  if (params.delta() == 0.0) throw DomainError("approx_f is undefined for delta = 0");
  const double k0 = bessel_k0(x / (std::numbers::pi * params.kf_xi0()));
  return std::sin(x) / x * k0 / std::log(2.0 * params.w() / params.delta());
}

/// Evaluates normalized correlators with the x = 0 integrals computed once.
class Correlators {
 public:
  explicit Correlators(const MaterialParams& params, const QuadratureSettings& settings = {})
      : params_(params),
        settings_(settings),
        g0_(big_g_dimensionless(0.0, params, settings)),
        f0_(big_f_dimensionless(0.0, params, settings)) {}

  const MaterialParams& params() const noexcept { return params_; }
  const QuadratureSettings& settings() const noexcept { return settings_; }

  double big_g0() const noexcept { return g0_; }
  double big_f0() const noexcept { return f0_; }

  /// F(0) / G(0), the overall size of the anomalous term.
  double anomalous_ratio() const noexcept { return f0_ / g0_; }

  double big_g(double x) const { return x == 0.0 ? g0_ : big_g_dimensionless(x, params_, settings_); }
  double big_f(double x) const { return x == 0.0 ? f0_ : big_f_dimensionless(x, params_, settings_); }

  double g(double x) const { return big_g(x) / g0_; }
  double f(double x) const { return big_f(x) / g0_; }

  CorrelatorSample sample(double x) const {
    const double big_f_x = big_f(x);
    return {x, big_g(x) / g0_, big_f_x / g0_, f0_ != 0.0 ? big_f_x / f0_ : NAN};
  }

 private:
  MaterialParams params_;
  QuadratureSettings settings_;
  double g0_;
  double f0_;
};

/// Position in units of 1/k_F.
using Position = std::array<double, 3>;

/// Two-electron space-spin density matrix rho2_{s1 s2; s1' s2'}(r1, r2; r1', r2').
///
/// Spin index 0 = up, 1 = down. With G = -i I_G and F real,
///   rho2 = 1/2 [ d_{s1 s1'} d_{s2 s2'} I_G(r1-r1') I_G(r2-r2')
///              - d_{s1 s2'} d_{s2 s1'} I_G(r1-r2') I_G(r2-r1')
///              + I_{s1 s2} I_{s1' s2'} I_F(r1-r2) I_F(r1'-r2') ],
/// I = i sigma_y, overall constant (k_F^3 / 2 pi^2)^2 dropped.
struct SpinTensor {
  std::array<double, 16> elements{};
  double direct = 0.0;     ///< I_G(r1-r1') I_G(r2-r2')
  double exchange = 0.0;   ///< I_G(r1-r2') I_G(r2-r1')
  double anomalous = 0.0;  ///< I_F(r1-r2) I_F(r1'-r2')

  static constexpr int index(int s1, int s2, int s1p, int s2p) noexcept { return ((s1 * 2 + s2) * 2 + s1p) * 2 + s2p; }

  double operator()(int s1, int s2, int s1p, int s2p) const { return elements[index(s1, s2, s1p, s2p)]; }
};

/// Antisymmetric spin metric I = i sigma_y = [[0, 1], [-1, 0]].
constexpr double spin_metric(int s, int t) noexcept {
  if (s == 0 && t == 1) return 1.0;
  if (s == 1 && t == 0) return -1.0;
  return 0.0;
}

inline SpinTensor rho2_spin_tensor(const Position& x1, const Position& x2, const Position& x1p, const Position& x2p,
                                   const MaterialParams& params, const QuadratureSettings& settings = {}) {
  const auto dist = [](const Position& a, const Position& b) {
    return std::hypot(a[0] - b[0], a[1] - b[1], a[2] - b[2]);
  };
  SpinTensor t;
  t.direct = big_g_dimensionless(dist(x1, x1p), params, settings) * big_g_dimensionless(dist(x2, x2p), params, settings);
  t.exchange = big_g_dimensionless(dist(x1, x2p), params, settings) * big_g_dimensionless(dist(x2, x1p), params, settings);
  t.anomalous = big_f_dimensionless(dist(x1, x2), params, settings) * big_f_dimensionless(dist(x1p, x2p), params, settings);

  for (int s1 = 0; s1 < 2; ++s1)
    for (int s2 = 0; s2 < 2; ++s2)
      for (int s1p = 0; s1p < 2; ++s1p)
        for (int s2p = 0; s2p < 2; ++s2p) {
          const double d = (s1 == s1p && s2 == s2p) ? t.direct : 0.0;
          const double e = (s1 == s2p && s2 == s1p) ? t.exchange : 0.0;
          const double a = spin_metric(s1, s2) * spin_metric(s1p, s2p) * t.anomalous;
          t.elements[SpinTensor::index(s1, s2, s1p, s2p)] = 0.5 * (d - e + a);
        }
  return t;
}

}  // namespace bcs
