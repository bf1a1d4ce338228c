// Copyright 2026 The bcs-entangle Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file model.hpp
 * @brief Dimensionless BCS model: dispersion, gap and coherence factors.
 *
 * Units: energies in eps_F, momenta in k_F, lengths in 1/k_F. The band is
 * parabolic (eps_k / eps_F = kappa^2) and the chemical potential sits at
 * eps_F, so xi(kappa) = kappa^2 - 1. The gap is a constant delta on the
 * closed Debye shell |xi| <= w and zero outside it.
 */

#pragma once

#include <cmath>
#include <numbers>
#include <string>

#include "bcs_entangle/errors.hpp"

namespace bcs {

/// Dimensionless model inputs: delta = Delta / eps_F, w = hbar omega_D / eps_F.
///
/// delta = 0 is accepted and describes the normal (non-interacting) state.
class MaterialParams {
 public:
  MaterialParams(double delta, double w) : delta_(delta), w_(w) {
    if (!std::isfinite(delta) || delta < 0.0)
      throw DomainError("delta must be finite and >= 0, got " + std::to_string(delta));
    if (!std::isfinite(w) || w <= 0.0 || w >= 1.0)
      throw DomainError("w must lie in (0, 1), got " + std::to_string(w));
  }

  /// Converts physical inputs (meV, meV, eV) to ratios.
  static MaterialParams from_physical(double gap_mev, double debye_mev, double fermi_ev) {
    if (!(fermi_ev > 0.0)) throw DomainError("fermi energy must be > 0");
    const double fermi_mev = fermi_ev * 1000.0;
    return MaterialParams(gap_mev / fermi_mev, debye_mev / fermi_mev);
  }

  double delta() const noexcept { return delta_; }
  double w() const noexcept { return w_; }

  /// Delta << hbar omega_D; callers warn (not fail) when this is violated.
  bool weak_coupling() const noexcept { return delta_ < w_; }

  /// k_F * xi_0 with xi_0 = hbar v_F / (pi Delta); infinite in the normal state.
  double kf_xi0() const noexcept {
    return delta_ > 0.0 ? 2.0 / (std::numbers::pi * delta_) : INFINITY;
  }

  /// Edges of the pairing shell in kappa.
  double shell_lower() const noexcept { return std::sqrt(1.0 - w_); }
  double shell_upper() const noexcept { return std::sqrt(1.0 + w_); }

  friend bool operator==(const MaterialParams&, const MaterialParams&) = default;

 private:
  double delta_;
  double w_;
};

/// Dimensionless momentum k / k_F.
class Kappa {
 public:
  explicit Kappa(double value) : value_(value) {
    if (!(value >= 0.0) || !std::isfinite(value))
      throw DomainError("kappa must be finite and >= 0, got " + std::to_string(value));
  }
  double value() const noexcept { return value_; }

 private:
  double value_;
};

/// u^2, v^2 and the positive root u*v at one momentum.
struct CoherenceFactors {
  double v2;
  double u2;
  double uv;
};

/// xi = kappa^2 - 1, factored to keep precision near the Fermi surface.
inline double xi(Kappa kappa) noexcept {
  const double k = kappa.value();
  return (k - 1.0) * (k + 1.0);
}

/// Gap as a function of xi. Closed shell: |xi| == w still carries the gap.
inline double gap_at_xi(double xi_value, const MaterialParams& params) noexcept {
  return std::abs(xi_value) <= params.w() ? params.delta() : 0.0;
}

inline double gap(Kappa kappa, const MaterialParams& params) noexcept {
  return gap_at_xi(xi(kappa), params);
}

inline double quasiparticle_energy(Kappa kappa, const MaterialParams& params) noexcept {
  return std::hypot(xi(kappa), gap(kappa, params));
}

/// Coherence factors at a given xi.
///
/// The small factor on each side of the Fermi surface is written as
/// gap^2 / (2E(E + |xi|)) so that it does not lose digits to cancellation.
/// At E = 0 (normal state exactly on the Fermi surface) v^2 = u^2 = 1/2.
inline CoherenceFactors coherence_at_xi(double xi_value, const MaterialParams& params) noexcept {
  const double d = gap_at_xi(xi_value, params);
  const double e = std::hypot(xi_value, d);
  if (e == 0.0) return {0.5, 0.5, 0.0};
  const double small = d * d / (2.0 * e * (e + std::abs(xi_value)));
  const double large = 1.0 - small;
  const double uv = d / (2.0 * e);
  if (xi_value > 0.0) return {small, large, uv};
  return {large, small, uv};
}

inline CoherenceFactors coherence(Kappa kappa, const MaterialParams& params) noexcept {
  return coherence_at_xi(xi(kappa), params);
}

inline double v2(Kappa kappa, const MaterialParams& params) noexcept {
  return coherence(kappa, params).v2;
}

inline double u2(Kappa kappa, const MaterialParams& params) noexcept {
  return coherence(kappa, params).u2;
}

inline double uv(Kappa kappa, const MaterialParams& params) noexcept {
  return coherence(kappa, params).uv;
}

}  // namespace bcs
