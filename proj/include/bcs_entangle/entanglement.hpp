// Copyright 2026 The bcs-entangle Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file entanglement.hpp
 * @brief Two-spin Werner state of the BCS ground state, its separability,
 *        concurrence and the entanglement length.
 *
 * Basis order is {up-up, up-down, down-up, down-down}. For normalized
 * correlators (g, f) at separation x the two-spin state is
 *
 *            1   [ 1-g^2     0         0        0    ]
 *   rho12 = ---  [   0     1+f^2   -g^2-f^2     0    ]
 *            N   [   0   -g^2-f^2    1+f^2      0    ]
 *                [   0       0         0      1-g^2  ]
 *
 * with N = 4 - 2g^2 + 2f^2, which equals (1-p) I/4 + p |Psi-><Psi-| with
 * p = (f^2 + g^2) / (2 + f^2 - g^2).
 */

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "bcs_entangle/correlators.hpp"
#include "bcs_entangle/errors.hpp"
#include "bcs_entangle/parallel.hpp"

namespace bcs {

using Matrix4c = Eigen::Matrix4cd;

/// Validated two-qubit density matrix: Hermitian, unit trace, PSD.
class SpinDensityMatrix {
 public:
  static constexpr double kHermitianTol = 1e-12;
  static constexpr double kTraceTol = 1e-12;
  static constexpr double kPsdTol = 1e-10;

  explicit SpinDensityMatrix(const Matrix4c& m) : m_(m) {
    if ((m - m.adjoint()).cwiseAbs().maxCoeff() > kHermitianTol) throw DomainError("density matrix is not Hermitian");
    if (std::abs(m.trace() - 1.0) > kTraceTol) throw DomainError("density matrix trace is not 1");
    Eigen::SelfAdjointEigenSolver<Matrix4c> solver(m, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) throw NumericalDegeneracy("eigen-solve failed while validating density matrix");
    if (solver.eigenvalues().minCoeff() < -kPsdTol) throw DomainError("density matrix is not positive semidefinite");
  }

  const Matrix4c& matrix() const noexcept { return m_; }
  std::complex<double> operator()(int i, int j) const { return m_(i, j); }

 private:
  Matrix4c m_;
};

/// |Psi-><Psi-| with |Psi-> = (|ud> - |du>) / sqrt 2.
inline Matrix4c singlet_projector() {
  Matrix4c s = Matrix4c::Zero();
  s(1, 1) = s(2, 2) = 0.5;
  s(1, 2) = s(2, 1) = -0.5;
  return s;
}

/// Werner state (1-p) I/4 + p |Psi-><Psi-|, p in [0, 1].
class WernerState {
 public:
  explicit WernerState(double p) : p_(p) {
    if (!(p >= 0.0 && p <= 1.0)) throw DomainError("Werner parameter must lie in [0, 1], got " + std::to_string(p));
  }

  double p() const noexcept { return p_; }

  Matrix4c matrix() const { return (1.0 - p_) * Matrix4c::Identity() / 4.0 + p_ * singlet_projector(); }

  /// Peres-Horodecki: entangled iff p > 1/3 (boundary states are separable).
  bool entangled() const noexcept { return 3.0 * p_ > 1.0; }

 private:
  double p_;
};

namespace detail {

/// Returns g^2, clamped to 1 when it overshoots by no more than roundoff.
inline double checked_g2(double g) {
  const double g2 = g * g;
  if (!(g2 <= 1.0 + 1e-12)) throw DomainError("g^2 must not exceed 1, got g = " + std::to_string(g));
  return std::min(g2, 1.0);
}

}  // namespace detail

/// p = (f^2 + g^2) / (2 + f^2 - g^2).
inline double werner_parameter(double g, double f) {
  const double g2 = detail::checked_g2(g);
  const double f2 = f * f;
  return std::clamp((f2 + g2) / ((1.0 - g2) + (1.0 + f2)), 0.0, 1.0);
}

struct WernerFromCorrelators {
  SpinDensityMatrix rho;
  WernerState state;
};

/// Explicit two-spin matrix built from (g, f) together with its Werner parameter.
inline WernerFromCorrelators werner_from_gf(double g, double f) {
  const double g2 = detail::checked_g2(g);
  const double f2 = f * f;
  const double norm = 4.0 - 2.0 * g2 + 2.0 * f2;
  Matrix4c m = Matrix4c::Zero();
  m(0, 0) = m(3, 3) = (1.0 - g2) / norm;
  m(1, 1) = m(2, 2) = (1.0 + f2) / norm;
  m(1, 2) = m(2, 1) = (-g2 - f2) / norm;
  return {SpinDensityMatrix(m), WernerState(werner_parameter(g, f))};
}

/// Partial transpose over the second qubit.
inline Matrix4c partial_transpose(const Matrix4c& m) {
  Matrix4c pt;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int ap = 0; ap < 2; ++ap)
        for (int bp = 0; bp < 2; ++bp) pt(2 * a + b, 2 * ap + bp) = m(2 * a + bp, 2 * ap + b);
  return pt;
}

/// Smallest eigenvalue of the partial transpose; negative iff entangled.
inline double ppt_min_eigenvalue(const SpinDensityMatrix& rho) {
  Eigen::SelfAdjointEigenSolver<Matrix4c> solver(partial_transpose(rho.matrix()), Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw NumericalDegeneracy("eigen-solve of partial transpose failed");
  return solver.eigenvalues().minCoeff();
}

/// Wootters concurrence max{0, l1 - l2 - l3 - l4}.
///
/// The l_i are the singular values of tau_ij = v_i^T (sy x sy) v_j built from
/// the subnormalized eigenvectors v_i = sqrt(mu_i) e_i of rho. They equal the
/// square roots of the eigenvalues of rho (sy x sy) rho* (sy x sy), but small
/// ones come out O(mu) rather than O(sqrt(mu)), so rank-deficient states
/// such as the singlet do not pick up sqrt(eps) noise.
inline double concurrence_wootters(const SpinDensityMatrix& rho) {
  Eigen::SelfAdjointEigenSolver<Matrix4c> solver(rho.matrix());
  if (solver.info() != Eigen::Success) throw NumericalDegeneracy("eigen-solve of density matrix failed");

  Matrix4c v = solver.eigenvectors();
  for (int i = 0; i < 4; ++i) v.col(i) *= std::sqrt(std::max(0.0, solver.eigenvalues()(i)));

  Matrix4c flip = Matrix4c::Zero();
  flip(0, 3) = flip(3, 0) = -1.0;
  flip(1, 2) = flip(2, 1) = 1.0;

  const Matrix4c tau = v.transpose() * flip * v;
  Eigen::JacobiSVD<Matrix4c> svd(tau);
  const Eigen::Vector4d l = svd.singularValues();  // descending
  if (!l.allFinite()) throw NumericalDegeneracy("singular values of the Wootters matrix are not finite");
  return std::clamp(l(0) - l(1) - l(2) - l(3), 0.0, 1.0);
}

/// Closed form for Werner states: max{0, (3p - 1) / 2}.
inline double concurrence_werner(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw DomainError("Werner parameter must lie in [0, 1], got " + std::to_string(p));
  return std::max(0.0, (3.0 * p - 1.0) / 2.0);
}

/// f^2 + 2g^2 > 1, equivalent to p > 1/3.
inline bool entanglement_condition(double g, double f) {
  return f * f + 2.0 * detail::checked_g2(g) > 1.0;
}

/// Grid and tolerance choices for entanglement_length.
struct LengthSearchOptions {
  double coarse_step = 0.05;
  double tolerance = 1e-6;
  /// Window past x_c that must be free of entanglement.
  double window = std::numbers::pi;
  double verify_step = std::numbers::pi / 4.0;
  /// The verification grid runs to min(2 / delta, verify_cap).
  double verify_cap = 2000.0;
  unsigned workers = 0;
};

struct EntanglementLength {
  double x_c = 0.0;                ///< k_F r_c
  double r_over_lambda_f = 0.0;    ///< x_c / 2 pi
  double kf_xi0 = 0.0;             ///< 2 / (pi delta)
  double xi0_over_rc = 0.0;        ///< k_F xi_0 / x_c
  double verified_up_to = 0.0;     ///< end of the verification grid
  std::size_t verified_points = 0;
  double max_p_beyond = 0.0;       ///< largest p found on the verification grid
  bool reentrant = false;          ///< any p > 1/3 on the verification grid

  /// The entangled region is tiny compared to the Cooper-pair size.
  bool scale_separated() const noexcept { return x_c < 0.01 * kf_xi0; }
};

/// Smallest x_c > 0 beyond which the two spins stay unentangled over a
/// window of length pi, located by bisection on f^2 + 2g^2 - 1 from the
/// first coarse-grid sign change. A second grid out to the coherence-length
/// scale reports any re-entrant entanglement.
inline EntanglementLength entanglement_length(const Correlators& corr, const LengthSearchOptions& opt = {}) {
  const auto margin = [&](double x) {
    const auto s = corr.sample(x);
    return s.f * s.f + 2.0 * s.g * s.g - 1.0;
  };

  const double delta = corr.params().delta();
  const double verify_end = std::min(delta > 0.0 ? 2.0 / delta : INFINITY, opt.verify_cap);

  double x_c = 0.0;
  double start = 0.0;
  for (;;) {
    long k = 1;
    double lo = start;
    double hi = start + opt.coarse_step;
    while (margin(hi) > 0.0) {
      if (hi > verify_end)
        throw NoRootFound("spins remain entangled on the whole search grid up to x = " + std::to_string(hi));
      lo = hi;
      hi = start + static_cast<double>(++k) * opt.coarse_step;
    }
    while (hi - lo > opt.tolerance) {
      const double mid = 0.5 * (lo + hi);
      (margin(mid) > 0.0 ? lo : hi) = mid;
    }
    x_c = hi;

    double reentry = -1.0;
    for (double x = x_c + opt.coarse_step; x <= x_c + opt.window; x += opt.coarse_step) {
      if (margin(x) > 0.0) {
        reentry = x;
        break;
      }
    }
    if (reentry < 0.0) break;
    start = reentry;
  }

  EntanglementLength out;
  out.x_c = x_c;
  out.r_over_lambda_f = x_c / (2.0 * std::numbers::pi);
  out.kf_xi0 = corr.params().kf_xi0();
  out.xi0_over_rc = out.kf_xi0 / x_c;

  std::vector<double> grid;
  for (double x = x_c; x <= verify_end; x = x_c + static_cast<double>(grid.size()) * opt.verify_step) grid.push_back(x);
  std::vector<double> p(grid.size());
  detail::parallel_for_index(
      grid.size(), [&](std::size_t i) {
        const auto s = corr.sample(grid[i]);
        p[i] = werner_parameter(s.g, s.f);
      },
      opt.workers);

  out.verified_points = grid.size();
  out.verified_up_to = grid.empty() ? x_c : grid.back();
  for (double pi : p) {
    out.max_p_beyond = std::max(out.max_p_beyond, pi);
    if (3.0 * pi > 1.0) out.reentrant = true;
  }
  return out;
}

inline EntanglementLength entanglement_length(const MaterialParams& params, const QuadratureSettings& settings = {},
                                              const LengthSearchOptions& opt = {}) {
  return entanglement_length(Correlators(params, settings), opt);
}

}  // namespace bcs
