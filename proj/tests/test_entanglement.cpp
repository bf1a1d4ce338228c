// Copyright 2026 The bcs-entangle Authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "bcs_entangle/entanglement.hpp"
#include "oracles.hpp"

namespace {

using bcs::Matrix4c;
using bcs::SpinDensityMatrix;
using bcs::WernerState;

double max_abs_diff(const Matrix4c& a, const Matrix4c& b) { return (a - b).cwiseAbs().maxCoeff(); }

TEST(SpinDensityMatrix, ValidatesInvariants) {
  EXPECT_NO_THROW(SpinDensityMatrix(Matrix4c::Identity() / 4.0));
  EXPECT_THROW(SpinDensityMatrix(Matrix4c::Identity() / 2.0), bcs::DomainError);
  Matrix4c skew = Matrix4c::Identity() / 4.0;
  skew(0, 1) = 0.1;
  EXPECT_THROW(SpinDensityMatrix{skew}, bcs::DomainError);
  Matrix4c negative = Matrix4c::Zero();
  negative(0, 0) = 1.5;
  negative(1, 1) = -0.5;
  EXPECT_THROW(SpinDensityMatrix{negative}, bcs::DomainError);
}

TEST(WernerState, RangeAndMatrix) {
  EXPECT_THROW(WernerState(-0.1), bcs::DomainError);
  EXPECT_THROW(WernerState(1.1), bcs::DomainError);
  EXPECT_LT(max_abs_diff(WernerState(0.0).matrix(), Matrix4c::Identity() / 4.0), 1e-16);
  EXPECT_LT(max_abs_diff(WernerState(1.0).matrix(), bcs::singlet_projector()), 1e-16);
  EXPECT_FALSE(WernerState(1.0 / 3.0).entangled());
  EXPECT_TRUE(WernerState(0.34).entangled());
}

TEST(WernerFromGF, Examples) {
  {
    const auto w = bcs::werner_from_gf(0.0, 0.0);
    EXPECT_EQ(w.state.p(), 0.0);
    EXPECT_LT(max_abs_diff(w.rho.matrix(), Matrix4c::Identity() / 4.0), 1e-16);
  }
  {
    const auto w = bcs::werner_from_gf(1.0, 0.0);
    EXPECT_EQ(w.state.p(), 1.0);
    EXPECT_LT(max_abs_diff(w.rho.matrix(), bcs::singlet_projector()), 1e-16);
  }
  for (double f : {0.0, 0.01, 0.3, 2.0}) EXPECT_NEAR(bcs::werner_from_gf(1.0, f).state.p(), 1.0, 1e-15);
  EXPECT_NEAR(bcs::werner_from_gf(std::sqrt(0.5), 0.0).state.p(), 1.0 / 3.0, 1e-15);
  EXPECT_THROW(bcs::werner_from_gf(1.01, 0.0), bcs::DomainError);
  EXPECT_THROW(bcs::werner_parameter(-1.5, 0.0), bcs::DomainError);
}

TEST(WernerFromGF, ExplicitMatrixEqualsWernerForm) {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> gdist(-1.0, 1.0);
  std::uniform_real_distribution<double> fdist(-std::sqrt(0.1), std::sqrt(0.1));
  for (int i = 0; i < 100; ++i) {
    const double g = gdist(rng);
    const double f = fdist(rng);
    const auto w = bcs::werner_from_gf(g, f);  // explicit matrix validated on construction
    EXPECT_GE(w.state.p(), 0.0);
    EXPECT_LE(w.state.p(), 1.0);
    EXPECT_LT(max_abs_diff(w.rho.matrix(), w.state.matrix()), 1e-12);
    EXPECT_NO_THROW(SpinDensityMatrix(w.state.matrix()));
  }
}

TEST(PartialTranspose, MinimumEigenvalue) {
  EXPECT_NEAR(bcs::ppt_min_eigenvalue(SpinDensityMatrix(Matrix4c::Identity() / 4.0)), 0.25, 1e-15);
  EXPECT_NEAR(bcs::ppt_min_eigenvalue(SpinDensityMatrix(bcs::singlet_projector())), -0.5, 1e-15);
  EXPECT_NEAR(bcs::ppt_min_eigenvalue(SpinDensityMatrix(WernerState(1.0 / 3.0).matrix())), 0.0, 1e-15);
  for (double p = 0.0; p <= 1.0; p += 0.01)
    EXPECT_NEAR(bcs::ppt_min_eigenvalue(SpinDensityMatrix(WernerState(p).matrix())), (1.0 - 3.0 * p) / 4.0, 1e-10);
}

TEST(PartialTranspose, IsAnInvolution) {
  Matrix4c m = Matrix4c::Random();
  EXPECT_EQ(bcs::partial_transpose(bcs::partial_transpose(m)), m);
}

TEST(Criteria, AllThreeAgreeOnRandomSamples) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> gdist(-1.0, 1.0);
  std::uniform_real_distribution<double> fdist(-1.0, 1.0);
  int entangled = 0;
  for (int i = 0; i < 1000; ++i) {
    const double g = gdist(rng);
    const double f = fdist(rng);
    const auto w = bcs::werner_from_gf(g, f);
    const bool by_p = 3.0 * w.state.p() > 1.0;
    EXPECT_EQ(by_p, bcs::entanglement_condition(g, f)) << g << " " << f;
    EXPECT_EQ(by_p, bcs::ppt_min_eigenvalue(w.rho) < 0.0) << g << " " << f;
    entangled += by_p;
  }
  EXPECT_GT(entangled, 100);
  EXPECT_LT(entangled, 900);
}

TEST(Criteria, Examples) {
  EXPECT_TRUE(bcs::entanglement_condition(1.0, 0.0));
  EXPECT_FALSE(bcs::entanglement_condition(0.0, 0.5));
  // sqrt(0.5) rounds up, so probe the boundary from both sides.
  const double below = std::nextafter(std::sqrt(0.5), 0.0);
  ASSERT_LE(below * below, 0.5);
  EXPECT_FALSE(bcs::entanglement_condition(below, 0.0));
  EXPECT_TRUE(bcs::entanglement_condition(0.7072, 0.0));
}

TEST(Concurrence, Examples) {
  EXPECT_NEAR(bcs::concurrence_wootters(SpinDensityMatrix(bcs::singlet_projector())), 1.0, 1e-14);
  EXPECT_NEAR(bcs::concurrence_wootters(SpinDensityMatrix(Matrix4c::Identity() / 4.0)), 0.0, 1e-14);
  EXPECT_NEAR(bcs::concurrence_wootters(SpinDensityMatrix(WernerState(0.5).matrix())), 0.25, 1e-12);
  EXPECT_EQ(bcs::concurrence_werner(1.0), 1.0);
  EXPECT_EQ(bcs::concurrence_werner(1.0 / 3.0), 0.0);
  EXPECT_EQ(bcs::concurrence_werner(0.5), 0.25);
  EXPECT_THROW(bcs::concurrence_werner(1.5), bcs::DomainError);
}

TEST(Concurrence, WoottersMatchesClosedFormForWernerStates) {
  for (int i = 0; i <= 10; ++i) {
    const double p = i / 10.0;
    EXPECT_NEAR(bcs::concurrence_wootters(SpinDensityMatrix(WernerState(p).matrix())), bcs::concurrence_werner(p),
                1e-10)
        << "p=" << p;
  }
}

TEST(Concurrence, WoottersOnNonWernerStates) {
  // Pure a|uu> + b e^{i phi}|dd>: C = 2|ab|.
  const double a = 0.6;
  const double b = 0.8;
  Eigen::Vector4cd psi = Eigen::Vector4cd::Zero();
  psi(0) = a;
  psi(3) = b * std::polar(1.0, 0.7);
  EXPECT_NEAR(bcs::concurrence_wootters(SpinDensityMatrix(psi * psi.adjoint())), 2.0 * a * b, 1e-12);
  // Product state |u> x (|u> + i|d>)/sqrt 2.
  Eigen::Vector4cd prod = Eigen::Vector4cd::Zero();
  prod(0) = 1.0 / std::sqrt(2.0);
  prod(1) = std::complex<double>(0.0, 1.0 / std::sqrt(2.0));
  EXPECT_NEAR(bcs::concurrence_wootters(SpinDensityMatrix(prod * prod.adjoint())), 0.0, 1e-12);
}

TEST(Concurrence, WernerFormNonDecreasing) {
  double prev = 0.0;
  for (double p = 0.0; p <= 1.0; p += 1e-3) {
    const double c = bcs::concurrence_werner(p);
    EXPECT_GE(c, prev);
    prev = c;
  }
}

TEST(EntanglementLength, FreeGasOracle) {
  const double oracle = bcs::oracle::free_gas_entanglement_length();
  EXPECT_NEAR(oracle, 1.814, 1e-3);
  const auto l = bcs::entanglement_length(bcs::MaterialParams(0.0, 0.1));
  EXPECT_NEAR(l.x_c, oracle, 2e-6);
  EXPECT_FALSE(l.reentrant);
  EXPECT_TRUE(std::isinf(l.kf_xi0));
}

TEST(EntanglementLength, ReferenceParameters) {
  const auto l = bcs::entanglement_length(bcs::MaterialParams(1e-3, 0.1));
  const double oracle = bcs::oracle::free_gas_entanglement_length();
  EXPECT_NEAR(l.x_c, 1.814, 0.01);
  EXPECT_NEAR(l.x_c, oracle, 0.01 * oracle);
  EXPECT_NEAR(l.r_over_lambda_f, 0.289, 1e-3);
  EXPECT_NEAR(l.kf_xi0, 636.6, 0.1);
  EXPECT_GT(l.xi0_over_rc, 100.0);
  EXPECT_TRUE(l.scale_separated());
  EXPECT_FALSE(l.reentrant);
  EXPECT_LT(l.max_p_beyond, 1.0 / 3.0);
  EXPECT_GE(l.verified_up_to, 2000.0 - std::numbers::pi / 4.0);
}

TEST(EntanglementLength, NoRootOnTruncatedGrid) {
  bcs::LengthSearchOptions opt;
  opt.verify_cap = 1.0;
  EXPECT_THROW(bcs::entanglement_length(bcs::MaterialParams(1e-3, 0.1), {}, opt), bcs::NoRootFound);
}

}  // namespace
