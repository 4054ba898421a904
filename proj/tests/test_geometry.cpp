#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "helpers.hpp"
#include "pke/algebra.hpp"
#include "pke/errors.hpp"
#include "pke/geometry.hpp"

namespace pke {
namespace {

using test::affine;
using test::frac;
using test::one;
using test::var;

ToricPotential fubini_study(long K) { return ToricPotential::logarithmic(affine(1, {{0, frac(2)}}), frac(K)); }

// --------------------------------------------------------------- potentials

TEST(ToricPotential, ConstructorsCheckNormalization) {
  EXPECT_THROW(ToricPotential::polynomial(one(1)), std::invalid_argument);
  EXPECT_THROW(ToricPotential::logarithmic(affine(1, {{0, frac(1)}}) * frac(2), frac(1)), std::invalid_argument);
  EXPECT_THROW(ToricPotential::logarithmic(affine(1, {{0, frac(1)}}), frac(0)), std::invalid_argument);
  EXPECT_NO_THROW(ToricPotential::logarithmic(-affine(1, {{0, frac(1)}}), frac(-1)));
}

TEST(SpaceForm, FlatModel) {
  const ToricPotential phi = space_form_potential(frac(0), 2);
  EXPECT_EQ(phi.kind(), PotentialKind::Poly);
  EXPECT_EQ(phi.P(), (var(2, 0) + var(2, 1)) * frac(4));
}

TEST(SpaceForm, ProjectiveModels) {
  const ToricPotential c8 = space_form_potential(frac(8), 1);
  EXPECT_EQ(c8.kind(), PotentialKind::Log);
  EXPECT_EQ(c8.P(), affine(1, {{0, frac(2)}}));
  EXPECT_EQ(c8.k(), frac(1));
  EXPECT_EQ(space_form_potential(frac(4), 1).k(), frac(2));
}

// ----------------------------------------------------------- toric Hessian

TEST(ToricHessian, FlatModelIsFourTimesIdentity) {
  const PolyMatrix m = toric_hessian_matrix(space_form_potential(frac(0), 3).P());
  PolyMatrix expected = PolyMatrix::identity(3, 3);
  for (std::size_t i = 0; i < 3; ++i) expected.set(i, i, one(3) * frac(4));
  EXPECT_EQ(m, expected);
}

TEST(ToricHessian, MixedMonomialByHand) {
  const PolyMatrix m = toric_hessian_matrix(var(2, 0) * var(2, 1));
  EXPECT_EQ(m.at(0, 0), var(2, 1));
  EXPECT_EQ(m.at(0, 1), var(2, 0));
  EXPECT_EQ(m.at(1, 0), var(2, 1));
  EXPECT_EQ(m.at(1, 1), var(2, 0));
}

TEST(ToricHessian, ZeroPotential) { EXPECT_EQ(toric_hessian_matrix(MultiPoly(2)), PolyMatrix(2, 2, 2)); }

// ------------------------------------------------------------------ metric

TEST(EvalMetric, FubiniStudyAtOrigin) {
  const MetricSample s = eval_metric(fubini_study(1), EvalPoint{{0.0}, {0.0}});
  EXPECT_DOUBLE_EQ(s.g(0, 0), 2.0);
}

TEST(EvalMetric, FubiniStudyAwayFromOrigin) {
  // 2K / (1 + 2 xi eta)^2
  const MetricSample s = eval_metric(fubini_study(3), EvalPoint{{0.2}, {-0.1}});
  EXPECT_NEAR(s.g(0, 0), 6.0 / (0.96 * 0.96), 1e-13);
}

TEST(EvalMetric, FlatModelIsConstant) {
  const MetricSample s = eval_metric(space_form_potential(frac(0), 1), EvalPoint{{0.3}, {-0.7}});
  EXPECT_DOUBLE_EQ(s.g(0, 0), 4.0);
}

TEST(EvalMetric, ZeroPotential) {
  const MetricSample s = eval_metric(ToricPotential::polynomial(MultiPoly(2)), EvalPoint{{0.1, 0.2}, {0.3, 0.4}});
  EXPECT_TRUE(s.g.isZero());
}

TEST(EvalMetric, VanishingPThrows) {
  const ToricPotential phi = ToricPotential::logarithmic(affine(1, {{0, frac(-1)}}), frac(1));
  EXPECT_THROW(eval_metric(phi, EvalPoint{{1.0}, {1.0}}), DomainError);
}

TEST(EvalMetric, RejectsMalformedPoints) {
  EXPECT_THROW(eval_metric(fubini_study(1), EvalPoint{{0.0, 0.0}, {0.0}}), std::invalid_argument);
  EXPECT_THROW(eval_metric(fubini_study(1), EvalPoint{{NAN}, {0.0}}), std::invalid_argument);
}

// ------------------------------------------------------------------ Ricci

TEST(Ricci, FlatModelVanishes) {
  const Eigen::MatrixXd ric = ricci_numeric(space_form_potential(frac(0), 2), EvalPoint{{0.05, -0.02}, {0.01, 0.07}});
  EXPECT_LT(ric.cwiseAbs().maxCoeff(), 1e-8);
}

TEST(Ricci, FubiniStudyIsTwiceMetric) {
  const EvalPoint p{{0.04}, {-0.06}};
  const Eigen::MatrixXd ric = ricci_numeric(fubini_study(1), p);
  const Eigen::MatrixXd g = eval_metric(fubini_study(1), p).g;
  EXPECT_NEAR(ric(0, 0), 2.0 * g(0, 0), 1e-6);
}

TEST(Ricci, TrinomialCubeLogHasUnitConstant) {
  const ToricPotential phi = ToricPotential::logarithmic(affine(2, {{0, frac(1, 3)}, {1, frac(1, 3)}}), frac(3));
  const EvalPoint p{{0.03, -0.08}, {0.05, 0.02}};
  const Eigen::MatrixXd diff = ricci_numeric(phi, p) - eval_metric(phi, p).g;
  EXPECT_LT(diff.cwiseAbs().maxCoeff(), 1e-6);
}

TEST(Ricci, DegenerateMetricThrows) {
  // g = 1 + 4 xi eta vanishes on xi eta = -1/4
  const ToricPotential phi = ToricPotential::polynomial(var(1, 0) + var(1, 0).pow(2));
  EXPECT_THROW(ricci_numeric(phi, EvalPoint{{0.5}, {-0.5}}), DomainError);
  EXPECT_THROW(ricci_numeric(phi, EvalPoint{{0.5}, {-0.4999}}), DomainError);
  EXPECT_NO_THROW(ricci_numeric(phi, EvalPoint{{0.5}, {-0.4}}));
}

TEST(Ricci, RejectsNonPositiveStep) {
  EXPECT_THROW(ricci_numeric(fubini_study(1), EvalPoint{{0.0}, {0.0}}, 0.0), std::invalid_argument);
}

// ---------------------------------------------------------- Einstein fit

TEST(EinsteinFit, FlatModel) {
  const auto points = sample_points(2, 5, 11);
  const EinsteinFit fit = einstein_fit(space_form_potential(frac(0), 2), points);
  EXPECT_LT(std::abs(fit.lambda), 1e-8);
  EXPECT_LT(fit.max_residual, 1e-8);
}

TEST(EinsteinFit, FubiniStudyPowerTwo) {
  const auto points = sample_points(1, 5, 5);
  const EinsteinFit fit = einstein_fit(fubini_study(2), points);
  EXPECT_NEAR(fit.lambda, 1.0, 1e-6);
  EXPECT_LT(fit.max_residual, 1e-6);
}

TEST(EinsteinFit, NonEinsteinPotentialRegressionFloor) {
  // log(1 + x1 + x2 + x1^2); reference lambda and residual from an independent
  // symbolic computation at these five points.
  const ToricPotential phi =
      ToricPotential::logarithmic(affine(2, {{0, frac(1)}, {1, frac(1)}}) + var(2, 0).pow(2), frac(1));
  const std::vector<EvalPoint> points{
      {{0.05, 0.08}, {-0.03, 0.06}},  {{-0.07, 0.02}, {0.09, -0.04}}, {{0.01, -0.06}, {0.05, 0.03}},
      {{0.08, 0.07}, {0.06, 0.05}},   {{-0.02, -0.09}, {-0.08, 0.01}},
  };
  const EinsteinFit fit = einstein_fit(phi, points);
  EXPECT_NEAR(fit.lambda, 0.993463676593759, 1e-6);
  EXPECT_NEAR(fit.max_residual, 2.200411455988877, 1e-5);
  EXPECT_GT(fit.max_residual, 1e-3);
}

TEST(EinsteinFit, NeedsThreePoints) {
  const auto points = sample_points(1, 2, 1);
  EXPECT_THROW(einstein_fit(fubini_study(1), points), std::invalid_argument);
}

// -------------------------------------------------------------- diastasis

TEST(Diastasis, DegenerateSlicesVanish) {
  const ToricPotential phi = fubini_study(2);
  const std::vector<double> xi{0.1}, eta{-0.05}, zeta{0.07}, mu{0.02};
  EXPECT_EQ(diastasis_eval(phi, xi, eta, xi, mu), 0.0);
  EXPECT_EQ(diastasis_eval(phi, xi, eta, zeta, eta), 0.0);
}

TEST(Diastasis, BasePointAtOrigin) {
  const ToricPotential phi = ToricPotential::logarithmic(affine(2, {{0, frac(1, 3)}, {1, frac(1, 3)}}), frac(3));
  const std::vector<double> xi{0.09, -0.03}, eta{0.04, 0.06}, zero{0.0, 0.0};
  const double expected = 3.0 * std::log(1.0 + (0.09 * 0.04 - 0.03 * 0.06) / 3.0);
  EXPECT_NEAR(diastasis_eval(phi, xi, eta, zero, zero), expected, 1e-15);
}

TEST(Diastasis, ExactSeparableTermsCancel) {
  // Phi(xi, eta) = xi eta + xi^3 + eta^2 - 5 in (xi, eta)
  const MultiPoly phi = var(2, 0) * var(2, 1);
  const MultiPoly gauge = var(2, 0).pow(3) + var(2, 1).pow(2) - one(2) * frac(5);
  const std::vector<Rational> xi{frac(1, 2)}, eta{frac(-3)}, zeta{frac(2, 7)}, mu{frac(5, 4)};
  const Rational d = diastasis_exact(phi, xi, eta, zeta, mu);
  EXPECT_EQ(d, (frac(1, 2) - frac(2, 7)) * (frac(-3) - frac(5, 4)));
  EXPECT_EQ(diastasis_exact(phi + gauge, xi, eta, zeta, mu), d);
}

TEST(Lift, ToricVariablesBecomeProducts) {
  const MultiPoly lifted = lift_to_null(affine(2, {{0, frac(1)}, {1, frac(2)}}));
  EXPECT_EQ(lifted, one(4) + var(4, 0) * var(4, 2) + var(4, 1) * var(4, 3) * frac(2));
}

}  // namespace
}  // namespace pke
