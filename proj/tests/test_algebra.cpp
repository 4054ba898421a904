#include <gtest/gtest.h>

#include <stdexcept>

#include "helpers.hpp"
#include "oracles.hpp"
#include "pke/algebra.hpp"
#include "pke/errors.hpp"
#include "pke/poly_matrix.hpp"

namespace pke {
namespace {

using test::affine;
using test::frac;
using test::one;
using test::poly;
using test::var;

// ------------------------------------------------------------------ rationals

TEST(Rational, ParsesAndReduces) {
  EXPECT_EQ(make_rational("6", "-4"), frac(-3, 2));
  EXPECT_EQ(parse_rational("-10/4"), frac(-5, 2));
  EXPECT_EQ(parse_rational(" 7 "), frac(7));
  EXPECT_EQ(to_string(frac(-3, 2)), "-3/2");
  EXPECT_EQ(denominator_string(frac(4, 2)), "1");
}

TEST(Rational, RejectsMalformedInput) {
  EXPECT_THROW(make_rational("1", "0"), std::invalid_argument);
  EXPECT_THROW(parse_rational("1/2/3"), std::invalid_argument);
  EXPECT_THROW(parse_rational("x"), std::invalid_argument);
  EXPECT_THROW(parse_rational(""), std::invalid_argument);
}

TEST(Rational, ExactRoots) {
  EXPECT_EQ(exact_root(frac(9, 4), 2), frac(3, 2));
  EXPECT_EQ(exact_root(frac(-8, 27), 3), frac(-2, 3));
  EXPECT_FALSE(exact_root(frac(-4), 2).has_value());
  EXPECT_FALSE(exact_root(frac(2), 2).has_value());
  EXPECT_EQ(pow(frac(-2, 3), 3), frac(-8, 27));
}

// ---------------------------------------------------------------- polynomials

TEST(MultiPoly, NoZeroCoefficientsAreStored) {
  MultiPoly p = var(2, 0) - var(2, 0);
  EXPECT_TRUE(p.is_zero());
  EXPECT_EQ(p.degree(), MultiPoly::kZeroDegree);
  EXPECT_EQ(p, MultiPoly(2));
}

TEST(MultiPoly, GradedLexOrderAndPrinting) {
  const MultiPoly p = affine(1, {{0, frac(1, 2)}}).pow(2);
  EXPECT_EQ(to_string(p), "1/4*x1^2 + x1 + 1");
  const MultiPoly q = poly(2, {{{0, 0}, frac(1)}, {{0, 1}, frac(-1)}, {{1, 0}, frac(3)}, {{1, 1}, frac(2)}});
  EXPECT_EQ(to_string(q), "2*x1*x2 + 3*x1 - x2 + 1");
  EXPECT_EQ(q.leading_term().first, Monomial({1, 1}));
}

TEST(MultiPoly, RejectsMixedVariableCounts) {
  EXPECT_THROW(var(1, 0) + var(2, 0), std::invalid_argument);
  MultiPoly p(2);
  EXPECT_THROW(p.add_term(Monomial{1}, frac(1)), std::invalid_argument);
}

TEST(MultiPoly, Evaluates) {
  const MultiPoly p = affine(2, {{0, frac(1, 3)}, {1, frac(1, 3)}}).pow(3);
  const std::vector<Rational> at{frac(3), frac(-3)};
  EXPECT_EQ(p.evaluate(std::span<const Rational>(at)), frac(1));
  const std::vector<double> atd{0.3, 0.6};
  EXPECT_NEAR(p.evaluate(std::span<const double>(atd)), 2.197, 1e-12);
}

// ------------------------------------------------------------------ derivative

TEST(PartialDerivative, PowerRuleOnBinomial) {
  const MultiPoly p = affine(1, {{0, frac(1, 2)}}).pow(2);
  EXPECT_EQ(partial_derivative(p, 0), affine(1, {{0, frac(1, 2)}}));
}

TEST(PartialDerivative, ConstantDirectionVanishes) {
  EXPECT_TRUE(partial_derivative(affine(2, {{0, frac(1)}}), 1).is_zero());
}

TEST(PartialDerivative, TrinomialCubeAgainstNaiveExpansion) {
  const auto factor = oracle::affine(2, {{0, frac(1, 3)}, {1, frac(1, 3)}});
  const MultiPoly cube = oracle::expand_product(2, {factor}, {3});
  const MultiPoly square = oracle::expand_product(2, {factor}, {2});
  EXPECT_EQ(partial_derivative(cube, 0), square);
}

TEST(PartialDerivative, IndexOutOfRange) {
  EXPECT_THROW(partial_derivative(var(2, 0), 2), std::invalid_argument);
}

// ----------------------------------------------------------------- determinant

TEST(Determinant, IdentityIsOne) {
  EXPECT_EQ(determinant(PolyMatrix::identity(2, 1)), one(1));
}

TEST(Determinant, TwoByTwoByHand) {
  PolyMatrix m(2, 2, 2);
  m.set(0, 0, affine(2, {{1, frac(1)}}));
  m.set(0, 1, var(2, 0));
  m.set(1, 0, var(2, 1));
  m.set(1, 1, affine(2, {{0, frac(1)}}));
  const MultiPoly expected = affine(2, {{0, frac(1)}, {1, frac(1)}});
  EXPECT_EQ(determinant(m), expected);
  EXPECT_EQ(determinant_by_minors(m), expected);
  EXPECT_EQ(oracle::cofactor_determinant(m), expected);
}

TEST(Determinant, ZeroRowGivesZero) {
  PolyMatrix m(3, 3, 2);
  for (std::size_t j = 0; j < 3; ++j) {
    m.set(0, j, var(2, 0) * frac(static_cast<long>(j) + 1));
    m.set(2, j, affine(2, {{1, frac(static_cast<long>(j))}}));
  }
  EXPECT_TRUE(determinant(m).is_zero());
  EXPECT_TRUE(determinant_by_minors(m).is_zero());
}

TEST(Determinant, NeedsPivotSwap) {
  PolyMatrix m(2, 2, 1);
  m.set(0, 1, one(1));
  m.set(1, 0, var(1, 0));
  EXPECT_EQ(determinant(m), -var(1, 0));
}

TEST(Determinant, RejectsNonSquare) {
  EXPECT_THROW(determinant(PolyMatrix(2, 3, 1)), std::invalid_argument);
  EXPECT_THROW(determinant_by_minors(PolyMatrix(3, 2, 1)), std::invalid_argument);
}

// ---------------------------------------------------------------- exact_divide

TEST(ExactDivide, PowerCancellation) {
  const MultiPoly b = affine(1, {{0, frac(1, 2)}});
  EXPECT_EQ(exact_divide(b.pow(4), b.pow(2)), b.pow(2));
}

TEST(ExactDivide, NonDivisibleThrows) {
  EXPECT_THROW(exact_divide(affine(2, {{0, frac(1)}, {1, frac(1)}}), affine(2, {{0, frac(1)}})), NotDivisible);
}

TEST(ExactDivide, ZeroDividend) {
  EXPECT_TRUE(exact_divide(MultiPoly(2), affine(2, {{0, frac(1)}})).is_zero());
  EXPECT_THROW(exact_divide(one(2), MultiPoly(2)), std::invalid_argument);
}

// ------------------------------------------------------------------ scale_vars

TEST(ScaleVars, Examples) {
  const std::vector<Rational> unit{frac(1)};
  EXPECT_EQ(scale_vars(affine(1, {{0, frac(1)}}), unit), affine(1, {{0, frac(1)}}));
  const std::vector<Rational> two{frac(2)};
  EXPECT_EQ(scale_vars(affine(1, {{0, frac(1, 2)}}).pow(2), two), affine(1, {{0, frac(1)}}).pow(2));
  const std::vector<Rational> flip{frac(-1), frac(1)};
  EXPECT_EQ(scale_vars(affine(2, {{0, frac(1)}, {1, frac(1)}}), flip), affine(2, {{0, frac(-1)}, {1, frac(1)}}));
}

TEST(ScaleVars, RejectsZeroFactor) {
  const std::vector<Rational> zero{frac(0)};
  EXPECT_THROW(scale_vars(affine(1, {{0, frac(1)}}), zero), std::invalid_argument);
}

// -------------------------------------------------------------------- nth_root

TEST(NthRoot, EvenPower) {
  const MultiPoly b = affine(1, {{0, frac(1, 2)}});
  EXPECT_EQ(nth_root(b.pow(4), 2), b.pow(2));
}

TEST(NthRoot, CubeOfTrinomial) {
  const auto factor = oracle::affine(2, {{0, frac(1, 3)}, {1, frac(1, 3)}});
  EXPECT_EQ(nth_root(oracle::expand_product(2, {factor}, {3}), 3), affine(2, {{0, frac(1, 3)}, {1, frac(1, 3)}}));
}

TEST(NthRoot, OddDegreeHasNoSquareRoot) {
  EXPECT_THROW(nth_root(affine(1, {{0, frac(1)}}), 2), NoExactRoot);
}

TEST(NthRoot, NegativeConstantOddRoot) {
  const MultiPoly r = affine(1, {{0, frac(2)}}) * frac(-1);
  EXPECT_EQ(nth_root(r.pow(3), 3), r);
  EXPECT_THROW(nth_root(r.pow(3), 2), NoExactRoot);
}

TEST(NthRoot, WithoutConstantTerm) {
  const MultiPoly r = var(2, 0) + var(2, 1) * frac(1, 2);
  EXPECT_EQ(nth_root(r.pow(2), 2), r);
  EXPECT_EQ(nth_root(r.pow(3), 3), r);
}

// ---------------------------------------------------------- binomial_profile

TEST(BinomialProfile, SquareWithRadiusTwo) {
  const auto bp = binomial_profile(poly(1, {{{0}, frac(1)}, {{1}, frac(1)}, {{2}, frac(1, 4)}}));
  EXPECT_EQ(bp.epsilon, 1);
  EXPECT_EQ(bp.r, frac(2));
  EXPECT_EQ(bp.k, 2u);
}

TEST(BinomialProfile, NegativeCube) {
  const auto bp = binomial_profile(poly(1, {{{0}, frac(-1)}, {{1}, frac(3)}, {{2}, frac(-3)}, {{3}, frac(1)}}));
  EXPECT_EQ(bp.epsilon, -1);
  EXPECT_EQ(bp.r, frac(-1));
  EXPECT_EQ(bp.k, 3u);
}

TEST(BinomialProfile, NotABinomialPower) {
  EXPECT_THROW(binomial_profile(poly(1, {{{0}, frac(1)}, {{1}, frac(1)}, {{2}, frac(1)}})), NotBinomialPower);
  EXPECT_THROW(binomial_profile(poly(1, {{{0}, frac(1)}, {{2}, frac(1)}})), NotBinomialPower);
}

// ------------------------------------------------------------------- plumbing

TEST(Substitute, ComposesPolynomials) {
  const MultiPoly p = var(2, 0) * var(2, 1);
  const std::vector<MultiPoly> images{affine(1, {{0, frac(1)}}), affine(1, {{0, frac(-1)}})};
  EXPECT_EQ(substitute(p, images), one(1) - var(1, 0).pow(2));
}

TEST(AxisHelpers, RestrictLiftAndCoefficient) {
  const MultiPoly p = affine(2, {{0, frac(1, 3)}, {1, frac(1, 3)}}).pow(3);
  EXPECT_EQ(restrict_to_axis(p, 0), affine(1, {{0, frac(1, 3)}}).pow(3));
  EXPECT_EQ(lift_univariate(affine(1, {{0, frac(2)}}), 2, 1), affine(2, {{1, frac(2)}}));
  EXPECT_EQ(coefficient_in(p, 1, 3), one(2) * frac(1, 27));
}

}  // namespace
}  // namespace pke
