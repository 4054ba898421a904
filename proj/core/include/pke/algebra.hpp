#pragma once

#include <cstddef>
#include <span>

#include "pke/errors.hpp"
#include "pke/multipoly.hpp"
#include "pke/poly_matrix.hpp"
#include "pke/rational.hpp"

namespace pke {

// Variable indices are zero-based throughout the C++ API; the CLI converts
// from the one-based indices users type.

/// Formal partial derivative with respect to variable `var`.
/// Throws std::invalid_argument if `var >= p.nvars()`.
MultiPoly partial_derivative(const MultiPoly& p, std::size_t var);

/// Determinant by fraction-free (Bareiss) elimination over Q[x1..xn].
/// Row swaps are used when a pivot vanishes. Throws on non-square input.
MultiPoly determinant(const PolyMatrix& m);

/// Division-free determinant by expansion over column-subset minors
/// (O(n 2^n) polynomial products). Much faster than elimination when the
/// entries are small and the minors large. Intended for n <= 8.
MultiPoly determinant_by_minors(const PolyMatrix& m);

/// Returns q with a == q * b. Throws NotDivisible if the grlex division
/// leaves a remainder, std::invalid_argument if b is zero.
MultiPoly exact_divide(const MultiPoly& a, const MultiPoly& b);

/// Substitutes x_i -> factors[i] * x_i. Throws on a zero factor.
MultiPoly scale_vars(const MultiPoly& p, std::span<const Rational> factors);

/// Returns R with R^q == p. When p(0) != 0 the root is built degree by degree
/// from the constant term, which is taken as the real q-th root of p(0)
/// (non-negative for even q). Throws NoExactRoot when no rational root exists.
MultiPoly nth_root(const MultiPoly& p, unsigned q);

/// Replaces variable i by images[i] (all images share one variable count).
MultiPoly substitute(const MultiPoly& p, std::span<const MultiPoly> images);

/// Restricts p to the coordinate axis `var` (all other variables set to 0)
/// and returns the result as a univariate polynomial.
MultiPoly restrict_to_axis(const MultiPoly& p, std::size_t var);

/// Embeds a univariate polynomial as a polynomial in variable `var` of
/// an `nvars`-variable ring.
MultiPoly lift_univariate(const MultiPoly& p, std::size_t nvars, std::size_t var);

/// Coefficient of x_var^power, as a polynomial in the remaining variables
/// (kept in the same ring, x_var absent).
MultiPoly coefficient_in(const MultiPoly& p, std::size_t var, unsigned power);

/// p(t) = epsilon * (1 + t/r)^k.
struct BinomialProfile {
  int epsilon = 1;
  Rational r;
  unsigned k = 0;

  friend bool operator==(const BinomialProfile&, const BinomialProfile&) = default;
};

/// eps * (1 + t/r)^k as a univariate polynomial.
MultiPoly binomial_power(int epsilon, const Rational& r, unsigned k);

/// Recovers (eps, r, k) from a univariate p with constant term +-1. The
/// linear coefficient fixes r = eps*k/p'(0); the full expansion is then
/// checked exactly. Throws NotBinomialPower otherwise (including irrational
/// or split-complex root structures, which are never certified).
BinomialProfile binomial_profile(const MultiPoly& p);

}  // namespace pke
