#pragma once

#include <cstddef>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "pke/rational.hpp"

namespace pke {

/// Exponent vector (multi-index) of a monomial in a fixed number of variables.
class Monomial {
 public:
  explicit Monomial(std::size_t nvars = 0);
  explicit Monomial(std::vector<unsigned> exponents);
  Monomial(std::initializer_list<unsigned> exponents);

  static Monomial variable(std::size_t nvars, std::size_t var, unsigned power = 1);

  std::size_t nvars() const noexcept { return exponents_.size(); }
  unsigned total_degree() const noexcept { return degree_; }
  unsigned operator[](std::size_t var) const { return exponents_[var]; }
  std::span<const unsigned> exponents() const noexcept { return exponents_; }

  bool divides(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;
  /// Requires divides(other) in reverse, i.e. `other` divides `*this`.
  Monomial operator/(const Monomial& other) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<unsigned> exponents_;
  unsigned degree_ = 0;
};

/// Graded lexicographic comparison: total degree first, then the first
/// differing exponent (x1 > x2 > ... > xn). Returns <0, 0, >0.
int grlex_compare(const Monomial& a, const Monomial& b);

/// Orders monomials from largest to smallest in grlex, so that the first
/// entry of a term map is the leading term.
struct GrlexDescending {
  bool operator()(const Monomial& a, const Monomial& b) const { return grlex_compare(a, b) > 0; }
};

/// Sparse multivariate polynomial with exact rational coefficients.
/// Zero coefficients are never stored, so equality is term-map equality.
class MultiPoly {
 public:
  using TermMap = std::map<Monomial, Rational, GrlexDescending>;

  /// Degree reported for the zero polynomial (stands in for -infinity).
  static constexpr int kZeroDegree = -1;

  explicit MultiPoly(std::size_t nvars = 1);

  static MultiPoly constant(std::size_t nvars, const Rational& value);
  static MultiPoly variable(std::size_t nvars, std::size_t var);
  static MultiPoly term(const Monomial& monomial, const Rational& coefficient);

  std::size_t nvars() const noexcept { return nvars_; }
  const TermMap& terms() const noexcept { return terms_; }
  std::size_t term_count() const noexcept { return terms_.size(); }

  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  int degree() const noexcept;
  int degree_in(std::size_t var) const;
  bool depends_on(std::size_t var) const;

  Rational coefficient(const Monomial& monomial) const;
  Rational constant_term() const;
  /// Leading term in grlex; requires a non-zero polynomial.
  const TermMap::value_type& leading_term() const;

  /// Adds `coefficient * monomial`, removing the entry if it cancels.
  void add_term(const Monomial& monomial, const Rational& coefficient);

  MultiPoly& operator+=(const MultiPoly& other);
  MultiPoly& operator-=(const MultiPoly& other);
  MultiPoly& operator*=(const MultiPoly& other);
  MultiPoly& operator*=(const Rational& scalar);

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const Rational& s) { return a *= s; }
  friend MultiPoly operator*(const Rational& s, MultiPoly a) { return a *= s; }
  MultiPoly operator-() const;

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  MultiPoly pow(unsigned exponent) const;

  Rational evaluate(std::span<const Rational> point) const;
  double evaluate(std::span<const double> point) const;

 private:
  void check_compatible(const MultiPoly& other) const;

  std::size_t nvars_;
  TermMap terms_;
};

/// Total order used for canonical sorting of polynomial lists: nvars, then
/// the term sequence from the leading term down (monomial, then coefficient).
bool canonical_less(const MultiPoly& a, const MultiPoly& b);

/// Human-readable form, e.g. "1/4*x1^2 + x1 + 1". Variables default to x1..xn.
std::string to_string(const MultiPoly& p, std::span<const std::string> names = {});

/// Coefficients converted to double once, for repeated numeric evaluation.
class NumericPoly {
 public:
  NumericPoly() = default;
  explicit NumericPoly(const MultiPoly& p);
  double operator()(std::span<const double> point) const;
  std::size_t nvars() const noexcept { return nvars_; }

 private:
  std::size_t nvars_ = 0;
  std::vector<unsigned> exponents_;  // row-major, nvars_ per term
  std::vector<double> coefficients_;
};

}  // namespace pke
