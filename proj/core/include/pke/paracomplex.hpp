#pragma once

#include <cstddef>
#include <vector>

#include "pke/multipoly.hpp"
#include "pke/rational.hpp"

namespace pke {

/// Null coordinates (u, v) of z = u*e + v*ebar, e = (1 - tau)/2, ebar = (1 + tau)/2.
struct NullCoords {
  Rational u;
  Rational v;

  friend bool operator==(const NullCoords&, const NullCoords&) = default;
};

/// Split-complex number x + tau*y with tau^2 = 1.
class ParaComplex {
 public:
  ParaComplex() = default;
  ParaComplex(Rational x, Rational y) : x_(std::move(x)), y_(std::move(y)) {}

  static ParaComplex from_null(const NullCoords& n);
  static ParaComplex tau() { return {Rational(0), Rational(1)}; }
  static ParaComplex e() { return {Rational(1, 2), Rational(-1, 2)}; }
  static ParaComplex ebar() { return {Rational(1, 2), Rational(1, 2)}; }

  const Rational& real() const noexcept { return x_; }
  const Rational& imag() const noexcept { return y_; }

  /// u = x - y, v = x + y.
  NullCoords to_null() const;
  ParaComplex conj() const { return {x_, -y_}; }

  friend ParaComplex operator+(const ParaComplex& a, const ParaComplex& b) {
    return {a.x_ + b.x_, a.y_ + b.y_};
  }
  friend ParaComplex operator-(const ParaComplex& a, const ParaComplex& b) {
    return {a.x_ - b.x_, a.y_ - b.y_};
  }
  friend bool operator==(const ParaComplex&, const ParaComplex&) = default;

 private:
  Rational x_{0};
  Rational y_{0};
};

/// (xa + tau ya)(xb + tau yb) = (xa xb + ya yb) + tau (xa yb + ya xb).
ParaComplex pc_mul(const ParaComplex& a, const ParaComplex& b);
inline ParaComplex operator*(const ParaComplex& a, const ParaComplex& b) { return pc_mul(a, b); }

/// |z|^2 = z * conj(z) = x^2 - y^2 (may be zero or negative).
Rational modulus_sq(const ParaComplex& z);

/// Polynomial map D^n -> D^m written in null coordinates. The domain has
/// 2n real variables ordered xi_1..xi_n, eta_1..eta_n; component j of the
/// map is u_j * e + v_j * ebar with u_j = e_parts[j], v_j = ebar_parts[j].
class ParaMap {
 public:
  ParaMap(std::size_t nvars, std::vector<MultiPoly> e_parts, std::vector<MultiPoly> ebar_parts);

  /// Single-component map.
  ParaMap(std::size_t nvars, MultiPoly e_part, MultiPoly ebar_part);

  static ParaMap identity(std::size_t nvars);
  /// (xi_i, eta_i) -> (-xi_i, eta_i) on one coordinate, identity elsewhere.
  static ParaMap flip_xi(std::size_t nvars, std::size_t coordinate);
  /// (xi, eta) -> (s xi, s eta).
  static ParaMap scaling(std::size_t nvars, const Rational& s);

  std::size_t nvars() const noexcept { return nvars_; }
  std::size_t components() const noexcept { return e_parts_.size(); }
  const MultiPoly& e_part(std::size_t j) const { return e_parts_.at(j); }
  const MultiPoly& ebar_part(std::size_t j) const { return ebar_parts_.at(j); }

  static std::size_t xi_index(std::size_t i) { return i; }
  std::size_t eta_index(std::size_t i) const { return nvars_ + i; }

 private:
  std::size_t nvars_;
  std::vector<MultiPoly> e_parts_;
  std::vector<MultiPoly> ebar_parts_;
};

/// True iff every e-part is free of eta variables and every ebar-part is
/// free of xi variables.
bool is_paraholomorphic(const ParaMap& f);

/// outer o inner; inner's component count must equal outer's nvars.
ParaMap compose(const ParaMap& outer, const ParaMap& inner);

}  // namespace pke
