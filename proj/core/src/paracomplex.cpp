#include "pke/paracomplex.hpp"

#include <stdexcept>

#include "pke/algebra.hpp"

namespace pke {

ParaComplex ParaComplex::from_null(const NullCoords& n) {
  return {(n.u + n.v) / 2, (n.v - n.u) / 2};
}

NullCoords ParaComplex::to_null() const { return {x_ - y_, x_ + y_}; }

ParaComplex pc_mul(const ParaComplex& a, const ParaComplex& b) {
  return {a.real() * b.real() + a.imag() * b.imag(), a.real() * b.imag() + a.imag() * b.real()};
}

Rational modulus_sq(const ParaComplex& z) { return z.real() * z.real() - z.imag() * z.imag(); }

ParaMap::ParaMap(std::size_t nvars, std::vector<MultiPoly> e_parts, std::vector<MultiPoly> ebar_parts)
    : nvars_(nvars), e_parts_(std::move(e_parts)), ebar_parts_(std::move(ebar_parts)) {
  if (nvars_ == 0) throw std::invalid_argument("ParaMap: nvars must be positive");
  if (e_parts_.size() != ebar_parts_.size() || e_parts_.empty()) {
    throw std::invalid_argument("ParaMap: e and ebar parts must pair up");
  }
  for (std::size_t j = 0; j < e_parts_.size(); ++j) {
    if (e_parts_[j].nvars() != 2 * nvars_ || ebar_parts_[j].nvars() != 2 * nvars_) {
      throw std::invalid_argument("ParaMap: components must live in 2n variables");
    }
  }
}

ParaMap::ParaMap(std::size_t nvars, MultiPoly e_part, MultiPoly ebar_part)
    : ParaMap(nvars, std::vector<MultiPoly>{std::move(e_part)}, std::vector<MultiPoly>{std::move(ebar_part)}) {}

ParaMap ParaMap::identity(std::size_t nvars) {
  std::vector<MultiPoly> e;
  std::vector<MultiPoly> ebar;
  for (std::size_t i = 0; i < nvars; ++i) {
    e.push_back(MultiPoly::variable(2 * nvars, i));
    ebar.push_back(MultiPoly::variable(2 * nvars, nvars + i));
  }
  return ParaMap(nvars, std::move(e), std::move(ebar));
}

ParaMap ParaMap::flip_xi(std::size_t nvars, std::size_t coordinate) {
  if (coordinate >= nvars) throw std::invalid_argument("flip_xi: coordinate out of range");
  std::vector<MultiPoly> e;
  std::vector<MultiPoly> ebar;
  for (std::size_t i = 0; i < nvars; ++i) {
    MultiPoly xi = MultiPoly::variable(2 * nvars, i);
    e.push_back(i == coordinate ? -xi : xi);
    ebar.push_back(MultiPoly::variable(2 * nvars, nvars + i));
  }
  return ParaMap(nvars, std::move(e), std::move(ebar));
}

ParaMap ParaMap::scaling(std::size_t nvars, const Rational& s) {
  std::vector<MultiPoly> e;
  std::vector<MultiPoly> ebar;
  for (std::size_t i = 0; i < nvars; ++i) {
    e.push_back(MultiPoly::variable(2 * nvars, i) * s);
    ebar.push_back(MultiPoly::variable(2 * nvars, nvars + i) * s);
  }
  return ParaMap(nvars, std::move(e), std::move(ebar));
}

bool is_paraholomorphic(const ParaMap& f) {
  const std::size_t n = f.nvars();
  for (std::size_t j = 0; j < f.components(); ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      if (f.e_part(j).depends_on(n + i)) return false;
      if (f.ebar_part(j).depends_on(i)) return false;
    }
  }
  return true;
}

ParaMap compose(const ParaMap& outer, const ParaMap& inner) {
  if (inner.components() != outer.nvars()) {
    throw std::invalid_argument("compose: inner map dimension does not match outer domain");
  }
  // Outer variables (xi'_1..xi'_m, eta'_1..eta'_m) become the inner null parts.
  std::vector<MultiPoly> images;
  images.reserve(2 * outer.nvars());
  for (std::size_t j = 0; j < inner.components(); ++j) images.push_back(inner.e_part(j));
  for (std::size_t j = 0; j < inner.components(); ++j) images.push_back(inner.ebar_part(j));

  std::vector<MultiPoly> e;
  std::vector<MultiPoly> ebar;
  for (std::size_t j = 0; j < outer.components(); ++j) {
    e.push_back(substitute(outer.e_part(j), images));
    ebar.push_back(substitute(outer.ebar_part(j), images));
  }
  return ParaMap(inner.nvars(), std::move(e), std::move(ebar));
}

}  // namespace pke
