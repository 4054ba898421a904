#pragma once

#include <initializer_list>
#include <ostream>
#include <utility>
#include <vector>

#include "pke/algebra.hpp"
#include "pke/multipoly.hpp"
#include "pke/rational.hpp"

namespace pke {

// Readable gtest failure messages.
inline void PrintTo(const MultiPoly& p, std::ostream* os) { *os << to_string(p); }

}  // namespace pke

namespace pke::test {

inline Rational frac(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

using TermList = std::initializer_list<std::pair<std::vector<unsigned>, Rational>>;

inline MultiPoly poly(std::size_t nvars, TermList terms) {
  MultiPoly p(nvars);
  for (const auto& [e, c] : terms) p.add_term(Monomial(e), c);
  return p;
}

inline MultiPoly var(std::size_t nvars, std::size_t i) { return MultiPoly::variable(nvars, i); }
inline MultiPoly one(std::size_t nvars) { return MultiPoly::constant(nvars, Rational(1)); }

/// 1 + sum_i w_i x_i
inline MultiPoly affine(std::size_t nvars, std::initializer_list<std::pair<std::size_t, Rational>> linear) {
  MultiPoly p = one(nvars);
  for (const auto& [i, w] : linear) p += var(nvars, i) * w;
  return p;
}

}  // namespace pke::test
