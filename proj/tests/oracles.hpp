#pragma once

// Independent reference implementations used only by the tests. None of them
// share code paths with the library routines they check.

#include <map>
#include <random>
#include <vector>

#include "pke/multipoly.hpp"
#include "pke/poly_matrix.hpp"
#include "pke/rational.hpp"

namespace pke::oracle {

using Dense = std::map<std::vector<unsigned>, Rational>;

inline Dense dense_mul(const Dense& a, const Dense& b) {
  Dense out;
  for (const auto& [ea, ca] : a) {
    for (const auto& [eb, cb] : b) {
      std::vector<unsigned> e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out[e] += ca * cb;
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

/// Schoolbook expansion of prod_i factors[i]^powers[i]; each factor is
/// given as exponent vector -> coefficient.
inline MultiPoly expand_product(std::size_t nvars, const std::vector<Dense>& factors,
                                const std::vector<unsigned>& powers) {
  Dense acc{{std::vector<unsigned>(nvars, 0), Rational(1)}};
  for (std::size_t f = 0; f < factors.size(); ++f) {
    for (unsigned k = 0; k < powers[f]; ++k) acc = dense_mul(acc, factors[f]);
  }
  MultiPoly out(nvars);
  for (const auto& [e, c] : acc) out.add_term(Monomial(e), c);
  return out;
}

/// 1 + sum_j w_j x_j as a dense factor.
inline Dense affine(std::size_t nvars, const std::vector<std::pair<std::size_t, Rational>>& linear,
                    const Rational& constant = Rational(1)) {
  Dense d;
  if (constant != 0) d[std::vector<unsigned>(nvars, 0)] = constant;
  for (const auto& [var, w] : linear) {
    std::vector<unsigned> e(nvars, 0);
    e[var] = 1;
    d[e] += w;
  }
  return d;
}

/// Laplace expansion along the first row.
inline MultiPoly cofactor_determinant(const PolyMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 1) return m.at(0, 0);
  MultiPoly det(m.nvars());
  for (std::size_t col = 0; col < n; ++col) {
    if (m.at(0, col).is_zero()) continue;
    PolyMatrix minor(n - 1, n - 1, m.nvars());
    for (std::size_t i = 1; i < n; ++i) {
      for (std::size_t j = 0, jj = 0; j < n; ++j) {
        if (j == col) continue;
        minor.set(i - 1, jj++, m.at(i, j));
      }
    }
    MultiPoly term = m.at(0, col) * cofactor_determinant(minor);
    if (col % 2 == 0) {
      det += term;
    } else {
      det -= term;
    }
  }
  return det;
}

/// Random polynomial with small rational coefficients and total degree <= max_degree.
inline MultiPoly random_poly(std::mt19937_64& rng, std::size_t nvars, unsigned max_degree, std::size_t max_terms) {
  std::uniform_int_distribution<int> num(-5, 5);
  std::uniform_int_distribution<int> den(1, 4);
  std::uniform_int_distribution<std::size_t> count(1, max_terms);
  std::uniform_int_distribution<unsigned> deg(0, max_degree);
  std::uniform_int_distribution<std::size_t> var(0, nvars - 1);
  MultiPoly p(nvars);
  const std::size_t terms = count(rng);
  for (std::size_t t = 0; t < terms; ++t) {
    std::vector<unsigned> e(nvars, 0);
    const unsigned d = deg(rng);
    for (unsigned k = 0; k < d; ++k) ++e[var(rng)];
    Rational c(num(rng), den(rng));
    c.canonicalize();
    p.add_term(Monomial(e), c);
  }
  return p;
}

inline Rational random_rational(std::mt19937_64& rng, int range = 9) {
  std::uniform_int_distribution<int> num(-range, range);
  std::uniform_int_distribution<int> den(1, range);
  Rational r(num(rng), den(rng));
  r.canonicalize();
  return r;
}

}  // namespace pke::oracle
