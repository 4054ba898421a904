#include "pke/algebra.hpp"

#include <bit>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pke {
namespace {

MultiPoly homogeneous_part(const MultiPoly& p, unsigned degree) {
  MultiPoly out(p.nvars());
  for (const auto& [m, c] : p.terms()) {
    if (m.total_degree() == degree) out.add_term(m, c);
  }
  return out;
}

// Root of a polynomial with a non-zero constant term, one homogeneous
// degree at a time: [R^q]_d = q c^(q-1) R_d + (terms of R below degree d).
MultiPoly root_from_constant(const MultiPoly& p, unsigned q) {
  const Rational c = p.constant_term();
  auto r0 = exact_root(c, q);
  if (!r0) throw NoExactRoot("constant term " + to_string(c) + " has no rational root of order " + std::to_string(q));
  const int deg = p.degree();
  if (deg % static_cast<int>(q) != 0) {
    throw NoExactRoot("degree " + std::to_string(deg) + " is not a multiple of " + std::to_string(q));
  }
  const unsigned root_degree = static_cast<unsigned>(deg) / q;
  const Rational scale = Rational(1) / (Rational(q) * pow(*r0, q - 1));

  MultiPoly root = MultiPoly::constant(p.nvars(), *r0);
  for (unsigned d = 1; d <= root_degree; ++d) {
    MultiPoly residual = homogeneous_part(p, d) - homogeneous_part(root.pow(q), d);
    root += residual * scale;
  }
  if (root.pow(q) != p) throw NoExactRoot("polynomial is not an exact power of order " + std::to_string(q));
  return root;
}

// Root of a polynomial without constant term, matched from the leading
// term down: LT(p - R^q) = q LT(R)^(q-1) * (next term of R).
MultiPoly root_from_leading_term(const MultiPoly& p, unsigned q) {
  const auto& [lead_m, lead_c] = p.leading_term();
  std::vector<unsigned> exps(lead_m.exponents().begin(), lead_m.exponents().end());
  for (auto& e : exps) {
    if (e % q != 0) throw NoExactRoot("leading monomial is not a power of order " + std::to_string(q));
    e /= q;
  }
  auto c = exact_root(lead_c, q);
  if (!c) throw NoExactRoot("leading coefficient has no rational root");
  Monomial root_lead(std::move(exps));
  MultiPoly root = MultiPoly::term(root_lead, *c);

  const MultiPoly lead_power = MultiPoly::term(root_lead, *c).pow(q - 1) * Rational(q);
  const auto& [lp_m, lp_c] = lead_power.leading_term();
  Monomial last = root_lead;
  for (;;) {
    MultiPoly residual = p - root.pow(q);
    if (residual.is_zero()) break;
    const auto& [rm, rc] = residual.leading_term();
    if (!lp_m.divides(rm)) throw NoExactRoot("residual term is not reachable");
    Monomial next = rm / lp_m;
    if (grlex_compare(next, last) >= 0) throw NoExactRoot("root expansion does not terminate");
    root.add_term(next, rc / lp_c);
    last = next;
  }
  if (q % 2 == 0 && root.leading_term().second < 0) root = -root;
  return root;
}

}  // namespace

MultiPoly partial_derivative(const MultiPoly& p, std::size_t var) {
  if (var >= p.nvars()) {
    throw std::invalid_argument("partial_derivative: variable index " + std::to_string(var) +
                                " out of range for " + std::to_string(p.nvars()) + " variables");
  }
  MultiPoly out(p.nvars());
  for (const auto& [m, c] : p.terms()) {
    const unsigned e = m[var];
    if (e == 0) continue;
    std::vector<unsigned> exps(m.exponents().begin(), m.exponents().end());
    exps[var] -= 1;
    out.add_term(Monomial(std::move(exps)), c * e);
  }
  return out;
}

MultiPoly determinant(const PolyMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("determinant: matrix is not square");
  const std::size_t n = m.rows();
  const std::size_t nv = m.nvars();

  std::vector<std::vector<MultiPoly>> a(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i].push_back(m.at(i, j));
  }

  int sign = 1;
  MultiPoly previous = MultiPoly::constant(nv, Rational(1));
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k].is_zero()) {
      std::size_t pivot = k + 1;
      while (pivot < n && a[pivot][k].is_zero()) ++pivot;
      if (pivot == n) return MultiPoly(nv);
      std::swap(a[k], a[pivot]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = exact_divide(a[k][k] * a[i][j] - a[i][k] * a[k][j], previous);
      }
    }
    previous = a[k][k];
  }
  MultiPoly det = a[n - 1][n - 1];
  if (sign < 0) det = -det;
  return det;
}

MultiPoly determinant_by_minors(const PolyMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("determinant: matrix is not square");
  const std::size_t n = m.rows();
  if (n > 8) throw std::invalid_argument("determinant_by_minors: matrix larger than 8x8");
  const std::size_t nv = m.nvars();
  if (n == 0) return MultiPoly::constant(nv, Rational(1));

  // minors[S] = det of the last |S| rows restricted to the columns in S.
  std::vector<MultiPoly> minors(std::size_t{1} << n, MultiPoly(nv));
  minors[0] = MultiPoly::constant(nv, Rational(1));
  for (std::size_t mask = 1; mask < minors.size(); ++mask) {
    const std::size_t row = n - static_cast<std::size_t>(std::popcount(mask));
    MultiPoly acc(nv);
    int sign = 1;
    for (std::size_t col = 0; col < n; ++col) {
      if (!(mask & (std::size_t{1} << col))) continue;
      const MultiPoly& entry = m.at(row, col);
      const MultiPoly& minor = minors[mask & ~(std::size_t{1} << col)];
      if (!entry.is_zero() && !minor.is_zero()) {
        if (sign > 0) {
          acc += entry * minor;
        } else {
          acc -= entry * minor;
        }
      }
      sign = -sign;
    }
    minors[mask] = std::move(acc);
  }
  return minors.back();
}

MultiPoly exact_divide(const MultiPoly& a, const MultiPoly& b) {
  if (b.is_zero()) throw std::invalid_argument("exact_divide: division by the zero polynomial");
  if (a.nvars() != b.nvars()) throw std::invalid_argument("exact_divide: nvars mismatch");
  MultiPoly quotient(a.nvars());
  if (a.is_zero()) return quotient;

  const auto& [lead_m, lead_c] = b.leading_term();
  MultiPoly remainder = a;
  while (!remainder.is_zero()) {
    const auto& [rm, rc] = remainder.leading_term();
    if (!lead_m.divides(rm)) throw NotDivisible("leading term of the remainder is not divisible by the divisor");
    MultiPoly t = MultiPoly::term(rm / lead_m, rc / lead_c);
    remainder -= t * b;
    quotient += t;
  }
  return quotient;
}

MultiPoly scale_vars(const MultiPoly& p, std::span<const Rational> factors) {
  if (factors.size() != p.nvars()) throw std::invalid_argument("scale_vars: need one factor per variable");
  for (const auto& f : factors) {
    if (f == 0) throw std::invalid_argument("scale_vars: zero scaling factor");
  }
  MultiPoly out(p.nvars());
  for (const auto& [m, c] : p.terms()) {
    Rational coeff = c;
    for (std::size_t i = 0; i < m.nvars(); ++i) {
      if (m[i] != 0) coeff *= pow(factors[i], m[i]);
    }
    out.add_term(m, coeff);
  }
  return out;
}

MultiPoly nth_root(const MultiPoly& p, unsigned q) {
  if (q == 0) throw std::invalid_argument("nth_root: q must be positive");
  if (q == 1 || p.is_zero()) return p;
  if (p.constant_term() != 0) return root_from_constant(p, q);
  return root_from_leading_term(p, q);
}

MultiPoly substitute(const MultiPoly& p, std::span<const MultiPoly> images) {
  if (images.size() != p.nvars()) throw std::invalid_argument("substitute: need one image per variable");
  if (images.empty()) throw std::invalid_argument("substitute: no images");
  const std::size_t target = images.front().nvars();
  for (const auto& img : images) {
    if (img.nvars() != target) throw std::invalid_argument("substitute: images disagree on nvars");
  }
  // Cache powers of each image; exponents are small for every use here.
  std::vector<std::vector<MultiPoly>> powers(images.size());
  auto power_of = [&](std::size_t var, unsigned e) -> const MultiPoly& {
    auto& cache = powers[var];
    if (cache.empty()) cache.push_back(MultiPoly::constant(target, Rational(1)));
    while (cache.size() <= e) cache.push_back(cache.back() * images[var]);
    return cache[e];
  };
  MultiPoly out(target);
  for (const auto& [m, c] : p.terms()) {
    MultiPoly t = MultiPoly::constant(target, c);
    for (std::size_t i = 0; i < m.nvars(); ++i) {
      if (m[i] != 0) t *= power_of(i, m[i]);
    }
    out += t;
  }
  return out;
}

MultiPoly restrict_to_axis(const MultiPoly& p, std::size_t var) {
  if (var >= p.nvars()) throw std::invalid_argument("restrict_to_axis: variable index out of range");
  MultiPoly out(1);
  for (const auto& [m, c] : p.terms()) {
    if (m.total_degree() == m[var]) out.add_term(Monomial{m[var]}, c);
  }
  return out;
}

MultiPoly lift_univariate(const MultiPoly& p, std::size_t nvars, std::size_t var) {
  if (p.nvars() != 1) throw std::invalid_argument("lift_univariate: input is not univariate");
  if (var >= nvars) throw std::invalid_argument("lift_univariate: variable index out of range");
  MultiPoly out(nvars);
  for (const auto& [m, c] : p.terms()) out.add_term(Monomial::variable(nvars, var, m[0]), c);
  return out;
}

MultiPoly coefficient_in(const MultiPoly& p, std::size_t var, unsigned power) {
  if (var >= p.nvars()) throw std::invalid_argument("coefficient_in: variable index out of range");
  MultiPoly out(p.nvars());
  for (const auto& [m, c] : p.terms()) {
    if (m[var] != power) continue;
    std::vector<unsigned> exps(m.exponents().begin(), m.exponents().end());
    exps[var] = 0;
    out.add_term(Monomial(std::move(exps)), c);
  }
  return out;
}

MultiPoly binomial_power(int epsilon, const Rational& r, unsigned k) {
  if (r == 0) throw std::invalid_argument("binomial_power: r must be non-zero");
  if (epsilon != 1 && epsilon != -1) throw std::invalid_argument("binomial_power: epsilon must be +-1");
  MultiPoly base = MultiPoly::constant(1, Rational(1));
  base.add_term(Monomial{1}, Rational(1) / r);
  return base.pow(k) * Rational(epsilon);
}

BinomialProfile binomial_profile(const MultiPoly& p) {
  if (p.nvars() != 1) throw std::invalid_argument("binomial_profile: polynomial is not univariate");
  const Rational c0 = p.constant_term();
  if (c0 != 1 && c0 != -1) throw std::invalid_argument("binomial_profile: constant term must be +-1");
  const int epsilon = c0 > 0 ? 1 : -1;
  const int k = p.degree();
  if (k < 1) throw NotBinomialPower("constant polynomial has no positive power profile");
  const Rational a1 = p.coefficient(Monomial{1});
  if (a1 == 0) throw NotBinomialPower("vanishing linear coefficient: " + to_string(p));
  Rational r = Rational(epsilon * k) / a1;
  if (binomial_power(epsilon, r, static_cast<unsigned>(k)) != p) {
    throw NotBinomialPower("not of the form eps*(1+t/r)^k: " + to_string(p));
  }
  return {epsilon, r, static_cast<unsigned>(k)};
}

}  // namespace pke
