#include "pke/multipoly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace pke {

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(std::size_t nvars) : exponents_(nvars, 0) {}

Monomial::Monomial(std::vector<unsigned> exponents)
    : exponents_(std::move(exponents)),
      degree_(std::accumulate(exponents_.begin(), exponents_.end(), 0u)) {}

Monomial::Monomial(std::initializer_list<unsigned> exponents)
    : Monomial(std::vector<unsigned>(exponents)) {}

Monomial Monomial::variable(std::size_t nvars, std::size_t var, unsigned power) {
  if (var >= nvars) throw std::invalid_argument("Monomial::variable: index out of range");
  std::vector<unsigned> e(nvars, 0);
  e[var] = power;
  return Monomial(std::move(e));
}

bool Monomial::divides(const Monomial& other) const {
  if (other.nvars() != nvars()) return false;
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    if (exponents_[i] > other.exponents_[i]) return false;
  }
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial out(*this);
  for (std::size_t i = 0; i < exponents_.size(); ++i) out.exponents_[i] += other.exponents_[i];
  out.degree_ += other.degree_;
  return out;
}

Monomial Monomial::operator/(const Monomial& other) const {
  if (!other.divides(*this)) throw std::invalid_argument("Monomial division is not exact");
  Monomial out(*this);
  for (std::size_t i = 0; i < exponents_.size(); ++i) out.exponents_[i] -= other.exponents_[i];
  out.degree_ -= other.degree_;
  return out;
}

int grlex_compare(const Monomial& a, const Monomial& b) {
  if (a.total_degree() != b.total_degree()) return a.total_degree() < b.total_degree() ? -1 : 1;
  const std::size_t n = std::min(a.nvars(), b.nvars());
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  if (a.nvars() != b.nvars()) return a.nvars() < b.nvars() ? -1 : 1;
  return 0;
}

// --------------------------------------------------------------- MultiPoly

MultiPoly::MultiPoly(std::size_t nvars) : nvars_(nvars) {}

MultiPoly MultiPoly::constant(std::size_t nvars, const Rational& value) {
  MultiPoly p(nvars);
  p.add_term(Monomial(nvars), value);
  return p;
}

MultiPoly MultiPoly::variable(std::size_t nvars, std::size_t var) {
  MultiPoly p(nvars);
  p.add_term(Monomial::variable(nvars, var), Rational(1));
  return p;
}

MultiPoly MultiPoly::term(const Monomial& monomial, const Rational& coefficient) {
  MultiPoly p(monomial.nvars());
  p.add_term(monomial, coefficient);
  return p;
}

bool MultiPoly::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.total_degree() == 0);
}

int MultiPoly::degree() const noexcept {
  if (terms_.empty()) return kZeroDegree;
  return static_cast<int>(terms_.begin()->first.total_degree());
}

int MultiPoly::degree_in(std::size_t var) const {
  if (var >= nvars_) throw std::invalid_argument("degree_in: variable index out of range");
  if (terms_.empty()) return kZeroDegree;
  int best = 0;
  for (const auto& [m, c] : terms_) best = std::max(best, static_cast<int>(m[var]));
  return best;
}

bool MultiPoly::depends_on(std::size_t var) const { return degree_in(var) > 0; }

Rational MultiPoly::coefficient(const Monomial& monomial) const {
  auto it = terms_.find(monomial);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational MultiPoly::constant_term() const { return coefficient(Monomial(nvars_)); }

const MultiPoly::TermMap::value_type& MultiPoly::leading_term() const {
  if (terms_.empty()) throw std::logic_error("leading_term of the zero polynomial");
  return *terms_.begin();
}

void MultiPoly::add_term(const Monomial& monomial, const Rational& coefficient) {
  if (monomial.nvars() != nvars_) {
    throw std::invalid_argument("add_term: monomial has " + std::to_string(monomial.nvars()) +
                                " variables, polynomial has " + std::to_string(nvars_));
  }
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.try_emplace(monomial, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

void MultiPoly::check_compatible(const MultiPoly& other) const {
  if (other.nvars_ != nvars_) {
    throw std::invalid_argument("polynomials live in different variable counts (" +
                                std::to_string(nvars_) + " vs " + std::to_string(other.nvars_) + ")");
  }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& other) {
  check_compatible(other);
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& other) {
  check_compatible(other);
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  a.check_compatible(b);
  MultiPoly out(a.nvars_);
  Rational product;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      product = ca * cb;
      out.add_term(ma * mb, product);
    }
  }
  return out;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& other) {
  *this = *this * other;
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= scalar;
  return *this;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out(*this);
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

MultiPoly MultiPoly::pow(unsigned exponent) const {
  MultiPoly result = constant(nvars_, Rational(1));
  MultiPoly base = *this;
  while (exponent > 0) {
    if (exponent & 1u) result *= base;
    exponent >>= 1u;
    if (exponent > 0) base *= base;
  }
  return result;
}

Rational MultiPoly::evaluate(std::span<const Rational> point) const {
  if (point.size() != nvars_) throw std::invalid_argument("evaluate: point dimension mismatch");
  Rational total(0);
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (m[i] != 0) t *= pke::pow(point[i], m[i]);
    }
    total += t;
  }
  return total;
}

double MultiPoly::evaluate(std::span<const double> point) const { return NumericPoly(*this)(point); }

bool canonical_less(const MultiPoly& a, const MultiPoly& b) {
  if (a.nvars() != b.nvars()) return a.nvars() < b.nvars();
  auto ia = a.terms().begin();
  auto ib = b.terms().begin();
  for (; ia != a.terms().end() && ib != b.terms().end(); ++ia, ++ib) {
    int cmp = grlex_compare(ia->first, ib->first);
    if (cmp != 0) return cmp > 0;
    if (ia->second != ib->second) return ia->second < ib->second;
  }
  return ia == a.terms().end() && ib != b.terms().end();
}

std::string to_string(const MultiPoly& p, std::span<const std::string> names) {
  if (p.is_zero()) return "0";
  auto name = [&](std::size_t i) {
    return i < names.size() ? names[i] : "x" + std::to_string(i + 1);
  };
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    Rational mag = abs(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool unit = (mag == 1);
    if (!unit || m.total_degree() == 0) {
      out << mag.get_str();
      if (m.total_degree() > 0) out << "*";
    }
    bool first_var = true;
    for (std::size_t i = 0; i < m.nvars(); ++i) {
      if (m[i] == 0) continue;
      if (!first_var) out << "*";
      first_var = false;
      out << name(i);
      if (m[i] > 1) out << "^" << m[i];
    }
  }
  return out.str();
}

// -------------------------------------------------------------- NumericPoly

NumericPoly::NumericPoly(const MultiPoly& p) : nvars_(p.nvars()) {
  exponents_.reserve(p.term_count() * nvars_);
  coefficients_.reserve(p.term_count());
  for (const auto& [m, c] : p.terms()) {
    exponents_.insert(exponents_.end(), m.exponents().begin(), m.exponents().end());
    coefficients_.push_back(c.get_d());
  }
}

double NumericPoly::operator()(std::span<const double> point) const {
  if (point.size() != nvars_) throw std::invalid_argument("NumericPoly: point dimension mismatch");
  double total = 0.0;
  for (std::size_t t = 0; t < coefficients_.size(); ++t) {
    double v = coefficients_[t];
    const unsigned* e = exponents_.data() + t * nvars_;
    for (std::size_t i = 0; i < nvars_; ++i) {
      for (unsigned k = 0; k < e[i]; ++k) v *= point[i];
    }
    total += v;
  }
  return total;
}

}  // namespace pke
