#include "pke/ma_engine.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <tuple>

#include "pke/algebra.hpp"
#include "pke/geometry.hpp"
#include "pke/parallel.hpp"

namespace pke {
namespace {

void require_unit_constant(const MultiPoly& p, const char* what) {
  const Rational c = p.constant_term();
  if (c != 1 && c != -1) throw std::invalid_argument(std::string(what) + ": constant term must be +-1");
}

void sort_unique(std::vector<MultiPoly>& polys) {
  std::sort(polys.begin(), polys.end(), canonical_less);
  polys.erase(std::unique(polys.begin(), polys.end()), polys.end());
}

// P(x1, x2) = sum_h coeffs[h](x1) x2^h
MultiPoly assemble_series(const std::vector<MultiPoly>& coeffs) {
  MultiPoly out(2);
  const MultiPoly x2 = MultiPoly::variable(2, 1);
  MultiPoly x2_power = MultiPoly::constant(2, Rational(1));
  for (const auto& c : coeffs) {
    out += lift_univariate(c, 2, 0) * x2_power;
    x2_power *= x2;
  }
  return out;
}

// det(M) - sign * P^3: the two-variable equation multiplied through by P.
MultiPoly n2_residual(const MultiPoly& p, int sign) {
  return determinant(log_ma_matrix(p)) - p.pow(3) * Rational(sign);
}

struct FamilyTask {
  unsigned k;
  int epsilon;
  int sigma;
  Rational r;
};

std::vector<FamilyTask> family_tasks(unsigned k_min, unsigned k_max, std::span<const Rational> r_grid) {
  std::vector<FamilyTask> tasks;
  for (unsigned k = k_min; k <= k_max; ++k) {
    for (int eps : {1, -1}) {
      for (int sigma : {1, -1}) {
        for (const auto& r : r_grid) {
          if (r == 0) throw std::invalid_argument("r grid must not contain 0");
          tasks.push_back({k, eps, sigma, r});
        }
      }
    }
  }
  return tasks;
}

// Continuation depth used when probing feasibility: twice the axis power
// leaves room for mixed terms beyond the axis degree.
unsigned scan_bound(unsigned k) { return 2 * k; }

}  // namespace

// ------------------------------------------------------------- flat target

MultiPoly ma_lhs_flat(const MultiPoly& d0) { return determinant(toric_hessian_matrix(d0)); }

FlatClassification classify_flat(const MultiPoly& d0) {
  FlatClassification out;
  out.lhs = ma_lhs_flat(d0);
  if (d0.is_constant()) return out;  // Hessian matrix vanishes identically
  const Rational c = out.lhs.constant_term();
  if (!out.lhs.is_constant() || (c != 1 && c != -1)) return out;

  if (d0.degree() != 1) {
    throw std::logic_error("flat Monge-Ampere operator is +-1 on a non-affine potential: " + to_string(d0));
  }
  Rational product(1);
  for (std::size_t i = 0; i < d0.nvars(); ++i) {
    out.coefficients.push_back(d0.coefficient(Monomial::variable(d0.nvars(), i)));
    product *= out.coefficients.back();
  }
  if (product != c) throw std::logic_error("product of linear coefficients disagrees with the determinant");
  out.product = product;
  out.verdict = FlatClassification::Verdict::Linear;
  return out;
}

// --------------------------------------------------------- log-type target

PolyMatrix log_ma_matrix(const MultiPoly& q) {
  const std::size_t n = q.nvars();
  std::vector<MultiPoly> first;
  for (std::size_t a = 0; a < n; ++a) first.push_back(partial_derivative(q, a));
  PolyMatrix m(n, n, n);
  for (std::size_t a = 0; a < n; ++a) {
    const MultiPoly xa = MultiPoly::variable(n, a);
    for (std::size_t b = 0; b < n; ++b) {
      MultiPoly entry = (q * partial_derivative(first[a], b) - first[a] * first[b]) * xa;
      if (a == b) entry += q * first[a];
      m.set(a, b, std::move(entry));
    }
  }
  return m;
}

// det(Q H - u v^T) = Q^(n-1) (Q det H - v^T adj(H) u), and the bracket is the
// determinant of the bordered matrix [[H, u], [v^T, Q]] with
// H_ab = Q_ab x_a + Q_a delta_ab, u_a = Q_a x_a, v_b = Q_b.
MultiPoly ma_lhs_log(const MultiPoly& q) {
  const std::size_t n = q.nvars();
  const PolyMatrix h = toric_hessian_matrix(q);
  PolyMatrix bordered(n + 1, n + 1, n);
  for (std::size_t a = 0; a < n; ++a) {
    const MultiPoly qa = partial_derivative(q, a);
    for (std::size_t b = 0; b < n; ++b) bordered.set(a, b, h.at(a, b));
    bordered.set(a, n, qa * MultiPoly::variable(n, a));
    bordered.set(n, a, qa);
  }
  bordered.set(n, n, q);
  return determinant_by_minors(bordered);
}

MAResult verify_ma_star(const MultiPoly& p) {
  MAResult result;
  if (p.is_zero()) return result;
  result.witness = ma_lhs_log(p);
  const MultiPoly rhs = p.pow(static_cast<unsigned>(p.nvars()));
  if (result.witness == rhs) {
    result.sign = 1;
  } else if (result.witness == -rhs) {
    result.sign = -1;
  }
  result.is_solution = result.sign != 0;
  return result;
}

std::optional<ExponentRatio> exponent_scan(const MultiPoly& q) {
  if (q.constant_term() != 1) throw std::invalid_argument("exponent_scan: Q(0) must be 1");
  if (q.is_constant()) return std::nullopt;
  const MultiPoly lhs = ma_lhs_log(q);
  if (lhs.is_zero()) return std::nullopt;
  const Rational lead = lhs.constant_term();
  if (lead != 1 && lead != -1) return std::nullopt;

  // lhs = +-Q^t forces t = deg(lhs) / deg(Q). With t = num/den in lowest
  // terms, lhs^den = +-Q^num makes Q a den-th power by unique factorization,
  // so compare lhs with +-(Q^(1/den))^num.
  Rational t(lhs.degree(), q.degree());
  t.canonicalize();
  const unsigned num = static_cast<unsigned>(t.get_num().get_ui());
  const unsigned den = static_cast<unsigned>(t.get_den().get_ui());
  MultiPoly root(q.nvars());
  try {
    root = nth_root(q, den);
  } catch (const NoExactRoot&) {
    return std::nullopt;
  }
  if (root.constant_term() < 0) root = -root;
  MultiPoly rhs = root.pow(num);
  if (lead < 0) rhs = -rhs;
  if (lhs != rhs) return std::nullopt;

  const Rational ratio = Rational(static_cast<long>(q.nvars()) + 1) - t;
  if (ratio <= 0) return std::nullopt;
  return ExponentRatio{ratio.get_num().get_ui(), ratio.get_den().get_ui()};
}

MultiPoly reduce_power(const MultiPoly& q, const ExponentRatio& ratio) {
  if (q.constant_term() != 1) throw std::invalid_argument("reduce_power: Q(0) must be 1");
  if (ratio.s == 0 || ratio.q == 0 || std::gcd(ratio.s, ratio.q) != 1) {
    throw std::invalid_argument("reduce_power: ratio must be s/q in lowest terms with s, q > 0");
  }
  const std::size_t n = q.nvars();
  std::vector<Rational> up(n, Rational(static_cast<long>(ratio.q)));
  std::vector<Rational> down(n, Rational(1, static_cast<long>(ratio.s)));
  const MultiPoly root = nth_root(scale_vars(q, up), static_cast<unsigned>(ratio.q));
  return scale_vars(root, down).pow(static_cast<unsigned>(ratio.s));
}

AxisProfile axis_profile_check(const MultiPoly& p, std::size_t axis) {
  require_unit_constant(p, "axis_profile_check");
  const std::size_t n = p.nvars();
  if (axis >= n) throw std::invalid_argument("axis_profile_check: axis out of range");

  BinomialProfile profile;
  try {
    profile = binomial_profile(restrict_to_axis(p, axis));
  } catch (const NotBinomialPower& e) {
    throw ProfileMismatch(std::string("axis restriction: ") + e.what());
  }

  MultiPoly product = MultiPoly::constant(n, Rational(1));
  for (std::size_t j = 0; j < n; ++j) {
    if (j != axis) product *= partial_derivative(p, j);
  }
  const MultiPoly q = restrict_to_axis(product, axis);

  const long exponent = static_cast<long>(profile.k) * (static_cast<long>(n) - 2) + 2;
  if (exponent < 0) throw ProfileMismatch("companion exponent k(n-2)+2 is negative");
  // eps^(n-2) with eps = +-1 depends only on the parity of n.
  const int eps_power = (n % 2 == 1) ? profile.epsilon : 1;
  const MultiPoly expected = binomial_power(1, profile.r, static_cast<unsigned>(exponent)) *
                             (Rational(eps_power) * profile.r / profile.k);

  AxisProfile out{axis, profile.epsilon, profile.r, profile.k, 1};
  if (q == expected) return out;
  if (q == -expected) {
    out.q_sign = -1;
    return out;
  }
  throw ProfileMismatch("derivative product on the axis is " + to_string(q) + ", expected +-(" +
                        to_string(expected) + ")");
}

// ------------------------------------------------------ two-variable case

CauchyData CauchyData::family(int epsilon, int sigma, const Rational& r, unsigned k) {
  if (k == 0) throw std::invalid_argument("CauchyData: k must be positive");
  if (sigma != 1 && sigma != -1) throw std::invalid_argument("CauchyData: sigma must be +-1");
  CauchyData cd;
  cd.epsilon = epsilon;
  cd.sigma = sigma;
  cd.r = r;
  cd.k = k;
  cd.p0 = binomial_power(epsilon, r, k);
  cd.p1 = binomial_power(1, r, 2) * (Rational(sigma) * r / k);
  return cd;
}

void CauchyData::validate() const {
  const CauchyData expected = family(epsilon, sigma, r, k);
  if (p0.nvars() != 1 || p1.nvars() != 1) throw std::invalid_argument("CauchyData: P0 and P1 must be univariate");
  if (p0 != expected.p0 || p1 != expected.p1) {
    throw std::invalid_argument("CauchyData: (P0, P1) does not match the family for the given eps, sigma, r, k");
  }
}

Continuation taylor_continue_n2(const CauchyData& cd, unsigned degree_bound) {
  cd.validate();
  if (degree_bound < cd.k) throw std::invalid_argument("taylor_continue_n2: degree bound must be at least k");

  const MultiPoly& p0 = cd.p0;
  const MultiPoly d1 = partial_derivative(p0, 0);
  const MultiPoly d2 = partial_derivative(d1, 0);
  const MultiPoly x = MultiPoly::variable(1, 0);
  const MultiPoly a = (p0 * d2 - d1 * d1) * x + p0 * d1;

  // Order zero: A P1 = sign P0^2 fixes the sign of the equation.
  const MultiPoly lead = a * cd.p1;
  const MultiPoly p0_sq = p0 * p0;
  Continuation out;
  if (lead == p0_sq) {
    out.sign = 1;
  } else if (lead == -p0_sq) {
    out.sign = -1;
  } else {
    throw Inconsistent("order 0: A*P1 is not +-P0^2");
  }

  out.coefficients = {p0, cd.p1};
  const MultiPoly pivot = a * p0;
  for (unsigned h = 1;; ++h) {
    const MultiPoly current = assemble_series(out.coefficients);
    const MultiPoly residual = n2_residual(current, out.sign);
    if (residual.is_zero()) {
      out.polynomial = current;
      break;
    }
    for (unsigned lower = 0; lower < h; ++lower) {
      if (!coefficient_in(residual, 1, lower).is_zero()) {
        throw Inconsistent("residual at order " + std::to_string(lower) + " does not vanish");
      }
    }
    if (h >= degree_bound) {
      throw Inconsistent("series does not terminate within x2-degree " + std::to_string(degree_bound));
    }
    const MultiPoly t_h = restrict_to_axis(coefficient_in(residual, 1, h), 0);
    MultiPoly next(1);
    try {
      next = -exact_divide(t_h, pivot * Rational((h + 1) * (h + 1)));
    } catch (const NotDivisible&) {
      throw Inconsistent("order " + std::to_string(h) + ": coefficient of x2^" + std::to_string(h + 1) +
                         " is not a polynomial");
    }
    out.coefficients.push_back(std::move(next));
  }
  while (out.coefficients.size() > 1 && out.coefficients.back().is_zero()) out.coefficients.pop_back();

  // Independent closing check through the divided form of the equation.
  const MAResult check = verify_ma_star(out.polynomial);
  if (!check.is_solution || check.sign != out.sign) throw Inconsistent("continuation fails exact re-verification");
  return out;
}

std::set<unsigned> feasible_k_scan_n2(unsigned k_max, std::span<const Rational> r_grid) {
  const auto tasks = family_tasks(1, k_max, r_grid);
  std::vector<char> ok(tasks.size(), 0);
  parallel_for(tasks.size(), [&](std::size_t i) {
    const auto& t = tasks[i];
    try {
      taylor_continue_n2(CauchyData::family(t.epsilon, t.sigma, t.r, t.k), scan_bound(t.k));
      ok[i] = 1;
    } catch (const Inconsistent&) {
    }
  });
  std::set<unsigned> feasible;
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    if (ok[i]) feasible.insert(tasks[i].k);
  }
  return feasible;
}

std::vector<MultiPoly> classify_n1(unsigned k_max, std::span<const Rational> r_grid) {
  const auto tasks = family_tasks(1, k_max, r_grid);
  std::vector<std::optional<MultiPoly>> found(tasks.size());
  parallel_for(tasks.size(), [&](std::size_t i) {
    const auto& t = tasks[i];
    if (t.sigma != 1) return;  // sigma plays no role for one variable
    MultiPoly candidate = binomial_power(t.epsilon, t.r, t.k);
    if (verify_ma_star(candidate).is_solution) found[i] = std::move(candidate);
  });
  std::vector<MultiPoly> out;
  for (auto& f : found) {
    if (f) out.push_back(std::move(*f));
  }
  sort_unique(out);
  return out;
}

std::vector<MultiPoly> search_n2(std::span<const Rational> r_grid, unsigned degree_bound) {
  if (r_grid.empty()) return {};
  const auto feasible = feasible_k_scan_n2(kSearchKMax, r_grid);
  std::vector<FamilyTask> tasks;
  for (unsigned k : feasible) {
    auto part = family_tasks(k, k, r_grid);
    tasks.insert(tasks.end(), part.begin(), part.end());
  }
  std::vector<std::optional<MultiPoly>> found(tasks.size());
  parallel_for(tasks.size(), [&](std::size_t i) {
    const auto& t = tasks[i];
    try {
      auto c = taylor_continue_n2(CauchyData::family(t.epsilon, t.sigma, t.r, t.k), std::max(degree_bound, t.k));
      if (verify_ma_star(c.polynomial).is_solution) found[i] = std::move(c.polynomial);
    } catch (const Inconsistent&) {
    }
  });
  std::vector<MultiPoly> out;
  for (auto& f : found) {
    if (f) out.push_back(std::move(*f));
  }
  sort_unique(out);
  return out;
}

}  // namespace pke
