#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <span>
#include <vector>

#include "pke/errors.hpp"
#include "pke/multipoly.hpp"
#include "pke/poly_matrix.hpp"
#include "pke/rational.hpp"

namespace pke {

// The operators below act on polynomials in the toric variables x_1..x_n;
// the dimension n is the polynomial's variable count.

/// Outcome of checking LHS(P) == sign * P^n.
struct MAResult {
  bool is_solution = false;
  int sign = 0;        ///< +1 or -1 when is_solution, 0 otherwise
  MultiPoly witness;   ///< the computed LHS (zero when it is not a polynomial)
};

struct AxisProfile {
  std::size_t axis = 0;
  int epsilon = 1;
  Rational r;
  unsigned k = 0;
  /// Sign s in q(t) = s * eps^(n-2) * (r/k) * (1 + t/r)^(k(n-2)+2).
  int q_sign = 1;
};

/// Axis data of a two-variable solution: P(x1, 0) = P0 and dP/dx2(x1, 0) = P1,
/// both univariate.
struct CauchyData {
  MultiPoly p0{1};
  MultiPoly p1{1};
  int epsilon = 1;
  int sigma = 1;
  Rational r{1};
  unsigned k = 2;

  /// P0 = eps (1 + x/r)^k, P1 = sigma (r/k) (1 + x/r)^2.
  static CauchyData family(int epsilon, int sigma, const Rational& r, unsigned k);
  /// Throws std::invalid_argument unless (P0, P1) equals the family data.
  void validate() const;
};

/// 4 lambda / c = s / q in lowest terms.
struct ExponentRatio {
  unsigned long s = 1;
  unsigned long q = 1;

  Rational value() const { return Rational(s, q); }
  friend bool operator==(const ExponentRatio&, const ExponentRatio&) = default;
};

// ------------------------------------------------------------- flat target

/// det[(d^2 D0/dx_i dx_j) x_i + (dD0/dx_j) delta_ij].
MultiPoly ma_lhs_flat(const MultiPoly& d0);

struct FlatClassification {
  enum class Verdict { Linear, NotSolution };
  Verdict verdict = Verdict::NotSolution;
  std::vector<Rational> coefficients;  ///< linear coefficients k_i when Linear
  Rational product{0};                 ///< prod k_i when Linear
  MultiPoly lhs;

  bool linear() const { return verdict == Verdict::Linear; }
};

/// Linear iff ma_lhs_flat(D0) == +-1. An accepted D0 must be affine with
/// prod k_i = +-1; a non-affine acceptance raises std::logic_error.
FlatClassification classify_flat(const MultiPoly& d0);

// --------------------------------------------------------- log-type target

/// Matrix [(Q Q_ab - Q_a Q_b) x_a + Q Q_a delta_ab].
PolyMatrix log_ma_matrix(const MultiPoly& q);

/// det(log_ma_matrix(Q)) / Q^(n-1). The quotient is always exact, so it is
/// evaluated directly as one (n+1) x (n+1) bordered determinant.
MultiPoly ma_lhs_log(const MultiPoly& q);

/// Checks ma_lhs_log(P) == eps * P^n. Solutions are normalized by P(0) = +-1,
/// but any P is evaluated; the zero polynomial is never a solution.
MAResult verify_ma_star(const MultiPoly& p);

/// Finds a rational t with ma_lhs_log(Q) == +-Q^t and returns
/// 4 lambda / c = n + 1 - t, or nullopt if no such t exists or the ratio
/// is not positive. Requires Q(0) = 1.
std::optional<ExponentRatio> exponent_scan(const MultiPoly& q);

/// Q(x) = R(x/q)^q, then P = R(x/s)^s. Throws NoExactRoot.
MultiPoly reduce_power(const MultiPoly& q, const ExponentRatio& ratio);

/// Restricts P to `axis`, recovers (eps, r, k) and checks the companion
/// product of the other partial derivatives on that axis. Throws
/// ProfileMismatch when either check fails.
AxisProfile axis_profile_check(const MultiPoly& p, std::size_t axis);

// ------------------------------------------------------ two-variable case

struct Continuation {
  MultiPoly polynomial{2};
  /// P = sum_h coefficients[h](x1) x2^h, each entry univariate.
  std::vector<MultiPoly> coefficients;
  int sign = 0;
};

/// Reconstructs P order by order in x2 from its Cauchy data. At order h the
/// x2^h coefficient of det(M) - sign P^3 is linear in P_{h+1} with
/// coefficient (h+1)^2 A P0, A = (P0 P0'' - P0'^2) x1 + P0 P0'. Throws
/// Inconsistent when a division fails, the series does not terminate within
/// `degree_bound` orders, or the result does not solve the equation.
Continuation taylor_continue_n2(const CauchyData& cd, unsigned degree_bound);

/// Powers k <= k_max for which some (eps, sigma, r in grid) Cauchy family
/// continues to a polynomial solution.
std::set<unsigned> feasible_k_scan_n2(unsigned k_max, std::span<const Rational> r_grid);

/// Solutions eps (1 + x/r)^k of the one-variable equation over the grid,
/// sorted canonically.
std::vector<MultiPoly> classify_n1(unsigned k_max, std::span<const Rational> r_grid);

/// All two-variable solutions reachable from the Cauchy families over the
/// grid, exactly re-verified, distinct and sorted canonically.
std::vector<MultiPoly> search_n2(std::span<const Rational> r_grid, unsigned degree_bound);

/// k_max used by search_n2 for the feasibility pass.
inline constexpr unsigned kSearchKMax = 6;

}  // namespace pke
