#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "pke/multipoly.hpp"
#include "pke/poly_matrix.hpp"
#include "pke/rational.hpp"

namespace pke {

enum class PotentialKind { Poly, Log };

/// Toric potential in the variables x_i = xi_i * eta_i: either Phi = P(x)
/// (flat target) or Phi = k * log|P(x)| (non-flat target).
class ToricPotential {
 public:
  /// Requires P(0) == 0 so that Phi(0, 0) = 0.
  static ToricPotential polynomial(MultiPoly p);
  /// Requires P(0) == +-1 and k != 0.
  static ToricPotential logarithmic(MultiPoly p, Rational k);

  PotentialKind kind() const noexcept { return kind_; }
  const MultiPoly& P() const noexcept { return p_; }
  /// Exponent multiplying the logarithm; 1 for polynomial potentials.
  const Rational& k() const noexcept { return k_; }
  std::size_t nvars() const noexcept { return p_.nvars(); }

  friend bool operator==(const ToricPotential&, const ToricPotential&) = default;

 private:
  ToricPotential(PotentialKind kind, MultiPoly p, Rational k)
      : kind_(kind), p_(std::move(p)), k_(std::move(k)) {}

  PotentialKind kind_;
  MultiPoly p_;
  Rational k_;
};

/// Point in null coordinates.
struct EvalPoint {
  std::vector<double> xi;
  std::vector<double> eta;
};

struct MetricSample {
  Eigen::MatrixXd g;
  EvalPoint point;
};

struct EinsteinFit {
  double lambda = 0.0;
  double max_residual = 0.0;
};

/// Minimum |P| (and |det g|) accepted at an evaluation point.
inline constexpr double kDomainTolerance = 1e-9;
inline constexpr double kDefaultStep = 1e-3;

/// Symbolic derivatives of Phi in the 2n null variables, converted once for
/// repeated numeric evaluation:
///   g_ij = d^2 Phi / d xi_i d eta_j.
class MetricEvaluator {
 public:
  explicit MetricEvaluator(const ToricPotential& potential);

  std::size_t nvars() const noexcept { return n_; }
  double potential(const EvalPoint& p) const;
  /// Throws DomainError where P vanishes.
  Eigen::MatrixXd metric(const EvalPoint& p) const;

 private:
  std::vector<double> flatten(const EvalPoint& p) const;
  double checked_value(std::span<const double> z) const;

  std::size_t n_;
  PotentialKind kind_;
  double k_;
  NumericPoly lifted_;                  // P(xi_1 eta_1, ..., xi_n eta_n)
  std::vector<NumericPoly> d_xi_;       // dP/dxi_i
  std::vector<NumericPoly> d_eta_;      // dP/deta_j
  std::vector<NumericPoly> d_xi_eta_;   // d^2P/dxi_i deta_j, row-major
};

/// n x n matrix with entries (d^2 D0/dx_i dx_j) x_i + (dD0/dx_j) delta_ij.
PolyMatrix toric_hessian_matrix(const MultiPoly& d0);

MetricSample eval_metric(const ToricPotential& potential, const EvalPoint& point);

/// Ric_ij = -d^2 log|det g| / d xi_i d eta_j by a fourth-order central
/// stencil in each direction. Throws DomainError if P or det g vanishes, or
/// det g changes sign, on the stencil.
Eigen::MatrixXd ricci_numeric(const ToricPotential& potential, const EvalPoint& point,
                              double step = kDefaultStep);
Eigen::MatrixXd ricci_numeric(const MetricEvaluator& evaluator, const EvalPoint& point,
                              double step = kDefaultStep);

/// Least-squares lambda for Ric = lambda g over every entry of every sample,
/// with the largest entrywise residual. Requires at least three points.
EinsteinFit einstein_fit(const ToricPotential& potential, std::span<const EvalPoint> points,
                         double step = kDefaultStep);

/// D(xi, eta, zeta, mu) = Phi(xi, eta) - Phi(zeta, eta) - Phi(xi, mu) + Phi(zeta, mu).
double diastasis_eval(const ToricPotential& potential, std::span<const double> xi,
                      std::span<const double> eta, std::span<const double> zeta,
                      std::span<const double> mu);

/// Exact diastasis for a polynomial potential given directly in the 2n null
/// variables (xi_1..xi_n, eta_1..eta_n); the potential need not be toric.
Rational diastasis_exact(const MultiPoly& potential, std::span<const Rational> xi,
                         std::span<const Rational> eta, std::span<const Rational> zeta,
                         std::span<const Rational> mu);

/// Toric potential rewritten in the 2n null variables (x_i -> xi_i eta_i).
MultiPoly lift_to_null(const MultiPoly& p);

/// Flat model (c == 0): 4(x_1 + ... + x_N). Otherwise (8/c) log(1 + 2(x_1 + ... + x_N)).
ToricPotential space_form_potential(const Rational& c, unsigned n);

/// Deterministic sample points with every coordinate uniform in [-radius, radius].
std::vector<EvalPoint> sample_points(std::size_t nvars, std::size_t count, std::uint64_t seed,
                                     double radius = 0.1);

}  // namespace pke
