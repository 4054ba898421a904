#include "pke/geometry.hpp"

#include <array>
#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

#include "pke/algebra.hpp"
#include "pke/errors.hpp"

namespace pke {
namespace {

// First-derivative weights of the fourth-order central stencil at offsets
// -2h, -h, +h, +2h; the mixed second derivative uses their outer product.
constexpr std::array<int, 4> kOffsets{-2, -1, 1, 2};
constexpr std::array<double, 4> kWeights{1.0, -8.0, 8.0, -1.0};

void check_point(const EvalPoint& p, std::size_t n) {
  if (p.xi.size() != n || p.eta.size() != n) {
    throw std::invalid_argument("evaluation point has the wrong dimension");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!std::isfinite(p.xi[i]) || !std::isfinite(p.eta[i])) {
      throw std::invalid_argument("evaluation point has non-finite coordinates");
    }
  }
}

}  // namespace

// ----------------------------------------------------------- ToricPotential

ToricPotential ToricPotential::polynomial(MultiPoly p) {
  if (p.constant_term() != 0) throw std::invalid_argument("polynomial potential must vanish at the origin");
  return ToricPotential(PotentialKind::Poly, std::move(p), Rational(1));
}

ToricPotential ToricPotential::logarithmic(MultiPoly p, Rational k) {
  const Rational c = p.constant_term();
  if (c != 1 && c != -1) throw std::invalid_argument("log potential needs P(0) = +-1");
  if (k == 0) throw std::invalid_argument("log potential exponent must be non-zero");
  return ToricPotential(PotentialKind::Log, std::move(p), std::move(k));
}

MultiPoly lift_to_null(const MultiPoly& p) {
  const std::size_t n = p.nvars();
  std::vector<MultiPoly> images;
  images.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    images.push_back(MultiPoly::variable(2 * n, i) * MultiPoly::variable(2 * n, n + i));
  }
  return substitute(p, images);
}

// ---------------------------------------------------------- MetricEvaluator

MetricEvaluator::MetricEvaluator(const ToricPotential& potential)
    : n_(potential.nvars()), kind_(potential.kind()), k_(potential.k().get_d()) {
  const MultiPoly lifted = lift_to_null(potential.P());
  lifted_ = NumericPoly(lifted);
  std::vector<MultiPoly> dxi;
  for (std::size_t i = 0; i < n_; ++i) {
    dxi.push_back(partial_derivative(lifted, i));
    d_xi_.emplace_back(dxi.back());
    d_eta_.emplace_back(partial_derivative(lifted, n_ + i));
  }
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) d_xi_eta_.emplace_back(partial_derivative(dxi[i], n_ + j));
  }
}

std::vector<double> MetricEvaluator::flatten(const EvalPoint& p) const {
  check_point(p, n_);
  std::vector<double> z(p.xi);
  z.insert(z.end(), p.eta.begin(), p.eta.end());
  return z;
}

double MetricEvaluator::checked_value(std::span<const double> z) const {
  const double value = lifted_(z);
  if (kind_ == PotentialKind::Log && std::abs(value) < kDomainTolerance) {
    throw DomainError("P vanishes at the evaluation point");
  }
  return value;
}

double MetricEvaluator::potential(const EvalPoint& p) const {
  const auto z = flatten(p);
  const double value = checked_value(z);
  return kind_ == PotentialKind::Poly ? value : k_ * std::log(std::abs(value));
}

Eigen::MatrixXd MetricEvaluator::metric(const EvalPoint& p) const {
  const auto z = flatten(p);
  Eigen::MatrixXd g(n_, n_);
  if (kind_ == PotentialKind::Poly) {
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) g(i, j) = d_xi_eta_[i * n_ + j](z);
    }
    return g;
  }
  // d^2 log P = (P P_{xi eta} - P_xi P_eta) / P^2
  const double value = checked_value(z);
  std::vector<double> dxi(n_);
  std::vector<double> deta(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    dxi[i] = d_xi_[i](z);
    deta[i] = d_eta_[i](z);
  }
  const double inv_sq = 1.0 / (value * value);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      g(i, j) = k_ * (value * d_xi_eta_[i * n_ + j](z) - dxi[i] * deta[j]) * inv_sq;
    }
  }
  return g;
}

// ---------------------------------------------------------------- operations

PolyMatrix toric_hessian_matrix(const MultiPoly& d0) {
  const std::size_t n = d0.nvars();
  PolyMatrix m(n, n, n);
  std::vector<MultiPoly> first;
  for (std::size_t j = 0; j < n; ++j) first.push_back(partial_derivative(d0, j));
  for (std::size_t i = 0; i < n; ++i) {
    const MultiPoly xi = MultiPoly::variable(n, i);
    for (std::size_t j = 0; j < n; ++j) {
      MultiPoly entry = partial_derivative(first[i], j) * xi;
      if (i == j) entry += first[j];
      m.set(i, j, std::move(entry));
    }
  }
  return m;
}

MetricSample eval_metric(const ToricPotential& potential, const EvalPoint& point) {
  MetricEvaluator evaluator(potential);
  return {evaluator.metric(point), point};
}

Eigen::MatrixXd ricci_numeric(const ToricPotential& potential, const EvalPoint& point, double step) {
  return ricci_numeric(MetricEvaluator(potential), point, step);
}

Eigen::MatrixXd ricci_numeric(const MetricEvaluator& evaluator, const EvalPoint& point, double step) {
  if (!(step > 0.0)) throw std::invalid_argument("finite-difference step must be positive");
  const std::size_t n = evaluator.nvars();
  const double center_det = evaluator.metric(point).determinant();
  if (std::abs(center_det) < kDomainTolerance) throw DomainError("det g vanishes at the evaluation point");
  const bool positive = center_det > 0;

  auto log_abs_det = [&](const EvalPoint& p) {
    const double det = evaluator.metric(p).determinant();
    if (std::abs(det) < kDomainTolerance || (det > 0) != positive) {
      throw DomainError("det g vanishes or changes sign on the finite-difference stencil");
    }
    return std::log(std::abs(det));
  };

  Eigen::MatrixXd ricci(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      double sum = 0.0;
      for (std::size_t a = 0; a < kOffsets.size(); ++a) {
        for (std::size_t b = 0; b < kOffsets.size(); ++b) {
          EvalPoint shifted = point;
          shifted.xi[i] += kOffsets[a] * step;
          shifted.eta[j] += kOffsets[b] * step;
          sum += kWeights[a] * kWeights[b] * log_abs_det(shifted);
        }
      }
      ricci(i, j) = -sum / (144.0 * step * step);
    }
  }
  return ricci;
}

EinsteinFit einstein_fit(const ToricPotential& potential, std::span<const EvalPoint> points, double step) {
  if (points.size() < 3) throw std::invalid_argument("einstein_fit needs at least three sample points");
  MetricEvaluator evaluator(potential);
  std::vector<Eigen::MatrixXd> metrics;
  std::vector<Eigen::MatrixXd> riccis;
  double cross = 0.0;
  double norm = 0.0;
  for (const auto& p : points) {
    metrics.push_back(evaluator.metric(p));
    riccis.push_back(ricci_numeric(evaluator, p, step));
    cross += (riccis.back().array() * metrics.back().array()).sum();
    norm += metrics.back().squaredNorm();
  }
  EinsteinFit fit;
  fit.lambda = norm > 0.0 ? cross / norm : 0.0;
  for (std::size_t s = 0; s < points.size(); ++s) {
    const double r = (riccis[s] - fit.lambda * metrics[s]).cwiseAbs().maxCoeff();
    fit.max_residual = std::max(fit.max_residual, r);
  }
  return fit;
}

double diastasis_eval(const ToricPotential& potential, std::span<const double> xi, std::span<const double> eta,
                      std::span<const double> zeta, std::span<const double> mu) {
  MetricEvaluator evaluator(potential);
  auto phi = [&](std::span<const double> a, std::span<const double> b) {
    return evaluator.potential(EvalPoint{{a.begin(), a.end()}, {b.begin(), b.end()}});
  };
  return phi(xi, eta) - phi(zeta, eta) - phi(xi, mu) + phi(zeta, mu);
}

Rational diastasis_exact(const MultiPoly& potential, std::span<const Rational> xi, std::span<const Rational> eta,
                         std::span<const Rational> zeta, std::span<const Rational> mu) {
  if (potential.nvars() % 2 != 0) throw std::invalid_argument("diastasis_exact: potential needs 2n variables");
  const std::size_t n = potential.nvars() / 2;
  if (xi.size() != n || eta.size() != n || zeta.size() != n || mu.size() != n) {
    throw std::invalid_argument("diastasis_exact: argument dimension mismatch");
  }
  auto phi = [&](std::span<const Rational> a, std::span<const Rational> b) {
    std::vector<Rational> z(a.begin(), a.end());
    z.insert(z.end(), b.begin(), b.end());
    return potential.evaluate(std::span<const Rational>(z));
  };
  return phi(xi, eta) - phi(zeta, eta) - phi(xi, mu) + phi(zeta, mu);
}

ToricPotential space_form_potential(const Rational& c, unsigned n) {
  if (n == 0) throw std::invalid_argument("space_form_potential: N must be positive");
  MultiPoly sum(n);
  for (unsigned i = 0; i < n; ++i) sum += MultiPoly::variable(n, i);
  if (c == 0) return ToricPotential::polynomial(sum * Rational(4));
  MultiPoly p = MultiPoly::constant(n, Rational(1)) + sum * Rational(2);
  return ToricPotential::logarithmic(std::move(p), Rational(8) / c);
}

std::vector<EvalPoint> sample_points(std::size_t nvars, std::size_t count, std::uint64_t seed, double radius) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coord(-radius, radius);
  std::vector<EvalPoint> points(count);
  for (auto& p : points) {
    p.xi.resize(nvars);
    p.eta.resize(nvars);
    for (auto& v : p.xi) v = coord(rng);
    for (auto& v : p.eta) v = coord(rng);
  }
  return points;
}

}  // namespace pke
