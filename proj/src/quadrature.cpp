#include "dunkl/quadrature.hpp"

#include <Eigen/Eigenvalues>
#include <boost/math/special_functions/beta.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <numbers>
#include <string>

#include "dunkl/measure.hpp"

namespace dunkl {

namespace {

// Squared off-diagonal of the orthonormal Jacobi recurrence.
double jacobi_beta_sq(int k, double a, double b) {
  const double ab = a + b;
  if (k == 1) {
    return 4.0 * (1.0 + a) * (1.0 + b) / ((2.0 + ab) * (2.0 + ab) * (3.0 + ab));
  }
  const double kk = static_cast<double>(k);
  const double s = 2.0 * kk + ab;
  return 4.0 * kk * (kk + a) * (kk + b) * (kk + ab) / (s * s * (s + 1.0) * (s - 1.0));
}

double jacobi_alpha(int k, double a, double b) {
  const double ab = a + b;
  if (k == 0) return (b - a) / (ab + 2.0);
  const double s = 2.0 * k + ab;
  return (b * b - a * a) / (s * (s + 2.0));
}

}  // namespace

QuadratureRule gauss_jacobi(double alpha, double beta, int n) {
  if (!(alpha > -1.0) || !(beta > -1.0)) {
    throw DomainError("gauss_jacobi: exponents must exceed -1");
  }
  if (n < 1) throw DomainError("gauss_jacobi: order must be >= 1");

  const double log_mass = (alpha + beta + 1.0) * std::numbers::ln2 + std::lgamma(alpha + 1.0) +
                          std::lgamma(beta + 1.0) - std::lgamma(alpha + beta + 2.0);
  const double mass = std::exp(log_mass);

  QuadratureRule rule;
  if (n == 1) {
    rule.nodes = {jacobi_alpha(0, alpha, beta)};
    rule.weights = {mass};
    return rule;
  }

  Eigen::VectorXd diag(n);
  Eigen::VectorXd sub(n - 1);
  for (int k = 0; k < n; ++k) diag[k] = jacobi_alpha(k, alpha, beta);
  for (int k = 1; k < n; ++k) sub[k - 1] = std::sqrt(jacobi_beta_sq(k, alpha, beta));

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
  if (solver.info() != Eigen::Success) {
    throw NumericalError("gauss_jacobi: tridiagonal eigensolver did not converge (alpha=" +
                         std::to_string(alpha) + ", beta=" + std::to_string(beta) +
                         ", n=" + std::to_string(n) + ")");
  }

  rule.nodes.resize(static_cast<std::size_t>(n));
  rule.weights.resize(static_cast<std::size_t>(n));
  const auto& vecs = solver.eigenvectors();
  for (int i = 0; i < n; ++i) {
    rule.nodes[static_cast<std::size_t>(i)] = solver.eigenvalues()[i];
    const double v0 = vecs(0, i);
    rule.weights[static_cast<std::size_t>(i)] = mass * v0 * v0;
  }
  return rule;
}

QuadratureRule gauss_legendre(int n) { return gauss_jacobi(0.0, 0.0, n); }

double jacobi_norm_constant(double kappa) {
  if (!(kappa > 0.0)) {
    throw DomainError("jacobi_norm_constant: kappa must be > 0 (kappa = 0 is the classical branch)");
  }
  return std::exp(std::lgamma(kappa + 0.5) - std::lgamma(kappa) - 0.5 * std::log(std::numbers::pi));
}

double phi_density(double kappa, double t) {
  if (t <= -1.0 || t >= 1.0) return 0.0;
  return jacobi_norm_constant(kappa) * (1.0 + t) * std::pow(1.0 - t * t, kappa - 1.0);
}

double phi_cdf(double kappa, double t) {
  if (kappa == 0.0) return t >= 1.0 ? 1.0 : 0.0;
  if (t <= -1.0) return 0.0;
  if (t >= 1.0) return 1.0;
  const double u = 0.5 * (1.0 + t);
  if (u <= 0.5) return boost::math::ibeta(kappa + 1.0, kappa, u);
  return 1.0 - boost::math::ibetac(kappa + 1.0, kappa, u);
}

double phi_sf(double kappa, double t) {
  if (kappa == 0.0) return t < 1.0 ? 1.0 : 0.0;
  if (t <= -1.0) return 1.0;
  if (t >= 1.0) return 0.0;
  const double u = 0.5 * (1.0 + t);
  if (u >= 0.5) return boost::math::ibetac(kappa + 1.0, kappa, u);
  return 1.0 - boost::math::ibeta(kappa + 1.0, kappa, u);
}

JacobiRule build_jacobi_rule(double kappa, int order) {
  if (!(kappa > 0.0)) throw DomainError("build_jacobi_rule: kappa must be > 0");
  if (order < 1) throw DomainError("build_jacobi_rule: order must be >= 1");
  QuadratureRule base = gauss_jacobi(kappa - 1.0, kappa, order);
  // The weight M_k (1-t)^{k-1}(1+t)^k integrates to one, so the rule mass is
  // one up to rounding; renormalise to remove the lgamma round-off.
  double total = 0.0;
  for (double w : base.weights) total += w;
  JacobiRule rule;
  rule.kappa = kappa;
  rule.nodes = std::move(base.nodes);
  rule.weights = std::move(base.weights);
  for (double& w : rule.weights) w /= total;
  return rule;
}

std::shared_ptr<const JacobiRule> cached_jacobi_rule(double kappa, int order) {
  static std::mutex mutex;
  static std::map<std::pair<double, int>, std::shared_ptr<const JacobiRule>> cache;
  const std::lock_guard<std::mutex> lock(mutex);
  auto key = std::make_pair(kappa, order);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  auto rule = std::make_shared<const JacobiRule>(build_jacobi_rule(kappa, order));
  cache.emplace(key, rule);
  return rule;
}

QuadratureRule phi_rule(double kappa, int order) {
  if (kappa == 0.0) return QuadratureRule{{1.0}, {1.0}};
  auto rule = cached_jacobi_rule(kappa, order);
  return QuadratureRule{rule->nodes, rule->weights};
}

PhiIntegrator::PhiIntegrator(double kappa, int nodes_per_piece) : kappa_(kappa), norm_(0.0) {
  if (!(kappa >= 0.0)) throw DomainError("PhiIntegrator: kappa must be >= 0");
  if (kappa == 0.0) return;
  norm_ = jacobi_norm_constant(kappa);
  legendre_ = gauss_legendre(nodes_per_piece);
  left_ = gauss_jacobi(0.0, kappa, nodes_per_piece);
  right_ = gauss_jacobi(kappa - 1.0, 0.0, nodes_per_piece);
  both_ = gauss_jacobi(kappa - 1.0, kappa, nodes_per_piece);
}

QuadratureRule PhiIntegrator::rule(std::span<const double> breakpoints) const {
  if (kappa_ == 0.0) return QuadratureRule{{1.0}, {1.0}};
  std::vector<double> cuts{-1.0};
  for (double b : breakpoints) {
    if (b > -1.0 && b < 1.0) cuts.push_back(b);
  }
  cuts.push_back(1.0);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  QuadratureRule out;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) append_piece(cuts[i], cuts[i + 1], out);
  return out;
}

void PhiIntegrator::append_piece(double a, double b, QuadratureRule& out) const {
  if (!(b > a)) return;
  const bool touch_left = a <= -1.0;
  const bool touch_right = b >= 1.0;
  const double len = b - a;
  const double gap_left = touch_left ? std::numeric_limits<double>::infinity() : a + 1.0;
  const double gap_right = touch_right ? std::numeric_limits<double>::infinity() : 1.0 - b;

  // Keep every piece no longer than its distance to the endpoint it faces.
  if (len > gap_right && gap_right <= gap_left) {
    const double m = b - gap_right;
    append_piece(a, m, out);
    append_piece(m, b, out);
    return;
  }
  if (len > gap_left) {
    const double m = a + gap_left;
    append_piece(a, m, out);
    append_piece(m, b, out);
    return;
  }

  const double half = 0.5 * len;
  const double mid = 0.5 * (a + b);
  const double k = kappa_;
  const QuadratureRule* base = &legendre_;
  if (touch_left && touch_right) {
    base = &both_;
  } else if (touch_left) {
    base = &left_;
  } else if (touch_right) {
    base = &right_;
  }
  for (std::size_t i = 0; i < base->size(); ++i) {
    const double s = base->nodes[i];
    const double t = mid + half * s;
    // distances to -1 and +1 without cancellation
    const double one_plus_t = (a + 1.0) + half * (1.0 + s);
    const double one_minus_t = (1.0 - b) + half * (1.0 - s);
    double w = norm_ * half * base->weights[i];
    if (touch_left) {
      w *= std::pow(half, k);
    } else {
      w *= std::pow(one_plus_t, k);
    }
    if (touch_right) {
      w *= std::pow(half, k - 1.0);
    } else {
      w *= std::pow(one_minus_t, k - 1.0);
    }
    out.nodes.push_back(t);
    out.weights.push_back(w);
  }
}

std::shared_ptr<const PhiIntegrator> cached_phi_integrator(double kappa, int nodes) {
  static std::mutex mutex;
  static std::map<std::pair<double, int>, std::shared_ptr<const PhiIntegrator>> cache;
  const std::lock_guard<std::mutex> lock(mutex);
  auto key = std::make_pair(kappa, nodes);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  auto integrator = std::make_shared<const PhiIntegrator>(kappa, nodes);
  cache.emplace(key, integrator);
  return integrator;
}

}  // namespace dunkl
