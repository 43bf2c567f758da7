#pragma once

// Gauss rules on [-1, 1] and the probability density
//   Phi_k(t) = M_k (1 + t)(1 - t^2)^{k - 1} = M_k (1 - t)^{k - 1} (1 + t)^k
// that drives the intertwining operator, the rank-one Dunkl kernel and the
// explicit translation formula.

#include <memory>
#include <span>
#include <vector>

namespace dunkl {

struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;

  std::size_t size() const { return nodes.size(); }

  template <class F>
  auto integrate(F&& f) const {
    using R = decltype(f(0.0));
    R acc{};
    for (std::size_t i = 0; i < nodes.size(); ++i) acc += weights[i] * f(nodes[i]);
    return acc;
  }
};

/// Gauss rule for the weight (1 - t)^alpha (1 + t)^beta on [-1, 1],
/// alpha, beta > -1. Weights sum to the total mass of the weight.
/// Throws NumericalError if the tridiagonal eigensolver does not converge.
QuadratureRule gauss_jacobi(double alpha, double beta, int n);
QuadratureRule gauss_legendre(int n);

/// M_k = Gamma(k + 1/2) / (Gamma(k) Gamma(1/2)); requires k > 0.
double jacobi_norm_constant(double kappa);

/// Phi_k(t) for t in (-1, 1), k > 0.
double phi_density(double kappa, double t);

/// int_{-1}^{t} Phi_k(s) ds. For k = 0 this is the point mass at t = 1.
double phi_cdf(double kappa, double t);
/// int_{t}^{1} Phi_k(s) ds, computed without cancellation near t = 1.
double phi_sf(double kappa, double t);

/// Gauss rule for Phi_k. Nodes lie strictly inside (-1, 1), weights are
/// positive and sum to one.
struct JacobiRule {
  double kappa = 0.0;
  std::vector<double> nodes;
  std::vector<double> weights;

  int order() const { return static_cast<int>(nodes.size()); }

  template <class F>
  auto integrate(F&& f) const {
    using R = decltype(f(0.0));
    R acc{};
    for (std::size_t i = 0; i < nodes.size(); ++i) acc += weights[i] * f(nodes[i]);
    return acc;
  }
};

JacobiRule build_jacobi_rule(double kappa, int order);

/// Process-wide memo of build_jacobi_rule; rules are immutable once built.
std::shared_ptr<const JacobiRule> cached_jacobi_rule(double kappa, int order);

/// Rule for integrals against Phi_k. For k = 0 the density degenerates to the
/// point mass at t = 1 and a one-node rule is returned.
QuadratureRule phi_rule(double kappa, int order);

/// Composite rule for int_{-1}^{1} g(t) Phi_k(t) dt when g is smooth between
/// the given breakpoints. Pieces that touch +-1 carry the Jacobi endpoint
/// factor in their Gauss rule; pieces that only come close to an endpoint are
/// graded geometrically towards it.
class PhiIntegrator {
 public:
  explicit PhiIntegrator(double kappa, int nodes_per_piece = 24);

  double kappa() const { return kappa_; }

  /// Quadrature nodes/weights (weights include Phi_k) for the given
  /// breakpoints; breakpoints outside (-1, 1) are ignored.
  QuadratureRule rule(std::span<const double> breakpoints) const;

  template <class F>
  auto integrate(F&& g, std::span<const double> breakpoints = {}) const {
    return rule(breakpoints).integrate(std::forward<F>(g));
  }

 private:
  void append_piece(double a, double b, QuadratureRule& out) const;

  double kappa_;
  double norm_;
  QuadratureRule legendre_;
  QuadratureRule left_;   // weight (1 + s)^k
  QuadratureRule right_;  // weight (1 - s)^{k - 1}
  QuadratureRule both_;   // weight (1 - s)^{k - 1} (1 + s)^k
};

/// Process-wide memo of PhiIntegrator instances.
std::shared_ptr<const PhiIntegrator> cached_phi_integrator(double kappa, int nodes_per_piece);

}  // namespace dunkl
