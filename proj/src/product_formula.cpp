#include "dunkl/product_formula.hpp"

#include <algorithm>
#include <cmath>

#include "dunkl/quadrature.hpp"
#include "dunkl/special.hpp"

namespace dunkl {

namespace {

QuadratureRule t_rule(double kappa, double x, double y, const NuOptions& opts) {
  if (opts.z_breakpoints.empty()) return phi_rule(kappa, opts.order);
  std::vector<double> cuts;
  cuts.reserve(opts.z_breakpoints.size());
  for (double c : opts.z_breakpoints) cuts.push_back(rosler_parameter(x, y, c));
  return cached_phi_integrator(kappa, opts.nodes_per_piece)->rule(cuts);
}

}  // namespace

double sigma(double x, double y, double z) {
  if (x == 0.0 || y == 0.0) return 0.0;
  return (x * x + y * y - z * z) / (2.0 * x * y);
}

double rho(double x, double y, double z) {
  return 0.5 * (1.0 - sigma(x, y, z) + sigma(z, x, y) + sigma(z, y, x));
}

double triangle_area(double a, double b, double c) {
  if (!(a > 0.0) || !(b > 0.0) || !(c > 0.0)) {
    throw DomainError("triangle_area: sides must be positive");
  }
  // Kahan's stable Heron formula on sorted sides a >= b >= c.
  double s[3] = {a, b, c};
  std::sort(s, s + 3, std::greater<>());
  const double p = (s[0] + (s[1] + s[2])) * (s[2] - (s[0] - s[1])) * (s[2] + (s[0] - s[1])) *
                   (s[0] + (s[1] - s[2]));
  if (p <= 0.0) return 0.0;
  return 0.25 * std::sqrt(p);
}

double kernel_K(double kappa, double x, double y, double z) {
  if (!(kappa > 0.0)) throw DomainError("kernel_K: kappa must be > 0");
  if (!(x > 0.0) || !(y > 0.0) || !(z > 0.0)) throw DomainError("kernel_K: arguments must be positive");
  if (z < std::abs(x - y) || z > x + y) return 0.0;
  const double area = triangle_area(x, y, z);
  if (area == 0.0) return 0.0;
  return std::exp((2.0 * kappa - 2.0) * std::log(2.0 * area) - (2.0 * kappa - 1.0) * std::log(x * y * z)) *
         jacobi_norm_constant(kappa);
}

double nu_density(double kappa, double x, double y, double z) {
  if (z == 0.0) return 0.0;
  return kernel_K(kappa, std::abs(x), std::abs(y), std::abs(z)) * rho(x, y, z) * weight_h2_1d(z, kappa);
}

double nu_plus_density(double kappa, double x, double y, double z) {
  if (z == 0.0) return 0.0;
  return 0.5 * kernel_K(kappa, std::abs(x), std::abs(y), std::abs(z)) * (1.0 - sigma(x, y, z)) *
         weight_h2_1d(z, kappa);
}

double rosler_radius(double x, double y, double t) {
  const double xy = x * y;
  double z2 = xy > 0.0 ? (x - y) * (x - y) + 2.0 * xy * (1.0 + t) : (x + y) * (x + y) - 2.0 * xy * (1.0 - t);
  return std::sqrt(std::max(z2, 0.0));
}

double rosler_parameter(double x, double y, double c) {
  return (c * c - x * x - y * y) / (2.0 * x * y);
}

bool is_regular(std::span<const double> x) {
  return std::none_of(x.begin(), x.end(), [](double v) { return v == 0.0; });
}

cplx integrate_nu(double kappa, double x, double y, const ScalarFn& f, const NuOptions& opts) {
  if (!(kappa >= 0.0)) throw DomainError("integrate_nu: kappa must be >= 0");
  if (y == 0.0) return f(x);
  if (x == 0.0) return f(y);
  if (kappa == 0.0) return f(x + y);

  const double sum = x + y;
  const QuadratureRule rule = t_rule(kappa, x, y, opts);
  cplx acc = 0.0;
  for (std::size_t i = 0; i < rule.size(); ++i) {
    const double z = rosler_radius(x, y, rule.nodes[i]);
    const cplx fp = f(z);
    const cplx fm = f(-z);
    cplx value = 0.5 * (fp + fm);
    if (z > 0.0) value += 0.5 * sum * (fp - fm) / z;
    acc += rule.weights[i] * value;
  }
  return acc;
}

double nu_total_variation(double kappa, double x, double y, int order) {
  if (x == 0.0 || y == 0.0 || kappa == 0.0) return 1.0;
  const double sum = std::abs(x + y);
  const QuadratureRule rule = phi_rule(kappa, order);
  return rule.integrate([&](double t) {
    const double z = rosler_radius(x, y, t);
    return z > 0.0 ? std::max(1.0, sum / z) : 1.0;
  });
}

double product_formula_residual(double kappa, double x, double y, double lambda, int order) {
  const cplx lhs = dunkl_kernel_1d(kappa, x, lambda) * dunkl_kernel_1d(kappa, y, lambda);
  NuOptions opts;
  opts.order = order;
  const cplx rhs =
      integrate_nu(kappa, x, y, [kappa, lambda](double z) { return dunkl_kernel_1d(kappa, lambda, z); }, opts);
  return std::abs(lhs - rhs);
}

cplx integrate_nu_plus(double kappa, double x, double y, const ScalarFn& f, const NuOptions& opts) {
  if (!(kappa >= 0.0)) throw DomainError("integrate_nu_plus: kappa must be >= 0");
  if (x == 0.0 || y == 0.0) throw DomainError("integrate_nu_plus: x and y must be nonzero");
  if (kappa == 0.0) return 0.5 * (f(x + y) + f(-(x + y)));
  const QuadratureRule rule = t_rule(kappa, x, y, opts);
  cplx acc = 0.0;
  for (std::size_t i = 0; i < rule.size(); ++i) {
    const double z = rosler_radius(x, y, rule.nodes[i]);
    acc += rule.weights[i] * 0.5 * (f(z) + f(-z));
  }
  return acc;
}

cplx integrate_upsilon(const Multiplicity& kappa, std::span<const double> x, std::span<const double> y,
                       const PointFn& f, int order) {
  const int d = kappa.dim();
  if (static_cast<int>(x.size()) != d || static_cast<int>(y.size()) != d) {
    throw DomainError("integrate_upsilon: dimension mismatch");
  }
  if (!is_regular(x) || !is_regular(y)) throw DomainError("integrate_upsilon: x and y must be regular");

  // Per axis: support points +-z(t) with weight w/2 each.
  std::vector<std::vector<double>> pts(static_cast<std::size_t>(d));
  std::vector<std::vector<double>> wts(static_cast<std::size_t>(d));
  for (int j = 0; j < d; ++j) {
    const auto jj = static_cast<std::size_t>(j);
    const QuadratureRule rule = phi_rule(kappa[j], order);
    for (std::size_t i = 0; i < rule.size(); ++i) {
      const double z = rosler_radius(x[jj], y[jj], rule.nodes[i]);
      pts[jj].push_back(z);
      wts[jj].push_back(0.5 * rule.weights[i]);
      pts[jj].push_back(-z);
      wts[jj].push_back(0.5 * rule.weights[i]);
    }
  }

  std::vector<std::size_t> idx(static_cast<std::size_t>(d), 0);
  std::vector<double> point(static_cast<std::size_t>(d));
  cplx acc = 0.0;
  while (true) {
    double w = 1.0;
    for (std::size_t j = 0; j < idx.size(); ++j) {
      point[j] = pts[j][idx[j]];
      w *= wts[j][idx[j]];
    }
    acc += w * f(point);
    std::size_t j = 0;
    while (j < idx.size() && ++idx[j] == pts[j].size()) idx[j++] = 0;
    if (j == idx.size()) break;
  }
  return acc;
}

}  // namespace dunkl
