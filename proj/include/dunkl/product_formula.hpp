#pragma once

// Triangle geometry, the kernel K_k and integration against the product
// formula measures nu_{x,y}, nu^+_{x,y} and the tensor measure upsilon_{x,y}.
//
// All nu / nu^+ integrals run in the parameterisation
//   z(t) = sqrt(x^2 + y^2 + 2xy t),  t in [-1, 1],
// where nu_{x,y} becomes
//   1/2 (1 + (x+y)/z(t)) Phi_k(t) dt  at +z(t),
//   1/2 (1 - (x+y)/z(t)) Phi_k(t) dt  at -z(t),
// so every integral is a Gauss-Jacobi sum against Phi_k.

#include <complex>
#include <functional>
#include <span>
#include <vector>

#include "dunkl/measure.hpp"

namespace dunkl {

using cplx = std::complex<double>;
using ScalarFn = std::function<cplx(double)>;
using PointFn = std::function<cplx(std::span<const double>)>;

/// sigma_{x,y,z} = (x^2 + y^2 - z^2) / (2xy), and 0 when x = 0 or y = 0.
double sigma(double x, double y, double z);
/// rho(x,y,z) = 1/2 (1 - sigma_{x,y,z} + sigma_{z,x,y} + sigma_{z,y,x}).
double rho(double x, double y, double z);
/// Heron area of the triangle with sides a, b, c; 0 outside the triangle inequality.
double triangle_area(double a, double b, double c);
/// K_k(x,y,z) for x, y, z > 0 and k > 0; 0 outside [|x - y|, x + y].
double kernel_K(double kappa, double x, double y, double z);

/// Density of nu_{x,y} with respect to dz (includes |z|^{2k}), x, y != 0.
double nu_density(double kappa, double x, double y, double z);
/// Density of nu^+_{x,y} with respect to dz, x, y != 0.
double nu_plus_density(double kappa, double x, double y, double z);

/// z(t) evaluated without cancellation.
double rosler_radius(double x, double y, double t);
/// Parameter t at which z(t) = |c|; may fall outside [-1, 1].
double rosler_parameter(double x, double y, double c);

struct NuOptions {
  /// Gauss-Jacobi order for smooth integrands.
  int order = 400;
  /// Points z where f jumps or kinks; enables the piecewise rule.
  std::vector<double> z_breakpoints;
  /// Nodes per piece for the piecewise rule.
  int nodes_per_piece = 64;
};

/// int f d nu^k_{x,y}. Point-mass branches for x = 0 or y = 0; k = 0 is the
/// classical shift (nu = delta_{x+y}).
cplx integrate_nu(double kappa, double x, double y, const ScalarFn& f, const NuOptions& opts = {});

/// Total variation ||nu^k_{x,y}|| = int max(1, |x+y| / z(t)) Phi_k(t) dt.
double nu_total_variation(double kappa, double x, double y, int order = 400);

/// |E_k(ix, lambda) E_k(iy, lambda) - int E_k(i lambda, z) d nu_{x,y}(z)|.
double product_formula_residual(double kappa, double x, double y, double lambda, int order = 400);

/// int f d nu^{k,+}_{x,y}; requires x != 0 and y != 0.
cplx integrate_nu_plus(double kappa, double x, double y, const ScalarFn& f, const NuOptions& opts = {});

/// Tensor integral against upsilon_{x,y} = nu^{k_1,+}_{x_1,y_1} x ... x nu^{k_d,+}_{x_d,y_d};
/// x and y must be regular points.
cplx integrate_upsilon(const Multiplicity& kappa, std::span<const double> x, std::span<const double> y,
                       const PointFn& f, int order = 64);

/// True when no coordinate is zero.
bool is_regular(std::span<const double> x);

}  // namespace dunkl
