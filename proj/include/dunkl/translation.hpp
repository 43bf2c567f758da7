#pragma once

// Generalized translations tau_x and the Dunkl convolution
//   (f *_k g)(x) = c_k int f(y) tau_x(g)(-y) d mu_k(y),
// with F_k(tau_x f)(xi) = E_k(ix, xi) F_k f(xi) and F_k(f * g) = F_k f . F_k g.

#include <span>

#include "dunkl/grid.hpp"
#include "dunkl/product_formula.hpp"

namespace dunkl {

/// Rosler's explicit formula tau_x f(y) in rank one (k = 0 is f(x + y)).
cplx translate_1d(double kappa, const ScalarFn& f, double x, double y, const NuOptions& opts = {});

/// tau_x(chi_{[-r,r]})(y) = Phi_k{t : z(t) <= r}, closed form through the
/// incomplete beta function. Exactly 0 when |y| is not in I(x, r).
double translate_indicator_interval(double kappa, double x, double y, double r);

/// prod_j tau_{x_j}(chi_{[-r,r]})(y_j); x and y regular.
double translate_indicator_cube(const Multiplicity& kappa, std::span<const double> x, std::span<const double> y,
                                double r);

/// upsilon_{x,y}(closed ball of radius r); x and y regular. The outermost
/// axes are integrated by piecewise Gauss-Jacobi rules split where the inner
/// probability has kinks, the last axis in closed form.
double translate_indicator_ball(const Multiplicity& kappa, std::span<const double> x, std::span<const double> y,
                                double r, int nodes_per_piece = 32);

/// tau_x(chi_{[-r,r]})(y) mu_k(I(x,r)) / mu_k((-r, r)).
double indicator_bound_ratio(double kappa, double x, double y, double r);

/// F^{-1}(E_k(ix, .) F f) on f's grid.
GridFunction translate_grid(const GridFunction& f, std::span<const double> x);

/// F^{-1}(F f . F g).
GridFunction convolve(const GridFunction& f, const GridFunction& g);

/// Definition-side (f * g)(x) in rank one: c_k sum_b f(y_b) tau_x(g)(-y_b) w_b.
cplx convolve_direct_1d(const Grid1D& grid, const ScalarFn& f, const ScalarFn& g, double x,
                        const NuOptions& opts = {});

/// Spectrally mollified cube indicator F^{-1}(F chi_{Q_r} e^{-t |xi|^2}) = chi_{Q_r} * q^t.
GridFunction mollified_cube_indicator(const GridPtr& grid, double r, double t);

/// ||tau_x f||_p / ||f||_p.
double translation_norm_ratio(const GridFunction& f, std::span<const double> x, double p);

/// ||f * g||_r / (||f||_p ||g||_q).
double young_ratio(const GridFunction& f, const GridFunction& g, double p, double q, double r);

}  // namespace dunkl
