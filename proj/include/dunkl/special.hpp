#pragma once

// Normalized Bessel functions and the Z_2^d Dunkl kernel.

#include <complex>
#include <span>

#include "dunkl/measure.hpp"
#include "dunkl/quadrature.hpp"

namespace dunkl {

using cplx = std::complex<double>;

/// j_alpha(z) = Gamma(alpha + 1) (z / 2)^{-alpha} J_alpha(z), extended by its
/// even power series at z = 0. Requires alpha >= -1/2.
///
/// Real and purely imaginary arguments go through Boost's J/I evaluations
/// once |z| > 2; other complex arguments use the power series, which is exact
/// in exact arithmetic but loses digits to cancellation for large |z| near
/// the real axis.
cplx normalized_bessel(double alpha, cplx z);
double normalized_bessel(double alpha, double x);

/// e^{-|s|} j_alpha(i s) for real s; stays finite for any s.
double normalized_bessel_i_scaled(double alpha, double s);

/// Rank-one kernel with imaginary first slot, E_k(i x, y).
///   E_k(ix, y) = j_{k-1/2}(xy) + i xy/(2k+1) j_{k+1/2}(xy),   E_0(ix, y) = e^{ixy}.
cplx dunkl_kernel_1d(double kappa, double x, double y);

/// Same value from the intertwining integral int e^{ixyt} Phi_k(t) dt.
cplx dunkl_kernel_1d_quadrature(const JacobiRule& rule, double x, double y);

/// e^{-|ab|} E_k(a, b) for real a, b (the kernel grows like e^{|ab|}).
double dunkl_kernel_1d_real_scaled(double kappa, double a, double b);

/// E_k(ix, y) = prod_j E_{k_j}(i x_j, y_j).
cplx dunkl_kernel(const Multiplicity& kappa, std::span<const double> x, std::span<const double> y);

/// log E_k(a, b) for real points; E_k(a, b) > 0 there.
double dunkl_kernel_real_log(const Multiplicity& kappa, std::span<const double> a,
                             std::span<const double> b);

}  // namespace dunkl
