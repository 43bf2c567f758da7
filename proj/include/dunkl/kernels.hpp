#pragma once

// Heat and Poisson kernels, radial profiles and their dilations
//   phi_t(x) = t^{-(2 gamma + d)} phi(x / t).

#include <functional>
#include <limits>
#include <span>
#include <string>

#include "dunkl/grid.hpp"

namespace dunkl {

/// q_k^t(x) = (2t)^{-(gamma + d/2)} exp(-|x|^2 / 4t).
double heat_kernel_value(double t, const Multiplicity& kappa, std::span<const double> x);
GridFunction heat_kernel(double t, const GridPtr& grid);

/// tau_x(q_k^t)(y) = (2t)^{-(gamma + d/2)} e^{-(|x|^2 + |y|^2)/4t} E_k(x/sqrt(2t), -y/sqrt(2t)).
double translated_heat_kernel(double t, std::span<const double> x, std::span<const double> y,
                              const Multiplicity& kappa);

/// a_k = c_k 2^{gamma + d/2} Gamma(gamma + (d+1)/2) / sqrt(pi).
double poisson_constant(const Multiplicity& kappa);
/// P_k^t(x) = a_k t / (t^2 + |x|^2)^{gamma + (d+1)/2}.
double poisson_kernel_value(double t, const Multiplicity& kappa, std::span<const double> x);
GridFunction poisson_kernel(double t, const GridPtr& grid);

/// F_k(chi_{B_r})(xi) = c_k mu_k(B_r) j_{gamma + d/2}(r |xi|).
double ball_indicator_spectrum(const Multiplicity& kappa, double r, std::span<const double> xi);
/// F_k(chi_{Q_r})(xi) = prod_j c_{k_j} mu_{k_j}([-r, r]) j_{k_j + 1/2}(r xi_j).
double cube_indicator_spectrum(const Multiplicity& kappa, double r, std::span<const double> xi);

/// phi(x) = profile(|x|). fourier, when set, is F_k(phi) as a function of |xi|.
struct RadialProfile {
  std::string name;
  std::function<double(double)> profile;
  std::function<double(double)> derivative;
  std::function<double(double)> fourier;
  /// int_0^inf r^{2 gamma + d} |profile'(r)| dr; NaN until computed.
  double admissible_moment = std::numeric_limits<double>::quiet_NaN();
};

/// e^{-r^2/2}; its transform is e^{-rho^2/2}.
RadialProfile gaussian_profile(const Multiplicity& kappa);
/// P_k^1 profile; its transform is c_k e^{-rho}.
RadialProfile poisson_profile(const Multiplicity& kappa);

/// phi_t; t = 1 returns the profile unchanged.
RadialProfile dilate(const RadialProfile& phi, const Multiplicity& kappa, double t);

/// Sample phi on a grid.
GridFunction sample_profile(const RadialProfile& phi, const GridPtr& grid);

/// Raised when the admissibility moment diverges or exceeds the ceiling.
class InadmissibleProfile : public DomainError {
 public:
  using DomainError::DomainError;
};

/// int_0^inf r^{2 gamma + d} |phi'(r)| dr by double-exponential quadrature.
double admissibility_moment(const RadialProfile& phi, const Multiplicity& kappa, double ceiling = 1e12);

}  // namespace dunkl
