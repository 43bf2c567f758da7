#include "dunkl/kernels.hpp"

#include <boost/math/quadrature/exp_sinh.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "dunkl/special.hpp"

namespace dunkl {

namespace {

double squared_norm(std::span<const double> x) {
  double s = 0.0;
  for (double v : x) s += v * v;
  return s;
}

void check_time(double t, const char* what) {
  if (!(t > 0.0) || !std::isfinite(t)) throw DomainError(std::string(what) + ": t must be positive");
}

double poisson_exponent(const Multiplicity& kappa) { return kappa.gamma() + 0.5 * (kappa.dim() + 1); }

}  // namespace

double heat_kernel_value(double t, const Multiplicity& kappa, std::span<const double> x) {
  check_time(t, "heat_kernel");
  const double e = kappa.gamma() + 0.5 * kappa.dim();
  return std::exp(-e * std::log(2.0 * t) - squared_norm(x) / (4.0 * t));
}

GridFunction heat_kernel(double t, const GridPtr& grid) {
  const Multiplicity& k = grid->kappa();
  return GridFunction::sample(grid, [&](std::span<const double> x) { return heat_kernel_value(t, k, x); });
}

double translated_heat_kernel(double t, std::span<const double> x, std::span<const double> y,
                              const Multiplicity& kappa) {
  check_time(t, "translated_heat_kernel");
  const auto d = static_cast<std::size_t>(kappa.dim());
  if (x.size() != d || y.size() != d) throw DomainError("translated_heat_kernel: dimension mismatch");
  const double s = 1.0 / std::sqrt(2.0 * t);
  std::vector<double> a(d);
  std::vector<double> b(d);
  for (std::size_t j = 0; j < d; ++j) {
    a[j] = x[j] * s;
    b[j] = -y[j] * s;
  }
  const double e = kappa.gamma() + 0.5 * kappa.dim();
  const double log_value = -e * std::log(2.0 * t) - (squared_norm(x) + squared_norm(y)) / (4.0 * t) +
                           dunkl_kernel_real_log(kappa, a, b);
  return std::exp(log_value);
}

double poisson_constant(const Multiplicity& kappa) {
  const double g = kappa.gamma() + 0.5 * kappa.dim();
  return gaussian_constant(kappa) * std::exp(g * std::log(2.0) + std::lgamma(poisson_exponent(kappa))) /
         std::sqrt(std::numbers::pi);
}

double poisson_kernel_value(double t, const Multiplicity& kappa, std::span<const double> x) {
  check_time(t, "poisson_kernel");
  return poisson_constant(kappa) * t * std::pow(t * t + squared_norm(x), -poisson_exponent(kappa));
}

GridFunction poisson_kernel(double t, const GridPtr& grid) {
  const Multiplicity& k = grid->kappa();
  const double a = poisson_constant(k);
  const double e = poisson_exponent(k);
  return GridFunction::sample(
      grid, [&](std::span<const double> x) { return a * t * std::pow(t * t + squared_norm(x), -e); });
}

double ball_indicator_spectrum(const Multiplicity& kappa, double r, std::span<const double> xi) {
  const double alpha = kappa.gamma() + 0.5 * kappa.dim();
  return gaussian_constant(kappa) * measure_ball(r, kappa) * normalized_bessel(alpha, r * std::sqrt(squared_norm(xi)));
}

double cube_indicator_spectrum(const Multiplicity& kappa, double r, std::span<const double> xi) {
  double v = 1.0;
  for (int j = 0; j < kappa.dim(); ++j) {
    const double k = kappa[j];
    v *= gaussian_constant_1d(k) * measure_segment(-r, r, k) *
         normalized_bessel(k + 0.5, r * xi[static_cast<std::size_t>(j)]);
  }
  return v;
}

RadialProfile gaussian_profile(const Multiplicity& kappa) {
  RadialProfile p;
  p.name = "heat";
  p.profile = [](double r) { return std::exp(-0.5 * r * r); };
  p.derivative = [](double r) { return -r * std::exp(-0.5 * r * r); };
  p.fourier = [](double rho) { return std::exp(-0.5 * rho * rho); };
  p.admissible_moment = admissibility_moment(p, kappa);
  return p;
}

RadialProfile poisson_profile(const Multiplicity& kappa) {
  const double a = poisson_constant(kappa);
  const double e = poisson_exponent(kappa);
  const double c = gaussian_constant(kappa);
  RadialProfile p;
  p.name = "poisson";
  p.profile = [a, e](double r) { return a * std::pow(1.0 + r * r, -e); };
  p.derivative = [a, e](double r) { return -2.0 * e * a * r * std::pow(1.0 + r * r, -e - 1.0); };
  p.fourier = [c](double rho) { return c * std::exp(-rho); };
  p.admissible_moment = admissibility_moment(p, kappa);
  return p;
}

RadialProfile dilate(const RadialProfile& phi, const Multiplicity& kappa, double t) {
  check_time(t, "dilate");
  if (t == 1.0) return phi;
  const double h = kappa.homogeneity();
  const double scale = std::pow(t, -h);
  RadialProfile out;
  out.name = phi.name;
  auto f = phi.profile;
  out.profile = [f, scale, t](double r) { return scale * f(r / t); };
  if (phi.derivative) {
    auto df = phi.derivative;
    out.derivative = [df, scale, t](double r) { return scale / t * df(r / t); };
  }
  if (phi.fourier) {
    auto ff = phi.fourier;
    out.fourier = [ff, t](double rho) { return ff(t * rho); };
  }
  out.admissible_moment = phi.admissible_moment;
  return out;
}

GridFunction sample_profile(const RadialProfile& phi, const GridPtr& grid) {
  return GridFunction::sample(grid,
                              [&](std::span<const double> x) { return phi.profile(std::sqrt(squared_norm(x))); });
}

double admissibility_moment(const RadialProfile& phi, const Multiplicity& kappa, double ceiling) {
  if (!phi.derivative) throw InadmissibleProfile("admissibility_moment: profile has no derivative");
  const double h = kappa.homogeneity();
  boost::math::quadrature::exp_sinh<double> integrator;
  double err = 0.0;
  double value = 0.0;
  try {
    value = integrator.integrate(
        [&](double r) {
          const double d = std::abs(phi.derivative(r));
          return d == 0.0 ? 0.0 : std::pow(r, h) * d;
        },
        1e-12, &err);
  } catch (const std::exception& e) {
    throw InadmissibleProfile(std::string("admissibility_moment: quadrature failed: ") + e.what());
  }
  if (!std::isfinite(value) || value > ceiling) {
    throw InadmissibleProfile("admissibility_moment: moment diverges or exceeds the ceiling");
  }
  // Double-exponential quadrature returns a finite number for a logarithmically
  // divergent tail; r * integrand must vanish at infinity for convergence.
  constexpr double kFar = 1e8;
  if (kFar * std::pow(kFar, h) * std::abs(phi.derivative(kFar)) > 1e-6 * std::max(1.0, value)) {
    throw InadmissibleProfile("admissibility_moment: integrand decays no faster than 1/r");
  }
  return value;
}

}  // namespace dunkl
