#include "dunkl/special.hpp"

#include <boost/math/special_functions/bessel.hpp>

#include <cmath>
#include <numbers>

namespace dunkl {

namespace {

constexpr double kSeriesRadius = 2.0;

cplx bessel_series(double alpha, cplx z) {
  const cplx q = -0.25 * z * z;
  cplx term = 1.0;
  cplx sum = 1.0;
  for (int k = 1; k < 2000; ++k) {
    term *= q / (static_cast<double>(k) * (alpha + k));
    sum += term;
    if (std::abs(term) <= 1e-17 * std::abs(sum) && k > std::abs(z)) break;
  }
  return sum;
}

void check_order(double alpha) {
  if (!(alpha >= -0.5)) throw DomainError("normalized_bessel: order must be >= -1/2");
}

// Gamma(alpha + 1) (2 / s)^alpha for s > 0
double bessel_prefactor(double alpha, double s) {
  return std::exp(std::lgamma(alpha + 1.0) + alpha * std::log(2.0 / s));
}

}  // namespace

double normalized_bessel(double alpha, double x) {
  check_order(alpha);
  const double s = std::abs(x);
  if (s <= kSeriesRadius) return bessel_series(alpha, cplx(s, 0.0)).real();
  if (alpha == -0.5) return std::cos(s);
  if (alpha == 0.5) return std::sin(s) / s;
  return bessel_prefactor(alpha, s) * boost::math::cyl_bessel_j(alpha, s);
}

double normalized_bessel_i_scaled(double alpha, double s) {
  check_order(alpha);
  const double a = std::abs(s);
  if (a <= kSeriesRadius) return std::exp(-a) * bessel_series(alpha, cplx(0.0, a)).real();
  if (alpha == -0.5) return 0.5 * (1.0 + std::exp(-2.0 * a));  // cosh(a) e^{-a}
  if (a < 600.0) {
    return bessel_prefactor(alpha, a) * boost::math::cyl_bessel_i(alpha, a) * std::exp(-a);
  }
  // Large-argument expansion of e^{-a} I_alpha(a).
  const double mu = 4.0 * alpha * alpha;
  double term = 1.0;
  double sum = 1.0;
  for (int k = 1; k < 30; ++k) {
    const double odd = 2.0 * k - 1.0;
    term *= -(mu - odd * odd) / (8.0 * k * a);
    sum += term;
    if (std::abs(term) < 1e-17 * std::abs(sum)) break;
  }
  return bessel_prefactor(alpha, a) * sum / std::sqrt(2.0 * std::numbers::pi * a);
}

cplx normalized_bessel(double alpha, cplx z) {
  check_order(alpha);
  const double re = std::abs(z.real());
  const double im = std::abs(z.imag());
  if (std::abs(z) <= kSeriesRadius) return bessel_series(alpha, z);
  if (im == 0.0) return normalized_bessel(alpha, re);
  if (re == 0.0) return normalized_bessel_i_scaled(alpha, im) * std::exp(im);
  return bessel_series(alpha, z);
}

cplx dunkl_kernel_1d(double kappa, double x, double y) {
  if (!(kappa >= 0.0)) throw DomainError("dunkl_kernel_1d: kappa must be >= 0");
  const double s = x * y;
  if (kappa == 0.0) return {std::cos(s), std::sin(s)};
  const double even = normalized_bessel(kappa - 0.5, s);
  const double odd = s / (2.0 * kappa + 1.0) * normalized_bessel(kappa + 0.5, s);
  return {even, odd};
}

cplx dunkl_kernel_1d_quadrature(const JacobiRule& rule, double x, double y) {
  const double s = x * y;
  cplx acc = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const double phase = s * rule.nodes[i];
    acc += rule.weights[i] * cplx(std::cos(phase), std::sin(phase));
  }
  return acc;
}

double dunkl_kernel_1d_real_scaled(double kappa, double a, double b) {
  if (!(kappa >= 0.0)) throw DomainError("dunkl_kernel_1d_real_scaled: kappa must be >= 0");
  const double s = a * b;
  if (kappa == 0.0) return std::exp(s - std::abs(s));
  return normalized_bessel_i_scaled(kappa - 0.5, s) +
         s / (2.0 * kappa + 1.0) * normalized_bessel_i_scaled(kappa + 0.5, s);
}

cplx dunkl_kernel(const Multiplicity& kappa, std::span<const double> x, std::span<const double> y) {
  if (static_cast<int>(x.size()) != kappa.dim() || static_cast<int>(y.size()) != kappa.dim()) {
    throw DomainError("dunkl_kernel: dimension mismatch");
  }
  cplx e = 1.0;
  for (int j = 0; j < kappa.dim(); ++j) {
    const auto i = static_cast<std::size_t>(j);
    e *= dunkl_kernel_1d(kappa[j], x[i], y[i]);
  }
  return e;
}

double dunkl_kernel_real_log(const Multiplicity& kappa, std::span<const double> a,
                             std::span<const double> b) {
  if (static_cast<int>(a.size()) != kappa.dim() || static_cast<int>(b.size()) != kappa.dim()) {
    throw DomainError("dunkl_kernel_real_log: dimension mismatch");
  }
  double log_e = 0.0;
  for (int j = 0; j < kappa.dim(); ++j) {
    const auto i = static_cast<std::size_t>(j);
    const double s = a[i] * b[i];
    log_e += std::abs(s) + std::log(dunkl_kernel_1d_real_scaled(kappa[j], a[i], b[i]));
  }
  return log_e;
}

}  // namespace dunkl
