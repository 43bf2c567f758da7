#pragma once

// Independent reference computations for the tests. Nothing here calls the
// library's special functions or quadrature rules: Bessel functions come
// from Boost, integrals from tanh-sinh, maximal functions from brute-force
// sums over grid cells.

#include <boost/math/quadrature/tanh_sinh.hpp>
#include <boost/math/special_functions/bessel.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <span>
#include <vector>

namespace oracle {

using cplx = std::complex<double>;

/// Gamma(a + 1) (x/2)^{-a} J_a(x), x != 0.
inline double normalized_j(double a, double x) {
  const double ax = std::abs(x);
  if (ax < 1e-8) return 1.0 - ax * ax / (4.0 * (a + 1.0));
  return boost::math::tgamma(a + 1.0) * std::pow(0.5 * ax, -a) * boost::math::cyl_bessel_j(a, ax);
}

/// Gamma(a + 1) (x/2)^{-a} I_a(x) = j_a(ix).
inline double normalized_i(double a, double x) {
  const double ax = std::abs(x);
  if (ax < 1e-8) return 1.0 + ax * ax / (4.0 * (a + 1.0));
  return boost::math::tgamma(a + 1.0) * std::pow(0.5 * ax, -a) * boost::math::cyl_bessel_i(a, ax);
}

/// E_k(ix, y) = j_{k-1/2}(xy) + i xy/(2k+1) j_{k+1/2}(xy).
inline cplx kernel(double k, double x, double y) {
  if (k == 0.0) return std::polar(1.0, x * y);
  const double s = x * y;
  return {normalized_j(k - 0.5, s), s / (2.0 * k + 1.0) * normalized_j(k + 0.5, s)};
}

/// E_k(a, b) for real a, b.
inline double kernel_real(double k, double a, double b) {
  const double s = a * b;
  if (k == 0.0) return std::exp(s);
  return normalized_i(k - 0.5, s) + s / (2.0 * k + 1.0) * normalized_i(k + 0.5, s);
}

/// Phi_k(t) = Gamma(k + 1/2) / (Gamma(k) sqrt(pi)) (1 - t)^{k-1} (1 + t)^k.
inline double phi(double k, double t) {
  const double m = boost::math::tgamma(k + 0.5) / (boost::math::tgamma(k) * std::sqrt(std::numbers::pi));
  return m * std::pow(1.0 - t, k - 1.0) * std::pow(1.0 + t, k);
}

/// int_a^b g(t, 1 - t, 1 + t) Phi_k(t) dt by tanh-sinh, -1 <= a < b <= 1; g
/// smooth on (a, b). The distances to +-1 are exact near the ends (tanh-sinh
/// supplies them), so neither the weight nor g loses precision there.
template <class G>
double phi_integral_d(double k, G&& g, double a = -1.0, double b = 1.0) {
  const double m = boost::math::tgamma(k + 0.5) / (boost::math::tgamma(k) * std::sqrt(std::numbers::pi));
  boost::math::quadrature::tanh_sinh<double> ts;
  return ts.integrate(
      [&](double t, double tc) {
        const double dm = (b == 1.0 && tc > 0.0) ? tc : 1.0 - t;
        const double dp = (a == -1.0 && tc < 0.0) ? -tc : 1.0 + t;
        return g(t, dm, dp) * m * std::pow(dm, k - 1.0) * std::pow(dp, k);
      },
      a, b, 1e-14);
}

/// int_a^b g(t) Phi_k(t) dt.
template <class G>
double phi_integral(double k, G&& g, double a = -1.0, double b = 1.0) {
  return phi_integral_d(k, [&](double t, double, double) { return g(t); }, a, b);
}

inline double z_of(double x, double y, double t) {
  return std::sqrt(std::max(0.0, x * x + y * y + 2.0 * x * y * t));
}

/// z(t) from the distances to +-1: z^2 = (x+y)^2 - 2xy(1-t) = (x-y)^2 + 2xy(1+t).
inline double z_of(double x, double y, double dm, double dp) {
  const double z2 = dm < dp ? (x + y) * (x + y) - 2.0 * x * y * dm : (x - y) * (x - y) + 2.0 * x * y * dp;
  return std::sqrt(std::max(0.0, z2));
}

/// int f dnu_{x,y}: nu puts 1/2 (1 + (x+y)/z) Phi dt at +z(t) and
/// 1/2 (1 - (x+y)/z) Phi dt at -z(t). Real and imaginary parts of f are
/// integrated separately.
template <class F>
cplx nu_integral(double k, double x, double y, F&& f) {
  auto part = [&](bool imag) {
    return phi_integral_d(k, [&](double, double dm, double dp) {
      const double z = z_of(x, y, dm, dp);
      cplx v;
      if (x + y == 0.0) {
        v = 0.5 * (f(z) + f(-z));
      } else {
        if (z == 0.0) return 0.0;
        const double s = (x + y) / z;
        v = 0.5 * (1.0 + s) * f(z) + 0.5 * (1.0 - s) * f(-z);
      }
      return imag ? v.imag() : v.real();
    });
  };
  return {part(false), part(true)};
}

/// ||nu_{x,y}|| = int max(1, |x+y|/z(t)) Phi_k(t) dt.
inline double nu_total_variation(double k, double x, double y) {
  return phi_integral_d(k, [&](double, double dm, double dp) {
    if (x + y == 0.0) return 1.0;
    const double z = z_of(x, y, dm, dp);
    return z == 0.0 ? 0.0 : std::max(1.0, std::abs(x + y) / z);
  });
}

/// tau_x(chi_[-r,r])(y) = Phi_k{t : z(t) <= r}. The set is a half-line in t;
/// its Phi_k mass is integrated with exact distances to +-1.
inline double interval_translate(double k, double x, double y, double r) {
  const double s = (r * r - x * x - y * y) / (2.0 * x * y);
  double t0 = -1.0;
  double t1 = 1.0;
  if (x * y > 0.0) {
    t1 = std::min(1.0, s);
  } else {
    t0 = std::max(-1.0, s);
  }
  if (!(t1 > t0)) return 0.0;
  const double m = boost::math::tgamma(k + 0.5) / (boost::math::tgamma(k) * std::sqrt(std::numbers::pi));
  boost::math::quadrature::tanh_sinh<double> ts;
  return ts.integrate(
      [&](double t, double tc) {
        const double dm = (t1 == 1.0 && tc > 0.0) ? tc : 1.0 - t;
        const double dp = (t0 == -1.0 && tc < 0.0) ? -tc : 1.0 + t;
        return m * std::pow(dm, k - 1.0) * std::pow(dp, k);
      },
      t0, t1, 1e-14);
}

/// (2t)^{-(k+1/2)} e^{-(x^2+y^2)/4t} E_k(x/sqrt(2t), -y/sqrt(2t)), one axis.
inline double translated_heat(double k, double t, double x, double y) {
  const double s = std::sqrt(2.0 * t);
  return std::pow(2.0 * t, -(k + 0.5)) * std::exp(-(x * x + y * y) / (4.0 * t)) * kernel_real(k, x / s, -y / s);
}

/// int_{-R}^{R} g(y) |y|^{2k} dy; g must be negligible beyond R.
template <class G>
double line_integral(double k, G&& g, double R = 40.0) {
  boost::math::quadrature::tanh_sinh<double> ts;
  auto f = [&](double y) { return y == 0.0 ? 0.0 : g(y) * std::pow(std::abs(y), 2.0 * k); };
  return ts.integrate(f, -R, 0.0, 1e-13) + ts.integrate(f, 0.0, R, 1e-13);
}

/// mu_k([a, b]) by quadrature.
inline double segment(double a, double b, double k) {
  if (!(b > a)) return 0.0;
  boost::math::quadrature::tanh_sinh<double> ts;
  auto f = [&](double t) { return std::pow(std::abs(t), 2.0 * k); };
  if (a < 0.0 && b > 0.0) return ts.integrate(f, a, 0.0) + ts.integrate(f, 0.0, b);
  return ts.integrate(f, a, b);
}

/// mu_k(B_1) = 2 prod Gamma(k_j + 1/2) / (Gamma(gamma + d/2) (2 gamma + d)).
inline double unit_ball(std::span<const double> k) {
  double g = 0.0;
  double p = 1.0;
  for (double v : k) {
    g += v;
    p *= boost::math::tgamma(v + 0.5);
  }
  const double d = static_cast<double>(k.size());
  return 2.0 * p / (boost::math::tgamma(g + 0.5 * d) * (2.0 * g + d));
}

/// mu_k(Q_1) = prod 2 / (2 k_j + 1).
inline double unit_cube(std::span<const double> k) {
  double p = 1.0;
  for (double v : k) p *= 2.0 / (2.0 * v + 1.0);
  return p;
}

/// Cells of a 1-D grid on [-L, L] with n cells.
struct Cells {
  double L;
  int n;
  double h() const { return 2.0 * L / n; }
  double lo(int i) const { return -L + i * h(); }
  double hi(int i) const { return -L + (i + 1) * h(); }
  double mid(int i) const { return -L + (i + 0.5) * h(); }
};

inline double overlap(double a, double b, double c, double d) { return std::max(0.0, std::min(b, d) - std::max(a, c)); }

/// Centred classical maximal function of a cell-constant |f| on a 1-D grid,
/// sup over the given radii, by direct summation over all cells.
inline std::vector<double> hl_centred(const Cells& g, std::span<const double> absf, std::span<const double> radii) {
  std::vector<double> out(static_cast<std::size_t>(g.n), 0.0);
  for (int i = 0; i < g.n; ++i) {
    const double x = g.mid(i);
    for (double r : radii) {
      double s = 0.0;
      for (int k = 0; k < g.n; ++k) s += absf[static_cast<std::size_t>(k)] * overlap(g.lo(k), g.hi(k), x - r, x + r);
      out[static_cast<std::size_t>(i)] = std::max(out[static_cast<std::size_t>(i)], s / (2.0 * r));
    }
  }
  return out;
}

/// Classical rectangle maximal function: average of |f| over
/// {y : |y| in I(x, r)} divided by |I(x, r)|.
inline std::vector<double> rect_classical(const Cells& g, std::span<const double> absf, std::span<const double> radii) {
  std::vector<double> out(static_cast<std::size_t>(g.n), 0.0);
  for (int i = 0; i < g.n; ++i) {
    const double x = std::abs(g.mid(i));
    for (double r : radii) {
      const double lo = std::max(0.0, x - r);
      const double hi = x + r;
      double s = 0.0;
      for (int k = 0; k < g.n; ++k) {
        s += absf[static_cast<std::size_t>(k)] *
             (overlap(g.lo(k), g.hi(k), lo, hi) + overlap(g.lo(k), g.hi(k), -hi, -lo));
      }
      out[static_cast<std::size_t>(i)] = std::max(out[static_cast<std::size_t>(i)], s / (hi - lo));
    }
  }
  return out;
}

/// sup_lambda lambda mu{g > lambda} / norm1 for cell-constant g.
inline double weak_sup(std::vector<std::pair<double, double>> value_measure, double norm1) {
  std::sort(value_measure.begin(), value_measure.end(), [](auto& a, auto& b) { return a.first > b.first; });
  double acc = 0.0;
  double best = 0.0;
  for (const auto& [v, m] : value_measure) {
    acc += m;
    best = std::max(best, v * acc);
  }
  return best / norm1;
}

}  // namespace oracle
