#include "dunkl/translation.hpp"

#include <algorithm>
#include <cmath>

#include "dunkl/kernels.hpp"
#include "dunkl/quadrature.hpp"
#include "dunkl/special.hpp"
#include "dunkl/transform.hpp"

namespace dunkl {

namespace {

struct BallAxis {
  double kappa;
  double x;
  double y;
  double lo2;  // min z^2
  double hi2;  // max z^2
};

// Phi{t : z(t)^2 <= s} for one axis.
double axis_probability(const BallAxis& a, double s) {
  if (s < a.lo2) return 0.0;
  if (s >= a.hi2) return 1.0;
  if (a.kappa == 0.0) return (a.x + a.y) * (a.x + a.y) <= s ? 1.0 : 0.0;
  const double xy = a.x * a.y;
  const double t = (s - a.x * a.x - a.y * a.y) / (2.0 * xy);
  return xy > 0.0 ? phi_cdf(a.kappa, t) : phi_sf(a.kappa, t);
}

// Kink locations of P(sum_{i >= j} z_i^2 <= s) as a function of s.
std::vector<double> kinks(const std::vector<BallAxis>& axes, std::size_t j) {
  std::vector<double> out{0.0};
  for (std::size_t i = j; i < axes.size(); ++i) {
    std::vector<double> next;
    for (double v : out) {
      next.push_back(v + axes[i].lo2);
      next.push_back(v + axes[i].hi2);
    }
    out = std::move(next);
  }
  return out;
}

double ball_probability(const std::vector<BallAxis>& axes, std::size_t j, double s, int nodes) {
  double lo = 0.0;
  double hi = 0.0;
  for (std::size_t i = j; i < axes.size(); ++i) {
    lo += axes[i].lo2;
    hi += axes[i].hi2;
  }
  if (s < lo) return 0.0;
  if (s >= hi) return 1.0;
  const BallAxis& a = axes[j];
  if (j + 1 == axes.size()) return axis_probability(a, s);
  if (a.kappa == 0.0) return ball_probability(axes, j + 1, s - (a.x + a.y) * (a.x + a.y), nodes);

  // Breakpoints in t where s - z_j(t)^2 crosses a kink of the inner probability.
  const double xy = a.x * a.y;
  std::vector<double> cuts;
  for (double k : kinks(axes, j + 1)) cuts.push_back((s - k - a.x * a.x - a.y * a.y) / (2.0 * xy));
  const auto integrator = cached_phi_integrator(a.kappa, nodes);
  return integrator->integrate(
      [&](double t) {
        const double z = rosler_radius(a.x, a.y, t);
        return ball_probability(axes, j + 1, s - z * z, nodes);
      },
      cuts);
}

void check_regular_pair(const Multiplicity& kappa, std::span<const double> x, std::span<const double> y,
                        const char* what) {
  const auto d = static_cast<std::size_t>(kappa.dim());
  if (x.size() != d || y.size() != d) throw DomainError(std::string(what) + ": dimension mismatch");
  if (!is_regular(x) || !is_regular(y)) throw DomainError(std::string(what) + ": x and y must be regular");
}

void check_radius(double r, const char* what) {
  if (!(r > 0.0) || !std::isfinite(r)) throw DomainError(std::string(what) + ": radius must be positive");
}

}  // namespace

cplx translate_1d(double kappa, const ScalarFn& f, double x, double y, const NuOptions& opts) {
  return integrate_nu(kappa, x, y, f, opts);
}

double translate_indicator_interval(double kappa, double x, double y, double r) {
  if (!(kappa >= 0.0)) throw DomainError("translate_indicator_interval: kappa must be >= 0");
  if (x == 0.0 || y == 0.0) throw DomainError("translate_indicator_interval: x and y must be nonzero");
  check_radius(r, "translate_indicator_interval");
  const double ay = std::abs(y);
  if (ay < interval_lower(x, r) || ay >= interval_upper(x, r)) return 0.0;
  if (kappa == 0.0) return std::abs(x + y) <= r ? 1.0 : 0.0;
  const double d = std::abs(x) - std::abs(y);
  const double s = std::abs(x) + std::abs(y);
  return axis_probability({kappa, x, y, d * d, s * s}, r * r);
}

double translate_indicator_cube(const Multiplicity& kappa, std::span<const double> x, std::span<const double> y,
                                double r) {
  check_regular_pair(kappa, x, y, "translate_indicator_cube");
  double v = 1.0;
  for (int j = 0; j < kappa.dim() && v != 0.0; ++j) {
    const auto i = static_cast<std::size_t>(j);
    v *= translate_indicator_interval(kappa[j], x[i], y[i], r);
  }
  return v;
}

double translate_indicator_ball(const Multiplicity& kappa, std::span<const double> x, std::span<const double> y,
                                double r, int nodes_per_piece) {
  check_regular_pair(kappa, x, y, "translate_indicator_ball");
  check_radius(r, "translate_indicator_ball");
  std::vector<BallAxis> axes;
  for (int j = 0; j < kappa.dim(); ++j) {
    const auto i = static_cast<std::size_t>(j);
    const double d = std::abs(x[i]) - std::abs(y[i]);
    const double s = std::abs(x[i]) + std::abs(y[i]);
    if (kappa[j] == 0.0) {
      const double z2 = (x[i] + y[i]) * (x[i] + y[i]);
      axes.push_back({0.0, x[i], y[i], z2, z2});
    } else {
      axes.push_back({kappa[j], x[i], y[i], d * d, s * s});
    }
  }
  return ball_probability(axes, 0, r * r, nodes_per_piece);
}

double indicator_bound_ratio(double kappa, double x, double y, double r) {
  const double value = translate_indicator_interval(kappa, x, y, r);
  return value * measure_segment(interval_lower(x, r), interval_upper(x, r), kappa) /
         measure_segment(-r, r, kappa);
}

GridFunction translate_grid(const GridFunction& f, std::span<const double> x) {
  const Grid& g = f.grid();
  if (static_cast<int>(x.size()) != g.dim()) throw DomainError("translate_grid: dimension mismatch");
  const DunklTransform t(f.grid_ptr(), f.grid_ptr());
  const Multiplicity& k = g.kappa();
  return t.inverse_with(t.forward(f), [&](std::span<const double> xi) { return dunkl_kernel(k, x, xi); });
}

GridFunction convolve(const GridFunction& f, const GridFunction& g) {
  GridFunction spectrum = dunkl_transform(f);
  spectrum *= dunkl_transform(g);
  return inverse_transform(spectrum);
}

cplx convolve_direct_1d(const Grid1D& grid, const ScalarFn& f, const ScalarFn& g, double x, const NuOptions& opts) {
  const double kappa = grid.kappa();
  cplx acc = 0.0;
  for (int b = 0; b < grid.size(); ++b) {
    const double y = grid.nodes()[static_cast<std::size_t>(b)];
    const cplx fy = f(y);
    if (fy == 0.0) continue;
    acc += grid.mu_weights()[static_cast<std::size_t>(b)] * fy * translate_1d(kappa, g, x, -y, opts);
  }
  return gaussian_constant_1d(kappa) * acc;
}

GridFunction mollified_cube_indicator(const GridPtr& grid, double r, double t) {
  check_radius(r, "mollified_cube_indicator");
  if (!(t > 0.0)) throw DomainError("mollified_cube_indicator: t must be positive");
  const Multiplicity& k = grid->kappa();
  GridFunction spectrum = GridFunction::sample(grid, [&](std::span<const double> xi) {
    double n2 = 0.0;
    for (double v : xi) n2 += v * v;
    return cube_indicator_spectrum(k, r, xi) * std::exp(-t * n2);
  });
  return inverse_transform(spectrum);
}

double translation_norm_ratio(const GridFunction& f, std::span<const double> x, double p) {
  const double n = f.norm(p);
  if (n == 0.0) throw DomainError("translation_norm_ratio: zero function");
  return translate_grid(f, x).norm(p) / n;
}

double young_ratio(const GridFunction& f, const GridFunction& g, double p, double q, double r) {
  const double denom = f.norm(p) * g.norm(q);
  if (denom == 0.0) throw DomainError("young_ratio: zero input");
  return convolve(f, g).norm(r) / denom;
}

}  // namespace dunkl
