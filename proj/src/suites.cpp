#include "dunkl/suites.hpp"

#include <boost/math/quadrature/tanh_sinh.hpp>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <mutex>
#include <numbers>
#include <ostream>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include "dunkl/covering.hpp"
#include "dunkl/kernels.hpp"
#include "dunkl/maximal.hpp"
#include "dunkl/polynomial.hpp"
#include "dunkl/product_formula.hpp"
#include "dunkl/special.hpp"
#include "dunkl/transform.hpp"
#include "dunkl/translation.hpp"

namespace dunkl {

namespace {

// ---------------------------------------------------------------- helpers

template <class F>
void parallel_for(int n, int workers, F&& fn) {
  if (workers <= 1 || n <= 1) {
    for (int i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  for (int w = 0; w < std::min(workers, n); ++w) {
    pool.emplace_back([&] {
      for (int i = next++; i < n; i = next++) {
        try {
          fn(i);
        } catch (...) {
          const std::lock_guard<std::mutex> lock(error_mutex);
          if (!error) error = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

std::string num(double x) {
  std::ostringstream os;
  os.precision(6);
  os << x;
  return os.str();
}

std::string kappa_str(const Multiplicity& k) {
  std::string s = "kappa=";
  for (int j = 0; j < k.dim(); ++j) s += (j ? ";" : "") + num(k[j]);
  return s;
}

std::string grid_str(const Multiplicity& k, int n, double L) {
  return kappa_str(k) + " N=" + std::to_string(n) + " L=" + num(L);
}

/// Distinct entries of the configured kappa.
std::vector<double> distinct_kappas(const RunConfig& cfg) {
  std::set<double> s(cfg.kappa.begin(), cfg.kappa.end());
  return {s.begin(), s.end()};
}

RadiusSchedule schedule_for(const RunConfig& cfg, double h, int count) {
  const double lo = cfg.radius_min > 0.0 ? cfg.radius_min : 0.5 * h;
  const double hi = cfg.radius_max > 0.0 ? cfg.radius_max : 4.0 * cfg.half_width;
  return RadiusSchedule(lo, hi, count);
}

double spacing(const RunConfig& cfg, int n) { return 2.0 * cfg.half_width / n; }

/// Largest even size <= n / 2.
int coarse_size(int n) { return std::max(8, (n / 2) - (n / 2) % 2); }

GridFunction gaussian(const GridPtr& g, double center, double a) {
  return GridFunction::sample(g, [=](std::span<const double> x) {
    double s = 0.0;
    for (double v : x) s += (v - center) * (v - center);
    return std::exp(-a * s);
  });
}

double relative_drift(double base, double other) { return std::abs(other / base - 1.0); }

// ---------------------------------------------------------------- kernel

void suite_kernel(const RunConfig& cfg, RunReport& rep) {
  const std::string S = "kernel";
  const std::vector<double> pts = {-6.4, -3.1, -1.7, -0.5, 0.5, 1.7, 3.1, 6.4};

  for (double kv : distinct_kappas(cfg)) {
    const std::string p = "kappa=" + num(kv) + " order=" + std::to_string(cfg.quadrature_order);
    double err = 0.0;
    double mod = 0.0;
    if (kv > 0.0) {
      const auto rule = cached_jacobi_rule(kv, cfg.quadrature_order);
      for (double x : pts) {
        for (double y : pts) {
          const cplx e = dunkl_kernel_1d(kv, x, y);
          err = std::max(err, std::abs(e - dunkl_kernel_1d_quadrature(*rule, x, y)));
          mod = std::max(mod, std::abs(e));
        }
      }
    } else {
      for (double x : pts) {
        for (double y : pts) {
          const cplx e = dunkl_kernel_1d(kv, x, y);
          err = std::max(err, std::abs(e - std::polar(1.0, x * y)));
          mod = std::max(mod, std::abs(e));
        }
      }
    }
    rep.check(S, "bessel-vs-intertwining-integral", "E_k(ix,y) = int_{-1}^{1} e^{ixyt} Phi_k(t) dt", p, err, 1e-10);
    rep.check(S, "kernel-modulus", "|E_k(ix,y)| <= 1", p, mod - 1.0, 1e-12);
  }

  // D_j V = V d_j on all monomials of total degree <= 5.
  const Multiplicity k = cfg.multiplicity();
  const int d = k.dim();
  double worst = 0.0;
  std::vector<int> e(static_cast<std::size_t>(d), 0);
  while (true) {
    int deg = 0;
    for (int v : e) deg += v;
    if (deg <= 5) {
      const Polynomial m = Polynomial::monomial(e);
      const Polynomial vm = intertwine_polynomial(k, m);
      for (int j = 0; j < d; ++j) {
        worst = std::max(worst, Polynomial::distance(dunkl_derivative(k, j, vm),
                                                     intertwine_polynomial(k, m.partial(j))));
      }
    }
    int j = d - 1;
    while (j >= 0 && ++e[static_cast<std::size_t>(j)] > 5) e[static_cast<std::size_t>(j--)] = 0;
    if (j < 0) break;
  }
  rep.check(S, "intertwining", "D_j V_k p = V_k (d_j p) for monomials p of degree <= 5", kappa_str(k), worst, 1e-10);

  // V_k by quadrature against the polynomial moments.
  const Polynomial probe = [&] {
    Polynomial q = Polynomial::constant(d, 0.7);
    for (int j = 0; j < d; ++j) {
      std::vector<int> a(static_cast<std::size_t>(d), 0);
      a[static_cast<std::size_t>(j)] = 2;
      q.add_term(a, 1.0 + j);
      a[static_cast<std::size_t>(j)] = 3;
      q.add_term(a, -0.5);
    }
    return q;
  }();
  const Polynomial vp = intertwine_polynomial(k, probe);
  double verr = 0.0;
  std::vector<double> x(static_cast<std::size_t>(d));
  for (double a : {-1.3, 0.4, 2.2}) {
    for (int j = 0; j < d; ++j) x[static_cast<std::size_t>(j)] = a * (1.0 + 0.3 * j);
    verr = std::max(verr, std::abs(intertwine(k, probe, x) - vp(x)));
  }
  rep.check(S, "intertwiner-quadrature", "V_k p(x) = int p(x t) prod Phi_{k_j}(t_j) dt", kappa_str(k), verr, 1e-10);

  // c_k int e^{-|x|^2/2} dmu_k = 1, one axis at a time (the integrand is a tensor).
  double prod = 1.0;
  for (int j = 0; j < d; ++j) {
    const Grid1D g(k[j], cfg.grid_size, cfg.half_width);
    double s = 0.0;
    for (std::size_t i = 0; i < g.nodes().size(); ++i) s += g.mu_weights()[i] * std::exp(-0.5 * g.nodes()[i] * g.nodes()[i]);
    prod *= s * gaussian_constant_1d(k[j]);
  }
  rep.check(S, "gaussian-normalisation", "c_k int e^{-|x|^2/2} dmu_k(x) = 1",
            grid_str(k, cfg.grid_size, cfg.half_width), std::abs(prod - 1.0), 1e-8);
}

// ---------------------------------------------------------------- product formula

void suite_product_formula(const RunConfig& cfg, RunReport& rep) {
  const std::string S = "product-formula";
  const std::vector<double> xs = {-4.1, -2.6, -1.3, -0.4, 0.4, 1.3, 2.6, 4.1};
  const std::vector<double> ls = {0.3, 0.9, 1.6, 2.4, 3.3, 4.5, 5.8, 7.2};
  const std::vector<double> ks = distinct_kappas(cfg);
  struct Row {
    double residual = 0.0, mass = 0.0, tv = 0.0, plus = 0.0;
  };
  std::vector<Row> rows(ks.size());
  parallel_for(static_cast<int>(ks.size()), cfg.workers, [&](int i) {
    const double kv = ks[static_cast<std::size_t>(i)];
    NuOptions opts;
    opts.order = cfg.quadrature_order;
    Row& r = rows[static_cast<std::size_t>(i)];
    for (double x : xs) {
      for (double y : xs) {
        for (double l : ls) r.residual = std::max(r.residual, product_formula_residual(kv, x, y, l, cfg.quadrature_order));
        const auto one = [](double) { return cplx(1.0); };
        r.mass = std::max(r.mass, std::abs(integrate_nu(kv, x, y, one, opts) - 1.0));
        r.tv = std::max(r.tv, nu_total_variation(kv, x, y, cfg.quadrature_order));
        r.plus = std::max(r.plus, std::abs(integrate_nu_plus(kv, x, y, one, opts) - 1.0));
      }
    }
  });
  for (std::size_t i = 0; i < ks.size(); ++i) {
    const std::string p = "kappa=" + num(ks[i]) + " order=" + std::to_string(cfg.quadrature_order) + " box=8x8x8";
    const Row& r = rows[i];
    rep.check(S, "product-formula-residual", "E_k(ix,l) E_k(iy,l) = int E_k(il,z) dnu_{x,y}(z)", p, r.residual, 1e-8);
    rep.check(S, "nu-mass", "int dnu_{x,y} = 1", p, r.mass, 1e-8);
    rep.check(S, "nu-total-variation", "int d|nu_{x,y}| <= 4", p, r.tv, 4.0 + 1e-6);
    rep.check(S, "nu-plus-mass", "int dnu+_{x,y} = 1", p, r.plus, 1e-8);
  }

  // Tensor measure: nu+ is the even part of nu, so it reproduces the real
  // part of the rank-one product formula on every axis.
  const Multiplicity k = cfg.multiplicity();
  const int d = k.dim();
  double worst = 0.0;
  std::vector<double> x(static_cast<std::size_t>(d));
  std::vector<double> y(static_cast<std::size_t>(d));
  std::vector<double> l(static_cast<std::size_t>(d));
  for (int s = 0; s < 4; ++s) {
    for (int j = 0; j < d; ++j) {
      x[static_cast<std::size_t>(j)] = 0.7 + 0.9 * s - 0.4 * j;
      y[static_cast<std::size_t>(j)] = -1.1 + 0.5 * s + 0.8 * j;
      l[static_cast<std::size_t>(j)] = 0.9 + 0.6 * j + 0.3 * s;
    }
    cplx expect = 1.0;
    for (int j = 0; j < d; ++j) {
      const auto jj = static_cast<std::size_t>(j);
      expect *= (dunkl_kernel_1d(k[j], x[jj], l[jj]) * dunkl_kernel_1d(k[j], y[jj], l[jj])).real();
    }
    const cplx got = integrate_upsilon(k, x, y, [&](std::span<const double> z) {
      cplx v = 1.0;
      for (int j = 0; j < d; ++j) v *= dunkl_kernel_1d(k[j], l[static_cast<std::size_t>(j)], z[static_cast<std::size_t>(j)]).real();
      return v;
    }, 64);
    worst = std::max(worst, std::abs(got - expect));
  }
  rep.check(S, "upsilon-product-formula",
            "prod_j Re[E_k(ix_j,l_j) E_k(iy_j,l_j)] = int prod_j Re E_k(il_j,z_j) dupsilon_{x,y}(z)", kappa_str(k),
            worst, 1e-8);
}

// ---------------------------------------------------------------- transform

void suite_transform(const RunConfig& cfg, RunReport& rep) {
  const std::string S = "transform";
  const Multiplicity k = cfg.multiplicity();
  const GridPtr g = make_grid(k, cfg.grid_size, cfg.half_width);
  const std::string p = grid_str(k, cfg.grid_size, cfg.half_width);
  const double c = gaussian_constant(k);

  for (double t : {0.5, 1.0, 2.0}) {
    const GridFunction q = heat_kernel(t, g);
    const GridFunction fq = dunkl_transform(q);
    const GridFunction expect = GridFunction::sample(g, [t](std::span<const double> xi) {
      double s = 0.0;
      for (double v : xi) s += v * v;
      return std::exp(-t * s);
    });
    rep.check(S, "heat-transform", "F_k(q^t)(xi) = e^{-t|xi|^2}", p + " t=" + num(t), max_difference(fq, expect),
              1e-6);
    rep.check(S, "heat-mass", "c_k int q^t dmu_k = 1", p + " t=" + num(t), std::abs(c * q.integral().real() - 1.0),
              1e-6);
  }

  const int d = k.dim();
  std::vector<std::pair<std::string, GridFunction>> cls;
  cls.emplace_back("gaussian-offset", gaussian(g, 0.8, 0.5));
  cls.emplace_back("modulated", GridFunction::sample(g, [d](std::span<const double> x) {
    double s = 0.0;
    for (double v : x) s += v * v;
    return std::exp(-s / 3.0) * cplx(std::cos(2.0 * x[0]), std::sin(1.5 * x[static_cast<std::size_t>(d - 1)]));
  }));
  cls.emplace_back("odd", GridFunction::sample(g, [](std::span<const double> x) {
    double s = 0.0;
    for (double v : x) s += v * v;
    return x[0] * std::exp(-s);
  }));
  for (const auto& [name, f] : cls) {
    const GridFunction back = inverse_transform(dunkl_transform(f));
    rep.check(S, "round-trip", "F_k^{-1} F_k f = f", p + " f=" + name, relative_l2_error(back, f), 1e-5);
    rep.check(S, "plancherel", "||F_k f||_2 = ||f||_2", p + " f=" + name, plancherel_residual(f), 1e-5);
  }
}

// ---------------------------------------------------------------- translation

// tau_x(chi_[-r,r])(y) = int_{|z|<=r} dnu+_{x,y}, integrated in z. The
// density has (z-a)^{k-1} (b-z)^{k-1} endpoint singularities, so it is
// rebuilt from the exact endpoint distances tanh-sinh supplies:
//   16 area^2 = (b+z)(z+a)(z-a)(b-z),   1 - sigma = (z-a)(z+a)/2xy  (xy > 0)
//                                                 = (b-z)(b+z)/2|xy| (xy < 0).
double interval_by_density(double kappa, double x, double y, double r) {
  const double X = std::abs(x);
  const double Y = std::abs(y);
  const double a = std::abs(X - Y);
  const double b = X + Y;
  const double hi = std::min(b, r);
  if (!(hi > a)) return 0.0;
  const double ck = jacobi_norm_constant(kappa);
  const auto density = [&](double z, double u, double v) {
    const double area2 = (b + z) * (z + a) * u * v / 16.0;
    const double one_minus_sigma = x * y > 0.0 ? u * (z + a) / (2.0 * X * Y) : v * (b + z) / (2.0 * X * Y);
    // K (1 - sigma) z^{2k}; both signs of z together.
    return ck * std::exp((kappa - 1.0) * std::log(4.0 * area2) - (2.0 * kappa - 1.0) * std::log(X * Y * z) +
                         2.0 * kappa * std::log(z)) *
           one_minus_sigma;
  };
  boost::math::quadrature::tanh_sinh<double> ts;
  const auto f = [&](double z, double zc) {
    // zc < 0: distance -zc to the left end a; zc > 0: distance to hi.
    const double u = zc < 0.0 ? -zc : z - a;
    const double v = zc > 0.0 ? (b - hi) + zc : b - z;
    if (!(u > 0.0) || !(v > 0.0)) return 0.0;
    return density(z, u, v);
  };
  return ts.integrate(f, a, hi, 1e-14);
}

void suite_translation(const RunConfig& cfg, RunReport& rep) {
  const std::string S = "translation";
  const std::vector<double> xs = {-3.7, -1.2, 0.6, 2.9};
  const std::vector<double> ys = {-4.4, -0.9, 0.35, 1.8, 5.2};
  const std::vector<double> rs = {0.3, 1.1, 2.5, 6.0};

  for (double kv : distinct_kappas(cfg)) {
    if (kv == 0.0) continue;
    double diff = 0.0;
    double off = 0.0;
    double neg = 0.0;
    for (double x : xs) {
      for (double y : ys) {
        for (double r : rs) {
          const double a = translate_indicator_interval(kv, x, y, r);
          const double b = interval_by_density(kv, x, y, r);
          diff = std::max(diff, std::abs(a - b));
          neg = std::max(neg, -a);
          const double ay = std::abs(y);
          if (!(ay > std::max(0.0, std::abs(x) - r) && ay < std::abs(x) + r) && ay >= 0.0) {
            off = std::max({off, std::abs(a), std::abs(b)});
          }
        }
      }
    }
    const std::string p = "kappa=" + num(kv);
    rep.check(S, "interval-rosler-vs-nu-plus", "tau_x chi_[-r,r](y): Rosler closed form = int chi_[-r,r] dnu+_{x,y}",
              p, diff, 1e-8);
    rep.check(S, "interval-support", "tau_x chi_[-r,r](y) = 0 for |y| outside I(x,r)", p, off, 0.0);
    rep.check(S, "interval-positivity", "tau_x chi_[-r,r](y) >= 0", p, neg, 0.0);
  }

  const Multiplicity k = cfg.multiplicity();
  const int d = k.dim();
  const std::string pk = kappa_str(k);
  double excess = 0.0;
  std::vector<double> x(static_cast<std::size_t>(d));
  std::vector<double> y(static_cast<std::size_t>(d));
  for (int s = 0; s < 6; ++s) {
    for (int j = 0; j < d; ++j) {
      x[static_cast<std::size_t>(j)] = 0.5 + 0.7 * s - 0.9 * j;
      y[static_cast<std::size_t>(j)] = -0.4 - 0.6 * s + 1.3 * j;
    }
    for (double r : rs) {
      const double ball = translate_indicator_ball(k, x, y, r);
      const double cube = translate_indicator_cube(k, x, y, r);
      excess = std::max(excess, ball - cube);
    }
  }
  rep.check(S, "ball-below-cube", "tau_x chi_{B_r}(y) <= tau_x chi_{Q_r}(y)", pk, excess, 1e-12);

  // Translated heat kernel: closed form vs the spectral translation.
  const GridPtr g = make_grid(k, cfg.grid_size, cfg.half_width);
  const std::string p = grid_str(k, cfg.grid_size, cfg.half_width);
  const double t = 1.0;
  const GridFunction q = heat_kernel(t, g);
  const double c = gaussian_constant(k);
  double spec_err = 0.0;
  double mass_err = 0.0;
  for (double a : {0.7, -1.9, 3.2}) {
    for (int j = 0; j < d; ++j) x[static_cast<std::size_t>(j)] = a * (1.0 - 0.3 * j);
    const GridFunction closed = GridFunction::sample(g, [&](std::span<const double> yy) {
      return translated_heat_kernel(t, x, yy, k);
    });
    const GridFunction spectral = translate_grid(q, x);
    spec_err = std::max(spec_err, max_difference(closed, spectral) / closed.max_abs());
    mass_err = std::max(mass_err, std::abs(c * closed.integral().real() - 1.0));
  }
  rep.check(S, "translated-heat-kernel", "tau_x q^t closed form = F_k^{-1}(E_k(ix,.) e^{-t|.|^2})", p + " t=1",
            spec_err, 1e-5);
  rep.check(S, "translated-heat-mass", "c_k int tau_x q^t dmu_k = 1", p + " t=1", mass_err, 1e-6);

  // Young's inequality: empirical constant with a grid-refinement trace.
  const double pp = 1.5;
  const double qq = 1.2;
  const double rr = 1.0 / (1.0 / pp + 1.0 / qq - 1.0);
  const std::string py = kappa_str(k) + " p=1.5 q=1.2 r=" + num(rr);
  std::vector<double> vals;
  for (int n : {coarse_size(cfg.grid_size), cfg.grid_size}) {
    const GridPtr gn = make_grid(k, n, cfg.half_width);
    const double v = young_ratio(gaussian(gn, 1.0, 1.0), gaussian(gn, -0.5, 2.0), pp, qq, rr);
    vals.push_back(v);
    rep.constant(S, "young", py, n, 0, v);
  }
  rep.info(S, "young-constant", "||f * g||_r <= C ||f||_p ||g||_q", py + " N=" + std::to_string(cfg.grid_size),
           vals[1]);
  rep.check(S, "young-grid-drift", "Young constant stable under grid doubling", py, relative_drift(vals[0], vals[1]),
            0.10);
}

// ---------------------------------------------------------------- maximal

void suite_maximal(const RunConfig& cfg, RunReport& rep) {
  const std::string S = "maximal";
  const Multiplicity k = cfg.multiplicity();
  const int d = k.dim();
  const GridPtr g = make_grid(k, cfg.grid_size, cfg.half_width);
  const std::string p = grid_str(k, cfg.grid_size, cfg.half_width) + " radii=" + std::to_string(cfg.radius_count);
  MaximalContext ctx{schedule_for(cfg, spacing(cfg, cfg.grid_size), cfg.radius_count), cfg.mollify_t, nullptr,
                     gaussian_profile(k)};
  MaximalContext dense = ctx;
  dense.schedule = ctx.schedule.densified();

  const GridFunction f = gaussian(g, 1.0, 1.0);
  const GridFunction pair[2] = {f, cplx(-2.5) * f};
  for (auto op : {MaximalOperator::Ball, MaximalOperator::Cube, MaximalOperator::Rect, MaximalOperator::Phi}) {
    const std::string name = to_string(op);
    const auto m = maximal(op, std::span<const GridFunction>(pair, 2), ctx);
    const auto md = maximal(op, std::span<const GridFunction>(pair, 1), dense);
    const double peak = m[0].max_abs();
    double neg = 0.0;
    double hom = 0.0;
    double mono = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) {
      neg = std::max(neg, -m[0][i].real());
      hom = std::max(hom, std::abs(m[1][i].real() - 2.5 * m[0][i].real()));
      mono = std::max(mono, m[0][i].real() - md[0][i].real());
    }
    rep.check(S, "positivity-" + name, "M f >= 0", p, neg, 0.0);
    rep.check(S, "homogeneity-" + name, "M(cf) = |c| M f", p + " c=-2.5", hom / (2.5 * peak), 1e-12);
    rep.check(S, "schedule-monotone-" + name, "sup over a larger radius set is not smaller", p, mono / peak, 1e-12);
  }

  {
    const GridFunction one = GridFunction::sample(g, [](std::span<const double>) { return 1.0; });
    const GridFunction m = maximal_rect(one, ctx.schedule);
    const double target = std::pow(2.0, d);
    double dev = 0.0;
    for (std::size_t i = 0; i < m.size(); ++i) dev = std::max(dev, std::abs(m[i].real() - target) / target);
    rep.check(S, "MR-of-one", "M^R 1 = 2^d", p, dev, 1e-12);
  }
  {
    // chi of the cube of half-width L/2 (cell aligned); interior points |x_j| < L/4.
    const double l = 0.5 * cfg.half_width;
    const GridFunction chi = GridFunction::sample(g, [l](std::span<const double> x) {
      for (double v : x) {
        if (std::abs(v) >= l) return 0.0;
      }
      return 1.0;
    });
    const GridFunction m = maximal_cube(chi, ctx.schedule);
    double dev = 0.0;
    for (std::size_t i = 0; i < m.size(); ++i) {
      const auto x = g->point(i);
      bool inside = true;
      for (double v : x) inside = inside && std::abs(v) < 0.5 * l;
      if (inside) dev = std::max(dev, std::abs(m[i].real() - 1.0));
    }
    rep.check(S, "MQ-of-cube-indicator", "M^Q chi_{Q_l}(x) = 1 for x well inside Q_l", p, dev, 1e-6);
  }

  // Closed-form constant domination.
  const GridFunction odd = GridFunction::sample(g, [](std::span<const double> x) {
    double s = 0.0;
    for (double v : x) s += (v + 0.5) * (v + 0.5);
    return x[0] * std::exp(-s / 2.0);
  });
  for (const auto& [name, fn] : {std::pair<std::string, const GridFunction*>{"gaussian-offset", &f}, {"odd", &odd}}) {
    const MaximalReport r = domination_report(*fn, ctx);
    const std::string pf = p + " f=" + name;
    if (d >= 2) {
      rep.check(S, "domination-closed-form", "M f <= (mu(Q_1)/mu(B_1)) M^Q|f| pointwise, rel. tol 1e-6", pf,
                r.constants.at("violations"), 0.0);
    } else {
      // d = 1: the constant is 1 and M = M^Q for f >= 0; the record is the
      // discretisation gap between the two paths.
      rep.info(S, "domination-closed-form", "M f <= (mu(Q_1)/mu(B_1)) M^Q|f| (d=1: equality, gap recorded)", pf,
               r.constants.at("max_relative_excess"));
    }
    rep.info(S, "MQ-over-MR", "M^Q f <= C M^R f (empirical C)", pf, r.constants.at("MQ_over_MR"));
    rep.info(S, "M-over-MR", "M f <= C M^R f (empirical C)", pf, r.constants.at("M_over_MR"));
  }

  // Refinement traces of the empirical constants.
  const int nc = coarse_size(cfg.grid_size);
  const RadiusSchedule base = schedule_for(cfg, spacing(cfg, nc), cfg.radius_count);
  struct Constants {
    double mq_mr, weak, strong, weighted;
  };
  auto measure = [&](int n, const RadiusSchedule& sched) {
    const GridPtr gn = make_grid(k, n, cfg.half_width);
    const GridFunction fn = gaussian(gn, 1.0, 1.0);
    const GridFunction w = gaussian(gn, -3.0, 0.5);
    const GridFunction mq = maximal_cube(fn, sched);
    const GridFunction in[2] = {fn, w};
    const auto mr = maximal_rect(std::span<const GridFunction>(in, 2), sched);
    Constants c{};
    for (std::size_t i = 0; i < fn.size(); ++i) c.mq_mr = std::max(c.mq_mr, mq[i].real() / mr[0][i].real());
    c.weak = weak_ratio_from(mr[0], fn.norm(1.0));
    c.strong = mr[0].norm(2.0) / fn.norm(2.0);
    double lhs = 0.0;
    double rhs = 0.0;
    for (std::size_t i = 0; i < fn.size(); ++i) {
      lhs += gn->weight(i) * std::pow(mr[0][i].real(), 2.0) * w[i].real();
      rhs += gn->weight(i) * std::norm(fn[i]) * mr[1][i].real();
    }
    c.weighted = lhs / rhs;
    return c;
  };
  const Constants a = measure(nc, base);
  const Constants b = measure(cfg.grid_size, base);
  const Constants dd = measure(nc, base.densified());
  const std::string pc = kappa_str(k) + " f=gaussian-offset";
  const std::vector<std::tuple<std::string, std::string, double Constants::*>> names = {
      {"MQ-over-MR", "M^Q f <= C M^R f", &Constants::mq_mr},
      {"weak-type", "lambda mu{M^R f > lambda} <= C ||f||_1", &Constants::weak},
      {"strong-type", "||M^R f||_2 <= C ||f||_2", &Constants::strong},
      {"weighted", "int (M^R f)^2 W dmu <= C int |f|^2 M^R W dmu", &Constants::weighted}};
  for (const auto& [name, statement, field] : names) {
    rep.constant(S, name, pc, nc, base.count(), a.*field);
    rep.constant(S, name, pc, cfg.grid_size, base.count(), b.*field);
    rep.constant(S, name, pc, nc, base.densified().count(), dd.*field);
    rep.check(S, name + "-grid-drift", statement + " (constant drift, grid doubling)",
              pc + " N=" + std::to_string(nc) + "->" + std::to_string(cfg.grid_size), relative_drift(a.*field, b.*field),
              0.10);
    rep.check(S, name + "-radius-drift", statement + " (constant drift, schedule doubling)",
              pc + " radii=" + std::to_string(base.count()) + "->" + std::to_string(base.densified().count()),
              relative_drift(a.*field, dd.*field), 0.02);
  }
}

// ---------------------------------------------------------------- covering

void suite_covering(const RunConfig& cfg, RunReport& rep) {
  const std::string S = "covering";
  const Multiplicity k = cfg.multiplicity();
  const int d = k.dim();
  constexpr int kSeeds = 10;
  constexpr int kRects = 200;
  constexpr double kDilation = 5.0;
  struct Out {
    std::size_t failures = 0;
    double c = 0.0;
    double apriori = 0.0;
  };
  std::vector<Out> out(kSeeds);
  parallel_for(kSeeds, cfg.workers, [&](int s) {
    std::mt19937_64 rng(cfg.seed + static_cast<std::uint64_t>(s));
    std::uniform_real_distribution<double> centre(0.0, 10.0);
    std::uniform_real_distribution<double> radius(0.05, 1.0);
    std::vector<Rectangle> rects;
    for (int i = 0; i < kRects; ++i) {
      Rectangle r;
      for (int j = 0; j < d; ++j) r.center.push_back(centre(rng));
      r.radius = radius(rng);
      rects.push_back(std::move(r));
    }
    const VitaliSelection sel = vitali_select(rects, kDilation);
    Out& o = out[static_cast<std::size_t>(s)];
    o.failures = sel.certificate.failures.size();
    o.c = covering_constant(rects, sel, k);
    for (const auto& r : sel.selected) {
      o.apriori = std::max(o.apriori, measure_rectangle(dilate(r, kDilation), k) / measure_rectangle(r, k));
    }
  });
  double lo = std::numeric_limits<double>::infinity();
  double hi = 0.0;
  std::size_t failures = 0;
  double excess = 0.0;
  for (int s = 0; s < kSeeds; ++s) {
    const Out& o = out[static_cast<std::size_t>(s)];
    failures += o.failures;
    lo = std::min(lo, o.c);
    hi = std::max(hi, o.c);
    excess = std::max(excess, o.c - o.apriori);
    const std::string p = kappa_str(k) + " seed=" + std::to_string(cfg.seed + static_cast<std::uint64_t>(s));
    rep.constant(S, "covering-constant", p, 0, 0, o.c);
  }
  const std::string p = kappa_str(k) + " rects=200 seeds=10 dilation=5";
  rep.check(S, "certificate", "every R is contained in 5 R_j for a selected disjoint R_j", p,
            static_cast<double>(failures), 0.0);
  rep.check(S, "covering-bound", "mu(U R) <= max_j mu(5R_j)/mu(R_j) sum mu(R_j)", p, excess, 0.0);
  rep.info(S, "covering-constant", "mu(U R) <= C sum mu(R_j) (largest C over seeds)", p, hi);
  rep.check(S, "covering-seed-stability", "C stable across seeds (max/min)", p, std::isfinite(hi) ? hi / lo : hi, 1.5);
}

// ---------------------------------------------------------------- Fefferman-Stein

// Centred classical maximal function of |f| on a 1-D grid, cells constant,
// by prefix sums. The kappa = 0 oracle for the spectral operator.
GridFunction classical_maximal(const GridFunction& f, const RadiusSchedule& sched) {
  const Grid1D& ax = f.grid().axis(0);
  const int n = ax.size();
  const double h = ax.spacing();
  const double left = ax.cell_lower(0);
  std::vector<double> pre(static_cast<std::size_t>(n) + 1, 0.0);
  for (int i = 0; i < n; ++i) pre[static_cast<std::size_t>(i) + 1] = pre[static_cast<std::size_t>(i)] + std::abs(f[static_cast<std::size_t>(i)]) * h;
  auto cumulative = [&](double x) {
    const double u = std::clamp((x - left) / h, 0.0, static_cast<double>(n));
    const int i = std::min(static_cast<int>(u), n - 1);
    return pre[static_cast<std::size_t>(i)] + (u - i) * std::abs(f[static_cast<std::size_t>(i)]) * h;
  };
  GridFunction out(f.grid_ptr());
  const auto radii = sched.radii();
  for (int i = 0; i < n; ++i) {
    const double x = ax.nodes()[static_cast<std::size_t>(i)];
    double best = 0.0;
    for (double r : radii) best = std::max(best, (cumulative(x + r) - cumulative(x - r)) / (2.0 * r));
    out[static_cast<std::size_t>(i)] = best;
  }
  return out;
}

void suite_fefferman_stein(const RunConfig& cfg, RunReport& rep) {
  const std::string S = "fefferman-stein";
  const Multiplicity k = cfg.multiplicity();
  const int d = k.dim();
  const GridPtr g = make_grid(k, cfg.grid_size, cfg.half_width);
  const double h = spacing(cfg, cfg.grid_size);
  const std::string p = grid_str(k, cfg.grid_size, cfg.half_width) + " r=2";

  // Nested families of disjoint bumps in [-L/2, L/2]: 64 slots along the
  // first axis, family n uses the n leftmost slots.
  constexpr int kSlots = 64;
  const double lb = 0.5 * cfg.half_width;
  const double w = 2.0 * lb / kSlots;
  const double a = 0.4 * w;
  auto bump = [&](int slot, double pnorm) {
    const double c0 = -lb + w * (slot + 0.5);
    const double c1 = -lb + 0.5 * w;
    GridFunction b = GridFunction::sample(g, [&](std::span<const double> x) {
      double v = 1.0;
      for (int j = 0; j < d; ++j) {
        const double u = (x[static_cast<std::size_t>(j)] - (j == 0 ? c0 : c1)) / a;
        v *= std::abs(u) < 1.0 ? std::pow(std::cos(0.5 * std::numbers::pi * u), 2) : 0.0;
      }
      return v;
    });
    const double nrm = b.norm(pnorm);
    if (!(nrm > 0.0)) throw DomainError("fefferman-stein: bump narrower than the grid spacing");
    b *= cplx(1.0 / nrm);
    return b;
  };

  MaximalContext ctx{schedule_for(cfg, h, cfg.radius_count), cfg.mollify_t, nullptr, std::nullopt};
  ctx.frequency = spectral_frequency_grid(*g, ctx.schedule.r_max(), std::numbers::pi / h);
  struct Op {
    std::string name;
    MaximalOperator op;
    std::optional<RadialProfile> profile;
  };
  const std::vector<Op> ops = {{"M", MaximalOperator::Ball, std::nullopt},
                               {"MR", MaximalOperator::Rect, std::nullopt},
                               {"Mphi-heat", MaximalOperator::Phi, gaussian_profile(k)},
                               {"Mphi-poisson", MaximalOperator::Phi, poisson_profile(k)}};
  const std::vector<int> sizes = {1, 4, 16, 64};
  for (double pn : {2.0, 1.0}) {
    std::vector<GridFunction> all;
    for (int s = 0; s < kSlots; ++s) all.push_back(bump(s, pn));
    for (const auto& o : ops) {
      MaximalContext c = ctx;
      c.profile = o.profile;
      // Maximal functions of every slot once; families are prefixes.
      const auto maxes = maximal(o.op, all, c);
      double base = 0.0;
      for (int n : sizes) {
        const std::span<const GridFunction> fam(all.data(), static_cast<std::size_t>(n));
        const std::span<const GridFunction> mfam(maxes.data(), static_cast<std::size_t>(n));
        const GridFunction lhs = fs_vector_norm(mfam, 2.0);
        const GridFunction rhs = fs_vector_norm(fam, 2.0);
        const double ratio = pn == 1.0 ? weak_ratio_from(lhs, rhs.norm(1.0)) : lhs.norm(pn) / rhs.norm(pn);
        const std::string pf = p + " p=" + num(pn) + " op=" + o.name;
        rep.constant(S, "fs-ratio", pf + " n=" + std::to_string(n), cfg.grid_size, cfg.radius_count, ratio);
        if (n == 1) {
          base = ratio;
        } else {
          rep.check(S, "no-blow-up", "||(sum |M f_n|^2)^{1/2}||_p <= C ||(sum |f_n|^2)^{1/2}||_p, C independent of n",
                    pf + " n=" + std::to_string(n), ratio / base - 1.0, 0.10);
        }
      }
    }
  }

  // Classical case: the spectral ball operator against the brute-force
  // centred maximal function. The 64-slot bumps are too narrow for the
  // spectral grid at default sizes, so this uses 16 slots of width L/16.
  if (d == 1 && k.is_classical()) {
    const double w16 = cfg.half_width / 16.0;
    std::vector<GridFunction> fam;
    for (int s = 0; s < 16; ++s) {
      const double c0 = -lb + w16 * (s + 0.5);
      GridFunction b = GridFunction::sample(g, [&](std::span<const double> x) {
        const double u = (x[0] - c0) / (0.4 * w16);
        return std::abs(u) < 1.0 ? std::pow(std::cos(0.5 * std::numbers::pi * u), 2) : 0.0;
      });
      b *= cplx(1.0 / b.norm(2.0));
      fam.push_back(std::move(b));
    }
    const auto ms = maximal(MaximalOperator::Ball, fam, ctx);
    std::vector<GridFunction> oracle;
    for (const auto& f : fam) oracle.push_back(classical_maximal(f, ctx.schedule));
    const double rhs = fs_vector_norm(fam, 2.0).norm(2.0);
    const double lib = fs_vector_norm(ms, 2.0).norm(2.0) / rhs;
    const double ref = fs_vector_norm(oracle, 2.0).norm(2.0) / rhs;
    rep.info(S, "classical-oracle-ratio", "classical centred maximal, brute force", p + " p=2 n=16", ref);
    rep.check(S, "classical-window", "FS ratio of M within 2% of the brute-force classical value", p + " p=2 n=16",
              relative_drift(ref, lib), 0.02);
  }
}

}  // namespace

const std::vector<SuiteInfo>& suite_catalog() {
  static const std::vector<SuiteInfo> catalog = {
      {"kernel",
       "Dunkl kernel: Bessel closed form, intertwining integral, Dunkl operators",
       {"E_k(ix,y) = int_{-1}^{1} e^{ixyt} Phi_k(t) dt", "|E_k(ix,y)| <= 1", "D_j V_k = V_k d_j on polynomials",
        "c_k int e^{-|x|^2/2} dmu_k = 1"}},
      {"product-formula",
       "Product formula measures nu, nu+ and upsilon",
       {"E_k(ix,l) E_k(iy,l) = int E_k(il,z) dnu_{x,y}(z)", "int dnu_{x,y} = 1 and int d|nu_{x,y}| <= 4",
        "int dnu+_{x,y} = 1", "tensor product formula against upsilon_{x,y}"}},
      {"transform",
       "Dunkl transform on the grid",
       {"F_k(q^t) = e^{-t|xi|^2}", "F_k^{-1} F_k f = f", "||F_k f||_2 = ||f||_2", "c_k int q^t dmu_k = 1"}},
      {"translation",
       "Generalized translation and convolution",
       {"tau_x chi_[-r,r]: Rosler formula = nu+ integral", "tau_x chi_[-r,r](y) = 0 off I(x,r), and >= 0",
        "tau_x chi_{B_r} <= tau_x chi_{Q_r}", "closed-form tau_x q^t = spectral translation",
        "c_k int tau_x q^t dmu_k = 1", "||f*g||_r <= C ||f||_p ||g||_q (empirical C)"}},
      {"maximal",
       "Maximal operators M, M^Q, M^R, M^phi",
       {"M f <= (mu(Q_1)/mu(B_1)) M^Q|f| pointwise", "M^Q f <= C M^R f (empirical C)", "M^R 1 = 2^d",
        "weak (1,1), strong (2,2) and weighted inequalities for M^R (empirical C, refinement drift)",
        "positivity, homogeneity, radius-schedule monotonicity"}},
      {"covering",
       "Greedy covering of origin-truncated rectangles",
       {"every R lies in 5R_j for a disjoint selected R_j", "mu(U R) <= C sum mu(R_j), C seed-stable"}},
      {"fefferman-stein",
       "Vector-valued maximal inequality on disjoint-bump families",
       {"||(sum |M f_n|^2)^{1/2}||_p <= C ||(sum |f_n|^2)^{1/2}||_p for p = 2 and weak p = 1, C independent of n",
        "kappa = 0: agreement with the brute-force classical maximal function"}},
  };
  return catalog;
}

const SuiteInfo& suite_info(const std::string& name) {
  for (const auto& s : suite_catalog()) {
    if (s.name == name) return s;
  }
  throw ConfigError("unknown suite '" + name + "'");
}

void describe(std::ostream& os, const RunConfig& cfg) {
  validate(cfg);
  print_config(os, cfg);
  const auto names = cfg.selected_suites();
  os << '\n' << names.size() << (names.size() == 1 ? " suite:\n" : " suites:\n");
  for (const auto& n : names) {
    const SuiteInfo& s = suite_info(n);
    os << "  " << s.name << " - " << s.summary << '\n';
    for (const auto& st : s.statements) os << "      " << st << '\n';
  }
}

void run_suite(const std::string& name, const RunConfig& cfg, RunReport& rep) {
  if (name == "kernel") return suite_kernel(cfg, rep);
  if (name == "product-formula") return suite_product_formula(cfg, rep);
  if (name == "transform") return suite_transform(cfg, rep);
  if (name == "translation") return suite_translation(cfg, rep);
  if (name == "maximal") return suite_maximal(cfg, rep);
  if (name == "covering") return suite_covering(cfg, rep);
  if (name == "fefferman-stein") return suite_fefferman_stein(cfg, rep);
  throw ConfigError("unknown suite '" + name + "'");
}

RunReport run_suites(const RunConfig& cfg, std::ostream* progress) {
  validate(cfg);
  RunReport rep;
  for (const auto& name : cfg.selected_suites()) {
    if (progress) *progress << "running " << name << std::endl;
    run_suite(name, cfg, rep);
  }
  return rep;
}

}  // namespace dunkl
