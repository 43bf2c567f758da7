#include <doctest.h>

#include <boost/math/quadrature/ooura_fourier_integrals.hpp>

#include <cmath>
#include <vector>

#include "dunkl/kernels.hpp"
#include "dunkl/transform.hpp"
#include "dunkl/translation.hpp"
#include "oracles.hpp"

using namespace dunkl;

namespace {

GridPtr line(double k, int n = 256, double L = 12.0) { return make_grid(Multiplicity({k}), n, L); }

double closed_peak(const Multiplicity& kap, const std::vector<double>& x) {
  double peak = 0.0;
  for (double y = -14.0; y <= 14.0; y += 0.01) {
    const std::vector<double> yy = {y};
    peak = std::max(peak, std::abs(translated_heat_kernel(1.0, x, yy, kap)));
  }
  return peak;
}

}  // namespace

TEST_CASE("transform of a Gaussian") {
  for (double k : {0.0, 0.3, 1.0, 2.5}) {
    const GridPtr g = line(k);
    const double a = 0.7;
    const GridFunction f = GridFunction::sample(g, [a](std::span<const double> x) { return std::exp(-a * x[0] * x[0]); });
    const GridFunction F = dunkl_transform(f);
    const GridFunction ref = GridFunction::sample(g, [a, k](std::span<const double> xi) {
      return std::pow(2.0 * a, -(k + 0.5)) * std::exp(-xi[0] * xi[0] / (4.0 * a));
    });
    CHECK(max_difference(F, ref) < 1e-7);
  }
}

TEST_CASE("transform of an odd function against direct quadrature") {
  for (double k : {0.5, 2.5}) {
    const GridPtr g = line(k, 128, 10.0);
    auto f = [](double x) { return x * std::exp(-0.5 * (x - 0.3) * (x - 0.3)); };
    const GridFunction F = dunkl_transform(GridFunction::sample(g, [&](std::span<const double> x) { return f(x[0]); }));
    const double c = 1.0 / (std::pow(2.0, k + 0.5) * boost::math::tgamma(k + 0.5));
    for (int i : {30, 40, 70, 97}) {
      const double xi = g->axis(0).nodes()[static_cast<std::size_t>(i)];
      const double re = oracle::line_integral(k, [&](double y) { return f(y) * oracle::kernel(k, -xi, y).real(); });
      const double im = oracle::line_integral(k, [&](double y) { return f(y) * oracle::kernel(k, -xi, y).imag(); });
      CHECK(std::abs(F[static_cast<std::size_t>(i)] - c * cplx(re, im)) < 1e-8);
    }
  }
}

TEST_CASE("round trip, Plancherel and batching") {
  // max |xi| h = 8 / 6 keeps the |t|^{2k} end corrections in their regime.
  const GridPtr g = make_grid(Multiplicity({0.5, 1.0}), 96, 8.0);
  const GridFunction f = GridFunction::sample(g, [](std::span<const double> x) {
    return std::exp(-0.4 * (x[0] * x[0] + x[1] * x[1])) * cplx(1.0 + x[0], x[1]);
  });
  const GridFunction back = inverse_transform(dunkl_transform(f));
  CHECK(relative_l2_error(back, f) < 1e-5);
  CHECK(plancherel_residual(f) < 1e-8);
  std::vector<cplx> two(2 * f.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    two[2 * i] = f[i];
    two[2 * i + 1] = 2.0 * f[i];
  }
  const std::vector<cplx> out = transform_batch(two, 2, *g, *g, false);
  const GridFunction F = dunkl_transform(f);
  for (std::size_t i = 0; i < f.size(); ++i) {
    CHECK(std::abs(out[2 * i] - F[i]) < 1e-14);
    CHECK(std::abs(out[2 * i + 1] - 2.0 * F[i]) < 1e-13);
  }
  CHECK_THROWS_AS(dunkl_transform(f, line(0.5)), DomainError);
}

TEST_CASE("heat and Poisson transforms") {
  for (double k : {0.3, 1.0}) {
    const GridPtr g = line(k);
    const GridFunction q = heat_kernel(1.0, g);
    const GridFunction F = dunkl_transform(q);
    for (std::size_t i = 0; i < F.size(); i += 17) {
      const double xi = g->axis(0).nodes()[i];
      CHECK(std::abs(F[i] - std::exp(-xi * xi)) < 1e-7);
    }
  }
  // kappa in {0, 1}: j_{-1/2}(s) = cos s and j_{1/2}(s) = sin s / s, so the
  // Hankel integral reduces to Fourier cosine / sine integrals.
  boost::math::quadrature::ooura_fourier_cos<double> fc;
  boost::math::quadrature::ooura_fourier_sin<double> fs;
  for (double k : {0.0, 1.0}) {
    const Multiplicity kap({k});
    const RadialProfile p = poisson_profile(kap);
    const double c = gaussian_constant_1d(k);
    for (double xi : {0.3, 1.0, 2.7}) {
      const double ref = k == 0.0 ? 2.0 * c * fc.integrate(p.profile, xi).first
                                  : 2.0 * c * fs.integrate([&](double y) { return y * p.profile(y); }, xi).first / xi;
      CHECK(p.fourier(xi) == doctest::Approx(ref).epsilon(1e-8));
    }
    const std::vector<double> x = {0.8};
    CHECK(poisson_kernel_value(1.0, kap, x) == doctest::Approx(p.profile(0.8)).epsilon(1e-14));
  }
}

TEST_CASE("admissibility moment") {
  const Multiplicity kap({0.5});
  const RadialProfile g = gaussian_profile(kap);
  // int_0^inf r^{2} r e^{-r^2/2} dr = 2.
  CHECK(admissibility_moment(g, kap) == doctest::Approx(2.0).epsilon(1e-10));
  // r^2 |phi'| ~ 2 / r: logarithmic divergence.
  RadialProfile slow{"slow", [](double r) { return 1.0 / (1.0 + r * r); },
                     [](double r) { return -2.0 * r / ((1.0 + r * r) * (1.0 + r * r)); }, nullptr};
  CHECK_THROWS_AS(admissibility_moment(slow, kap), InadmissibleProfile);
  RadialProfile fast{"fast", [](double r) { return 1.0 / std::sqrt(1.0 + r); },
                     [](double r) { return -0.5 / std::pow(1.0 + r, 1.5); }, nullptr};
  CHECK_THROWS_AS(admissibility_moment(fast, kap), InadmissibleProfile);
  CHECK(std::isfinite(poisson_profile(kap).admissible_moment));
}

TEST_CASE("interval translation against the Phi-mass oracle") {
  for (double k : {0.3, 0.5, 1.0, 2.5}) {
    for (double x : {-3.7, 0.6, 2.9}) {
      for (double y : {-4.4, -0.9, 0.35, 1.8, 5.2}) {
        for (double r : {0.3, 1.1, 2.5, 6.0}) {
          const double v = translate_indicator_interval(k, x, y, r);
          CHECK(v == doctest::Approx(oracle::interval_translate(k, x, y, r)).epsilon(1e-10).scale(1.0));
          CHECK(v >= 0.0);
          const double ay = std::abs(y);
          if (ay < interval_lower(x, r) || ay >= interval_upper(x, r)) CHECK(v == 0.0);
        }
      }
    }
  }
  CHECK(translate_indicator_interval(0.0, 1.0, 0.5, 2.0) == 1.0);
  CHECK(translate_indicator_interval(0.0, 1.0, 1.5, 2.0) == 0.0);
  CHECK_THROWS_AS(translate_indicator_interval(0.5, 0.0, 1.0, 1.0), DomainError);
}

TEST_CASE("rank-one translation is integration against nu") {
  for (double k : {0.5, 2.5}) {
    auto f = [](double z) { return cplx(std::exp(-z * z) * (1.0 + z)); };
    for (auto [x, y] : std::vector<std::pair<double, double>>{{0.9, -0.4}, {-1.5, -2.0}}) {
      CHECK(std::abs(translate_1d(k, f, x, y) - oracle::nu_integral(k, x, y, f)) < 1e-9);
    }
  }
}

TEST_CASE("translated heat kernel: closed form, oracle and spectral side") {
  for (double k : {0.3, 1.0}) {
    const Multiplicity kap({k});
    const GridPtr g = line(k, 512, 14.0);
    const GridFunction q = heat_kernel(1.0, g);
    const std::vector<double> x = {1.7};
    const GridFunction spectral = translate_grid(q, x);
    double worst = 0.0;
    for (std::size_t i = 0; i < q.size(); ++i) {
      const std::vector<double> y = {g->axis(0).nodes()[i]};
      const double closed = translated_heat_kernel(1.0, x, y, kap);
      CHECK(closed == doctest::Approx(oracle::translated_heat(k, 1.0, x[0], y[0])).epsilon(1e-11).scale(1e-300));
      worst = std::max(worst, std::abs(spectral[i] - closed));
    }
    CHECK(worst < 1e-5 * closed_peak(kap, x));
    const double mass = oracle::line_integral(k, [&](double y) { return oracle::translated_heat(k, 1.0, 1.7, y); });
    CHECK(mass * gaussian_constant_1d(k) == doctest::Approx(1.0).epsilon(1e-10));
  }
}

TEST_CASE("convolution: spectral and definition sides agree") {
  const double k = 0.5;
  const GridPtr g = line(k, 128, 10.0);
  auto f = [](double y) { return cplx(std::exp(-(y - 0.5) * (y - 0.5))); };
  auto h = [](double y) { return cplx(std::exp(-2.0 * y * y)); };
  const GridFunction fg = GridFunction::sample(g, [&](std::span<const double> x) { return f(x[0]); });
  const GridFunction hg = GridFunction::sample(g, [&](std::span<const double> x) { return h(x[0]); });
  const GridFunction conv = convolve(fg, hg);
  for (int i : {50, 64, 80}) {
    const double x = g->axis(0).nodes()[static_cast<std::size_t>(i)];
    CHECK(std::abs(convolve_direct_1d(g->axis(0), f, h, x) - conv[static_cast<std::size_t>(i)]) < 1e-7);
  }
  const double y = young_ratio(fg, hg, 1.5, 1.2, 1.0 / (1.0 / 1.5 + 1.0 / 1.2 - 1.0));
  CHECK(std::isfinite(y));
  CHECK(y > 0.0);
}

TEST_CASE("ball translate is dominated by the cube translate") {
  const Multiplicity kap({0.5, 1.0});
  const std::vector<double> x = {0.9, -1.4};
  const std::vector<double> y = {-0.3, 2.2};
  for (double r : {0.5, 1.5, 3.0}) {
    const double ball = translate_indicator_ball(kap, x, y, r);
    const double cube = translate_indicator_cube(kap, x, y, r);
    CHECK(ball >= -1e-14);
    CHECK(ball <= cube + 1e-12);
    CHECK(cube == doctest::Approx(oracle::interval_translate(0.5, 0.9, -0.3, r) *
                                  oracle::interval_translate(1.0, -1.4, 2.2, r)).epsilon(1e-10).scale(1.0));
  }
}
