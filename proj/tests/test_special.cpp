#include <doctest.h>

#include <cmath>
#include <vector>

#include "dunkl/quadrature.hpp"
#include "dunkl/special.hpp"
#include "oracles.hpp"

using namespace dunkl;

TEST_CASE("normalized Bessel matches Boost J_alpha") {
  for (double a : {-0.5, 0.0, 0.3, 1.0, 2.5, 3.0}) {
    for (double x : {1e-3, 0.4, 1.9, 2.1, 7.5, 31.0, 140.0}) {
      CHECK(normalized_bessel(a, x) == doctest::Approx(oracle::normalized_j(a, x)).epsilon(1e-12).scale(1.0));
    }
    CHECK(normalized_bessel(a, 0.0) == 1.0);
  }
}

TEST_CASE("normalized Bessel on the imaginary axis matches Boost I_alpha") {
  for (double a : {-0.5, 0.3, 1.0, 2.5}) {
    for (double s : {0.5, 1.5, 3.0, 12.0}) {
      const cplx v = normalized_bessel(a, cplx(0.0, s));
      CHECK(v.real() == doctest::Approx(oracle::normalized_i(a, s)).epsilon(1e-12));
      CHECK(std::abs(v.imag()) < 1e-12 * std::abs(v.real()));
      CHECK(normalized_bessel_i_scaled(a, s) == doctest::Approx(std::exp(-s) * oracle::normalized_i(a, s)).epsilon(1e-12));
    }
  }
}

TEST_CASE("normalized Bessel rejects alpha below -1/2") {
  CHECK_THROWS_AS(normalized_bessel(-0.7, 1.0), DomainError);
}

TEST_CASE("rank-one kernel agrees with the Bessel oracle") {
  for (double k : {0.0, 0.3, 0.5, 1.0, 2.5}) {
    for (double x : {-5.3, -0.8, 0.2, 1.7, 9.4}) {
      for (double y : {-3.1, 0.6, 2.2, 11.0}) {
        const cplx e = dunkl_kernel_1d(k, x, y);
        const cplx o = oracle::kernel(k, x, y);
        CHECK(std::abs(e - o) < 1e-12);
        CHECK(std::abs(e) <= 1.0 + 1e-12);
      }
    }
  }
}

TEST_CASE("kappa = 1 kernel in elementary form") {
  // j_{1/2}(s) = sin s / s, j_{3/2}(s) = 3 (sin s - s cos s) / s^3.
  for (double s : {0.3, 1.0, 4.0, 17.0}) {
    const double j0 = std::sin(s) / s;
    const double j1 = 3.0 * (std::sin(s) - s * std::cos(s)) / (s * s * s);
    const cplx e = dunkl_kernel_1d(1.0, s, 1.0);
    CHECK(e.real() == doctest::Approx(j0).epsilon(1e-13));
    CHECK(e.imag() == doctest::Approx(s / 3.0 * j1).epsilon(1e-13));
  }
}

TEST_CASE("kernel from the intertwining integral") {
  for (double k : {0.3, 1.0, 2.5}) {
    const JacobiRule rule = build_jacobi_rule(k, 200);
    for (double x : {-2.0, 0.7, 4.5}) {
      for (double y : {-1.1, 3.3}) {
        CHECK(std::abs(dunkl_kernel_1d_quadrature(rule, x, y) - dunkl_kernel_1d(k, x, y)) < 1e-12);
      }
    }
  }
}

TEST_CASE("real kernel and its log") {
  for (double k : {0.0, 0.5, 2.5}) {
    for (double a : {-2.0, 0.3, 1.5}) {
      for (double b : {-1.0, 0.8, 3.0}) {
        const double ref = oracle::kernel_real(k, a, b);
        CHECK(dunkl_kernel_1d_real_scaled(k, a, b) == doctest::Approx(std::exp(-std::abs(a * b)) * ref).epsilon(1e-12));
      }
    }
  }
  const Multiplicity kap({0.5, 1.0});
  const std::vector<double> a = {1.2, -0.7};
  const std::vector<double> b = {0.4, 2.0};
  const double ref = oracle::kernel_real(0.5, 1.2, 0.4) * oracle::kernel_real(1.0, -0.7, 2.0);
  CHECK(dunkl_kernel_real_log(kap, a, b) == doctest::Approx(std::log(ref)).epsilon(1e-12));
}

TEST_CASE("tensor kernel is the product of rank-one kernels") {
  const Multiplicity kap({0.3, 2.5});
  const std::vector<double> x = {1.1, -2.0};
  const std::vector<double> y = {0.5, 0.9};
  const cplx ref = oracle::kernel(0.3, 1.1, 0.5) * oracle::kernel(2.5, -2.0, 0.9);
  CHECK(std::abs(dunkl_kernel(kap, x, y) - ref) < 1e-12);
}
