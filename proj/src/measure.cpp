#include "dunkl/measure.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

namespace dunkl {

namespace {

// r^p, switching to log space when the direct power would leave the
// representable range.
double scaled_power(double log_prefactor, double r, double p) {
  const double lr = p * std::log(r);
  if (std::abs(lr) < 300.0 && std::abs(log_prefactor) < 300.0) {
    return std::exp(log_prefactor) * std::pow(r, p);
  }
  return std::exp(log_prefactor + lr);
}

void require_positive_radius(double r) {
  if (!(r > 0.0) || !std::isfinite(r)) {
    throw DomainError("radius must be a positive finite number");
  }
}

}  // namespace

Multiplicity::Multiplicity(std::vector<double> kappa) : kappa_(std::move(kappa)) {
  if (kappa_.empty()) {
    throw DomainError("multiplicity needs at least one coordinate");
  }
  for (double k : kappa_) {
    if (!std::isfinite(k) || k < 0.0) {
      throw DomainError("multiplicity entries must be finite and nonnegative");
    }
  }
  gamma_ = std::accumulate(kappa_.begin(), kappa_.end(), 0.0);
}

Multiplicity Multiplicity::uniform(int dim, double value) {
  if (dim < 1) {
    throw DomainError("dimension must be >= 1");
  }
  return Multiplicity(std::vector<double>(static_cast<std::size_t>(dim), value));
}

bool Multiplicity::is_classical() const {
  for (double k : kappa_) {
    if (k != 0.0) return false;
  }
  return true;
}

std::string Multiplicity::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t j = 0; j < kappa_.size(); ++j) {
    if (j) os << ';';
    os << kappa_[j];
  }
  os << ')';
  return os.str();
}

double weight_h(std::span<const double> x, const Multiplicity& kappa) {
  if (static_cast<int>(x.size()) != kappa.dim()) {
    throw DomainError("weight_h: point dimension does not match multiplicity");
  }
  double h = 1.0;
  for (int j = 0; j < kappa.dim(); ++j) {
    const double k = kappa[j];
    if (k == 0.0) continue;
    h *= std::pow(std::abs(x[static_cast<std::size_t>(j)]), k);
  }
  return h;
}

double weight_h2_1d(double t, double kappa) {
  if (kappa == 0.0) return 1.0;
  return std::pow(std::abs(t), 2.0 * kappa);
}

double measure_segment(double a, double b, double kappa) {
  if (b < a) {
    throw DomainError("measure_segment: expected a <= b");
  }
  const double p = 2.0 * kappa + 1.0;
  // antiderivative of |t|^{2k}: sign(t) |t|^p / p
  auto prim = [p](double t) { return std::copysign(std::pow(std::abs(t), p), t) / p; };
  return prim(b) - prim(a);
}

double measure_cube(double r, const Multiplicity& kappa) {
  require_positive_radius(r);
  double log_pre = kappa.dim() * std::log(2.0);
  for (double k : kappa.values()) log_pre -= std::log(2.0 * k + 1.0);
  return scaled_power(log_pre, r, kappa.homogeneity());
}

double sphere_weight_integral(const Multiplicity& kappa) {
  // int_{S^{d-1}} prod |y_j|^{2 k_j} dy = 2 prod Gamma(k_j + 1/2) / Gamma(gamma + d/2).
  // For d = 1 this is 2, the counting measure of {-1, 1}.
  double log_value = std::log(2.0) - std::lgamma(kappa.gamma() + 0.5 * kappa.dim());
  for (double k : kappa.values()) log_value += std::lgamma(k + 0.5);
  return std::exp(log_value);
}

double measure_ball(double r, const Multiplicity& kappa) {
  require_positive_radius(r);
  const double n = kappa.homogeneity();
  return scaled_power(std::log(sphere_weight_integral(kappa) / n), r, n);
}

double measure_interval(const Interval& interval, double kappa_j) {
  require_positive_radius(interval.radius);
  const double lo = interval_lower(interval.center, interval.radius);
  const double hi = interval_upper(interval.center, interval.radius);
  return measure_segment(lo, hi, kappa_j);
}

double measure_rectangle(const Rectangle& rect, const Multiplicity& kappa) {
  if (static_cast<int>(rect.center.size()) != kappa.dim()) {
    throw DomainError("measure_rectangle: center dimension does not match multiplicity");
  }
  double m = 1.0;
  for (int j = 0; j < kappa.dim(); ++j) {
    m *= measure_interval({rect.center[static_cast<std::size_t>(j)], rect.radius}, kappa[j]);
  }
  return m;
}

double measure(const Region& region, const Multiplicity& kappa) {
  return std::visit(
      [&kappa](const auto& reg) -> double {
        using T = std::decay_t<decltype(reg)>;
        if constexpr (std::is_same_v<T, Cube>) {
          return measure_cube(reg.r, kappa);
        } else if constexpr (std::is_same_v<T, Ball>) {
          return measure_ball(reg.r, kappa);
        } else if constexpr (std::is_same_v<T, Interval>) {
          if (kappa.dim() != 1) throw DomainError("interval region requires d = 1");
          return measure_interval(reg, kappa[0]);
        } else {
          return measure_rectangle(reg, kappa);
        }
      },
      region);
}

double cube_ball_ratio(const Multiplicity& kappa) {
  double c = std::pow(2.0, kappa.dim()) * kappa.homogeneity();
  for (double k : kappa.values()) c /= (2.0 * k + 1.0);
  return c / sphere_weight_integral(kappa);
}

double gaussian_constant_1d(double kappa) {
  if (!(kappa >= 0.0)) throw DomainError("gaussian_constant_1d: kappa must be >= 0");
  // int e^{-x^2/2} |x|^{2k} dx = 2^{k + 1/2} Gamma(k + 1/2)
  return std::exp(-(kappa + 0.5) * std::log(2.0) - std::lgamma(kappa + 0.5));
}

double gaussian_constant(const Multiplicity& kappa) {
  double c = 1.0;
  for (double k : kappa.values()) c *= gaussian_constant_1d(k);
  return c;
}

}  // namespace dunkl
