#pragma once

// Weight h_k, the measure d mu_k = h_k^2 dx on R^d, and closed-form volumes
// of the regions carried by the maximal operators.

#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace dunkl {

/// Raised for violated preconditions anywhere in the library.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when an iterative numerical procedure fails (non-convergence,
/// inadmissible input detected numerically).
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Multiplicity vector kappa = (kappa_1, ..., kappa_d), one nonnegative
/// parameter per coordinate reflection.
class Multiplicity {
 public:
  explicit Multiplicity(std::vector<double> kappa);
  static Multiplicity uniform(int dim, double value);
  static Multiplicity classical(int dim) { return uniform(dim, 0.0); }

  int dim() const { return static_cast<int>(kappa_.size()); }
  /// gamma_k = sum of the entries; h_k is homogeneous of this degree.
  double gamma() const { return gamma_; }
  double operator[](int j) const { return kappa_[static_cast<std::size_t>(j)]; }
  std::span<const double> values() const { return kappa_; }
  bool is_classical() const;
  /// Homogeneity exponent of mu_k: 2 gamma + d.
  double homogeneity() const { return 2.0 * gamma_ + dim(); }

  std::string to_string() const;
  bool operator==(const Multiplicity&) const = default;

 private:
  std::vector<double> kappa_;
  double gamma_ = 0.0;
};

struct Cube {
  double r;
};
struct Ball {
  double r;
};
/// I(x, r) = [max(0, |x| - r), |x| + r), a subset of [0, inf).
struct Interval {
  double center;
  double radius;
};
/// R(z, r) = I(z_1, r) x ... x I(z_d, r).
struct Rectangle {
  std::vector<double> center;
  double radius;
};
using Region = std::variant<Cube, Ball, Interval, Rectangle>;

double weight_h(std::span<const double> x, const Multiplicity& kappa);

/// Rank-one weight |t|^{2 kappa}.
double weight_h2_1d(double t, double kappa);

/// mu_kappa([a, b]) on the line for arbitrary a <= b (density |t|^{2 kappa}).
double measure_segment(double a, double b, double kappa);

double measure_cube(double r, const Multiplicity& kappa);
double sphere_weight_integral(const Multiplicity& kappa);
double measure_ball(double r, const Multiplicity& kappa);
double measure_interval(const Interval& interval, double kappa_j);
double measure_rectangle(const Rectangle& rect, const Multiplicity& kappa);
double measure(const Region& region, const Multiplicity& kappa);

/// The r-independent constant C with mu_k(Q_r) = C mu_k(B_r).
double cube_ball_ratio(const Multiplicity& kappa);

/// c_kappa for one axis: 1 / int e^{-x^2/2} |x|^{2 kappa} dx.
double gaussian_constant_1d(double kappa);
/// c_kappa = prod_j c_{kappa_j}.
double gaussian_constant(const Multiplicity& kappa);

/// Lower and upper ends of I(x, r).
inline double interval_lower(double x, double r) {
  const double a = (x < 0 ? -x : x) - r;
  return a > 0.0 ? a : 0.0;
}
inline double interval_upper(double x, double r) { return (x < 0 ? -x : x) + r; }

}  // namespace dunkl
