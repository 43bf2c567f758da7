#pragma once

// The four Dunkl maximal operators on tensor grids and the empirical
// inequality ratios built on them.
//
//   M      sup_r |f * chi_{B_r}| / mu(B_r)   spectral, mollified indicator
//   M^Q    sup_r int |f| tau_x(chi_{Q_r})(-y) dmu / mu(Q_r)   exact cube kernel
//   M^R    sup_r int_{y~ in R(x,r)} |f| dmu / mu(R(x,r))      direct summation
//   M^phi  sup_t |f * phi_t|                 spectral
//
// Every sup over r > 0 (or t > 0) runs over a geometric RadiusSchedule.
// M^Q and M^R treat |f| as constant on each grid cell and integrate the
// kernel over the cell exactly (M^R) or by cell-local Gauss rules (M^Q).

#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "dunkl/grid.hpp"
#include "dunkl/kernels.hpp"

namespace dunkl {

class RadiusSchedule {
 public:
  RadiusSchedule(double r_min, double r_max, int count);
  /// count radii spanning [h/2, 4L] for the grid's first axis.
  static RadiusSchedule for_grid(const Grid& grid, int count = 64);

  double r_min() const { return r_min_; }
  double r_max() const { return r_max_; }
  int count() const { return count_; }
  double ratio() const;
  std::vector<double> radii() const;
  /// Same endpoints, 2 count - 1 radii: a superset of radii().
  RadiusSchedule densified() const;

 private:
  double r_min_;
  double r_max_;
  int count_;
};

enum class MaximalOperator { Ball, Cube, Rect, Phi };

std::string to_string(MaximalOperator op);
MaximalOperator parse_operator(const std::string& name);

/// Frequency grid for the spectral operators. Half-width min(pi/h, cap)
/// (cap <= 0 means the spatial half-width L) and spacing at most
/// pi / (1.25 (L + r_max)), which keeps the aliases of f * phi_r outside the
/// spatial box for every radius up to r_max.
GridPtr spectral_frequency_grid(const Grid& space, double r_max, double half_width_cap = 0.0);

struct MaximalContext {
  RadiusSchedule schedule;
  /// Heat mollification of the ball indicator in M.
  double mollify_t = 1e-4;
  /// Frequency grid for the spectral operators; null means
  /// spectral_frequency_grid(space, schedule.r_max()).
  GridPtr frequency;
  /// Profile for M^phi.
  std::optional<RadialProfile> profile;
};

/// Normalised so that M(1) = 1: the spectral multiplier is
/// j_{gamma+d/2}(r|xi|) e^{-t|xi|^2}, i.e. F(chi_{B_r}) / (c_k mu(B_r)).
GridFunction maximal_ball(const GridFunction& f, const MaximalContext& ctx);
GridFunction maximal_cube(const GridFunction& f, const RadiusSchedule& sched);
GridFunction maximal_rect(const GridFunction& f, const RadiusSchedule& sched);
GridFunction maximal_phi(const GridFunction& f, const RadialProfile& phi, const MaximalContext& ctx);

/// Batched versions share per-radius kernels across the inputs.
std::vector<GridFunction> maximal_ball(std::span<const GridFunction> fs, const MaximalContext& ctx);
std::vector<GridFunction> maximal_cube(std::span<const GridFunction> fs, const RadiusSchedule& sched);
std::vector<GridFunction> maximal_rect(std::span<const GridFunction> fs, const RadiusSchedule& sched);
std::vector<GridFunction> maximal_phi(std::span<const GridFunction> fs, const RadialProfile& phi,
                                      const MaximalContext& ctx);

GridFunction maximal(MaximalOperator op, const GridFunction& f, const MaximalContext& ctx);
std::vector<GridFunction> maximal(MaximalOperator op, std::span<const GridFunction> fs, const MaximalContext& ctx);

/// int_{cell} tau_x(chi_{[-r,r]})(-y) |y|^{2k} dy for the cell [a, b], which
/// must not contain 0 in its interior.
double cube_kernel_cell(double kappa, double x, double r, double a, double b);

/// mu_k({y in cell : y~ in R(x,r)}), one axis.
double rect_kernel_cell(double kappa, double x, double r, double a, double b);

/// mu_k({x : g(x) > lambda}) from the grid cell measures.
double level_set_measure(const GridFunction& g, double lambda);

/// Geometric lambda list between max|g| / span and max|g|.
std::vector<double> default_lambdas(const GridFunction& g, int count = 24, double span = 1e3);

/// max_lambda lambda mu({Mf > lambda}) / ||f||_1. An empty lambda list means
/// the exact sup over all lambda > 0 of the cell-based level-set measure.
double weak_type_ratio(MaximalOperator op, const GridFunction& f, const MaximalContext& ctx,
                       std::span<const double> lambdas = {});
/// Same, from a precomputed maximal function.
double weak_ratio_from(const GridFunction& maximal_values, double norm1, std::span<const double> lambdas = {});

/// ||Mf||_p / ||f||_p.
double strong_type_ratio(MaximalOperator op, const GridFunction& f, double p, const MaximalContext& ctx);

/// int (M^R f)^q W dmu / int |f|^q M^R W dmu.
double weighted_inequality_ratio(const GridFunction& f, const GridFunction& w, double q, const RadiusSchedule& sched);

/// Pointwise l^r norm across the members.
GridFunction fs_vector_norm(std::span<const GridFunction> seq, double r);

/// p > 1: ||(sum |M f_n|^r)^{1/r}||_p / ||(sum |f_n|^r)^{1/r}||_p.
/// p = 1: max_lambda lambda mu(level set of the maximal vector norm) / ||input vector norm||_1.
double fefferman_stein_ratio(MaximalOperator op, std::span<const GridFunction> seq, double r, double p,
                             const MaximalContext& ctx, std::span<const double> lambdas = {});

struct MaximalReport {
  std::string op;
  std::optional<GridFunction> values;
  std::map<std::string, double> constants;
  std::vector<std::pair<int, double>> trace;
  bool passed = true;
  std::vector<std::string> failures;
};

/// M, M^Q |f| and M^R f pointwise. Hard check: M f <= C M^Q |f| with
/// C = cube_ball_ratio, relative tolerance tol. Records the empirical
/// constants of M^Q <= C M^R and M <= C M^R.
MaximalReport domination_report(const GridFunction& f, const MaximalContext& ctx, double tol = 1e-6);

}  // namespace dunkl
