#pragma once

// Cell-centred symmetric tensor grids on [-L, L]^d and complex samples on
// them. No node sits on a coordinate hyperplane, so every grid point is
// regular.
//
// Two sets of weights per axis:
//   mu_weights     quadrature weights for int g(t) |t|^{2k} dt. The plain
//                  midpoint weights h |t_i|^{2k} plus end corrections at the
//                  nodes nearest 0 that cancel the generalized Euler-Maclaurin
//                  error terms of the |t|^{2k} singularity.
//   cell_measures  exact mu_k of each cell; used where a function is treated
//                  as piecewise constant (level sets, rectangle averages).

#include <complex>
#include <iosfwd>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "dunkl/measure.hpp"

namespace dunkl {

using cplx = std::complex<double>;

class Grid1D {
 public:
  /// n cells of width h = 2L/n; n must be even and >= 2.
  Grid1D(double kappa, int n, double half_width);

  double kappa() const { return kappa_; }
  int size() const { return static_cast<int>(nodes_.size()); }
  double half_width() const { return half_width_; }
  double spacing() const { return spacing_; }
  const std::vector<double>& nodes() const { return nodes_; }
  const std::vector<double>& mu_weights() const { return mu_weights_; }
  const std::vector<double>& cell_measures() const { return cell_measures_; }
  double cell_lower(int i) const { return -half_width_ + i * spacing_; }
  double cell_upper(int i) const { return -half_width_ + (i + 1) * spacing_; }

  bool operator==(const Grid1D& o) const {
    return kappa_ == o.kappa_ && size() == o.size() && half_width_ == o.half_width_;
  }

 private:
  double kappa_;
  double half_width_;
  double spacing_;
  std::vector<double> nodes_;
  std::vector<double> mu_weights_;
  std::vector<double> cell_measures_;
};

/// Number of corrected nodes on each side of the origin.
inline constexpr int kEndCorrectionNodes = 8;

/// Correction coefficients c_i, i = 0..m-1, such that adding c_i h^{2k+1} to
/// the midpoint weight at |t| = (i + 1/2) h removes the error terms
/// zeta(-2k-2j, 1/2) g^{(2j)}(0) h^{2k+2j+1}, j < m.
std::vector<double> end_corrections(double kappa, int m = kEndCorrectionNodes);

class Grid {
 public:
  Grid(const Multiplicity& kappa, int n, double half_width);
  Grid(const Multiplicity& kappa, std::vector<int> sizes, double half_width);

  int dim() const { return static_cast<int>(axes_.size()); }
  const Multiplicity& kappa() const { return kappa_; }
  const Grid1D& axis(int j) const { return axes_[static_cast<std::size_t>(j)]; }
  std::vector<int> shape() const;
  std::size_t size() const { return size_; }

  /// Multi-index of a flat position; the last axis runs fastest.
  std::vector<int> unflatten(std::size_t flat) const;
  std::size_t flatten(std::span<const int> index) const;
  void point(std::size_t flat, std::span<double> out) const;
  std::vector<double> point(std::size_t flat) const;
  double weight(std::size_t flat) const;
  double cell_measure(std::size_t flat) const;

  bool operator==(const Grid& o) const { return kappa_ == o.kappa_ && axes_ == o.axes_; }

 private:
  Multiplicity kappa_;
  std::vector<Grid1D> axes_;
  std::size_t size_;
};

using GridPtr = std::shared_ptr<const Grid>;

GridPtr make_grid(const Multiplicity& kappa, int n, double half_width);

class GridFunction {
 public:
  explicit GridFunction(GridPtr grid);
  GridFunction(GridPtr grid, std::vector<cplx> values);

  template <class F>
  static GridFunction sample(GridPtr grid, F&& f) {
    GridFunction g(grid);
    std::vector<double> x(static_cast<std::size_t>(grid->dim()));
    for (std::size_t i = 0; i < grid->size(); ++i) {
      grid->point(i, x);
      g.values_[i] = cplx(f(std::span<const double>(x)));
    }
    return g;
  }

  const Grid& grid() const { return *grid_; }
  const GridPtr& grid_ptr() const { return grid_; }
  std::size_t size() const { return values_.size(); }
  const std::vector<cplx>& values() const { return values_; }
  std::vector<cplx>& values() { return values_; }
  cplx operator[](std::size_t i) const { return values_[i]; }
  cplx& operator[](std::size_t i) { return values_[i]; }

  /// (int |f|^p d mu_k)^{1/p} with the quadrature weights; p = inf gives max |f|.
  double norm(double p) const;
  /// int f d mu_k.
  cplx integral() const;
  double max_abs() const;

  GridFunction abs() const;
  GridFunction conj() const;
  GridFunction& operator+=(const GridFunction& o);
  GridFunction& operator-=(const GridFunction& o);
  GridFunction& operator*=(cplx s);
  /// Pointwise product.
  GridFunction& operator*=(const GridFunction& o);
  friend GridFunction operator+(GridFunction a, const GridFunction& b) { return a += b; }
  friend GridFunction operator-(GridFunction a, const GridFunction& b) { return a -= b; }
  friend GridFunction operator*(cplx s, GridFunction a) { return a *= s; }
  friend GridFunction operator*(GridFunction a, const GridFunction& b) { return a *= b; }

  /// CSV layout:
  ///   # dunkl-grid-function v1
  ///   # dim=<d> kappa=<k_1;...;k_d> sizes=<n_1;...;n_d> half_width=<L>
  ///   i_1,...,i_d,x_1,...,x_d,re,im
  /// one row per grid point in flat order (last axis fastest), values printed
  /// with 17 significant digits.
  void write_csv(std::ostream& os) const;
  static GridFunction read_csv(std::istream& is);

 private:
  void check_same_grid(const GridFunction& o) const;
  GridPtr grid_;
  std::vector<cplx> values_;
};

/// max_i |a_i - b_i|.
double max_difference(const GridFunction& a, const GridFunction& b);
/// ||a - b||_2 / ||b||_2.
double relative_l2_error(const GridFunction& a, const GridFunction& b);

}  // namespace dunkl
