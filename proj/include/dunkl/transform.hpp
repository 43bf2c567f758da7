#pragma once

// Dense Dunkl transform on tensor grids:
//   F_k f(xi) = c_k int f(y) E_k(-i xi, y) d mu_k(y),
//   f(x)      = c_k int F_k f(xi) E_k(i x, xi) d mu_k(xi).
// E_k is a tensor product, so both directions are d successive 1-D matrix
// products. Per-axis matrices are cached by (kappa_j, grid sizes, widths).

#include <functional>
#include <span>

#include "dunkl/grid.hpp"

namespace dunkl {

class DunklTransform {
 public:
  /// Space and frequency grids must share kappa and dimension.
  DunklTransform(GridPtr space, GridPtr frequency);

  const GridPtr& space() const { return space_; }
  const GridPtr& frequency() const { return frequency_; }

  GridFunction forward(const GridFunction& f) const;
  GridFunction inverse(const GridFunction& spectrum) const;

  /// F^{-1}(m . spectrum); m is evaluated on the frequency nodes.
  GridFunction inverse_with(const GridFunction& spectrum, const std::function<cplx(std::span<const double>)>& m) const;

 private:
  GridPtr space_;
  GridPtr frequency_;
};

/// Frequency grid defaults to the spatial grid.
GridFunction dunkl_transform(const GridFunction& f);
GridFunction dunkl_transform(const GridFunction& f, const GridPtr& frequency);
/// Spatial grid defaults to the frequency grid.
GridFunction inverse_transform(const GridFunction& spectrum);
GridFunction inverse_transform(const GridFunction& spectrum, const GridPtr& space);

/// | ||f||_2 - ||F f||_2 | / ||f||_2; rejects f = 0.
double plancherel_residual(const GridFunction& f);
double plancherel_residual(const GridFunction& f, const GridPtr& frequency);

/// Transforms `members` functions at once; values are laid out point-major
/// with the member index fastest. inverse selects E_k(ix, xi) over
/// E_k(-i xi, y).
std::vector<cplx> transform_batch(const std::vector<cplx>& values, std::size_t members, const Grid& from,
                                  const Grid& to, bool inverse);

/// Drop all cached transform matrices.
void clear_transform_cache();

}  // namespace dunkl
