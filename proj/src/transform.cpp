#include "dunkl/transform.hpp"

#include <Eigen/Dense>

#include <map>
#include <mutex>
#include <tuple>

#include "dunkl/special.hpp"

namespace dunkl {

namespace {

using Matrix = Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using MatrixPtr = std::shared_ptr<const Matrix>;

// (kappa, n_out, L_out, n_in, L_in, inverse)
using Key = std::tuple<double, int, double, int, double, bool>;

std::mutex cache_mutex;
std::map<Key, MatrixPtr> cache;

// Row a, column b: c_k E(+-i out_a, in_b) w_b.
MatrixPtr axis_matrix(const Grid1D& out, const Grid1D& in, bool inverse) {
  const Key key{in.kappa(), out.size(), out.half_width(), in.size(), in.half_width(), inverse};
  {
    const std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  const double c = gaussian_constant_1d(in.kappa());
  auto m = std::make_shared<Matrix>(out.size(), in.size());
  for (int a = 0; a < out.size(); ++a) {
    for (int b = 0; b < in.size(); ++b) {
      cplx e = dunkl_kernel_1d(in.kappa(), out.nodes()[static_cast<std::size_t>(a)],
                               in.nodes()[static_cast<std::size_t>(b)]);
      if (!inverse) e = std::conj(e);
      (*m)(a, b) = c * in.mu_weights()[static_cast<std::size_t>(b)] * e;
    }
  }
  const std::lock_guard<std::mutex> lock(cache_mutex);
  cache.emplace(key, m);
  return m;
}

// Multiply every axis-j fibre of a row-major tensor by mat.
std::vector<cplx> apply_axis(const std::vector<cplx>& in, const std::vector<int>& shape, int axis,
                             const Matrix& mat) {
  std::size_t pre = 1;
  std::size_t post = 1;
  for (int j = 0; j < axis; ++j) pre *= static_cast<std::size_t>(shape[static_cast<std::size_t>(j)]);
  for (std::size_t j = static_cast<std::size_t>(axis) + 1; j < shape.size(); ++j) {
    post *= static_cast<std::size_t>(shape[j]);
  }
  const auto n_in = static_cast<Eigen::Index>(mat.cols());
  const auto n_out = static_cast<Eigen::Index>(mat.rows());
  const auto p = static_cast<Eigen::Index>(post);
  std::vector<cplx> out(pre * static_cast<std::size_t>(n_out) * post);
  using Block = Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
  for (std::size_t k = 0; k < pre; ++k) {
    Eigen::Map<const Block> src(in.data() + k * static_cast<std::size_t>(n_in) * post, n_in, p);
    Eigen::Map<Block> dst(out.data() + k * static_cast<std::size_t>(n_out) * post, n_out, p);
    dst.noalias() = mat * src;
  }
  return out;
}

GridFunction transform_between(const GridFunction& f, const GridPtr& target, bool inverse) {
  return GridFunction(target, transform_batch(f.values(), 1, f.grid(), *target, inverse));
}

}  // namespace

std::vector<cplx> transform_batch(const std::vector<cplx>& values, std::size_t members, const Grid& from,
                                  const Grid& to, bool inverse) {
  if (to.dim() != from.dim() || !(to.kappa() == from.kappa())) {
    throw DomainError("dunkl transform: grids must share dimension and kappa");
  }
  if (values.size() != from.size() * members) throw DomainError("dunkl transform: batch size mismatch");
  std::vector<int> shape = from.shape();
  shape.push_back(static_cast<int>(members));
  std::vector<cplx> out = values;
  for (int j = 0; j < from.dim(); ++j) {
    const MatrixPtr m = axis_matrix(to.axis(j), from.axis(j), inverse);
    out = apply_axis(out, shape, j, *m);
    shape[static_cast<std::size_t>(j)] = to.axis(j).size();
  }
  return out;
}

DunklTransform::DunklTransform(GridPtr space, GridPtr frequency)
    : space_(std::move(space)), frequency_(std::move(frequency)) {
  if (!space_ || !frequency_) throw DomainError("DunklTransform: null grid");
  if (space_->dim() != frequency_->dim() || !(space_->kappa() == frequency_->kappa())) {
    throw DomainError("DunklTransform: grids must share dimension and kappa");
  }
}

GridFunction DunklTransform::forward(const GridFunction& f) const {
  if (!(f.grid() == *space_)) throw DomainError("DunklTransform::forward: function is not on the spatial grid");
  return transform_between(f, frequency_, false);
}

GridFunction DunklTransform::inverse(const GridFunction& spectrum) const {
  if (!(spectrum.grid() == *frequency_)) {
    throw DomainError("DunklTransform::inverse: spectrum is not on the frequency grid");
  }
  return transform_between(spectrum, space_, true);
}

GridFunction DunklTransform::inverse_with(const GridFunction& spectrum,
                                          const std::function<cplx(std::span<const double>)>& m) const {
  GridFunction g = spectrum;
  std::vector<double> xi(static_cast<std::size_t>(frequency_->dim()));
  for (std::size_t i = 0; i < g.size(); ++i) {
    frequency_->point(i, xi);
    g[i] *= m(xi);
  }
  return inverse(g);
}

GridFunction dunkl_transform(const GridFunction& f) { return transform_between(f, f.grid_ptr(), false); }

GridFunction dunkl_transform(const GridFunction& f, const GridPtr& frequency) {
  return transform_between(f, frequency, false);
}

GridFunction inverse_transform(const GridFunction& spectrum) {
  return transform_between(spectrum, spectrum.grid_ptr(), true);
}

GridFunction inverse_transform(const GridFunction& spectrum, const GridPtr& space) {
  return transform_between(spectrum, space, true);
}

double plancherel_residual(const GridFunction& f) { return plancherel_residual(f, f.grid_ptr()); }

double plancherel_residual(const GridFunction& f, const GridPtr& frequency) {
  const double n = f.norm(2.0);
  if (n == 0.0) throw DomainError("plancherel_residual: zero function");
  return std::abs(n - dunkl_transform(f, frequency).norm(2.0)) / n;
}

void clear_transform_cache() {
  const std::lock_guard<std::mutex> lock(cache_mutex);
  cache.clear();
}

}  // namespace dunkl
