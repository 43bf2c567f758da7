#include "dunkl/maximal.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>

#include "dunkl/quadrature.hpp"
#include "dunkl/special.hpp"
#include "dunkl/transform.hpp"
#include "dunkl/translation.hpp"

namespace dunkl {

namespace {

constexpr int kCellNodes = 12;
constexpr int kSmoothCellNodes = 4;

using RealMatrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

struct CellRules {
  QuadratureRule legendre;
  QuadratureRule smooth;  // pieces bounded by cell edges only
  QuadratureRule origin;  // weight (1 + s)^{2k}
};

CellRules cell_rules(double kappa) {
  return {gauss_legendre(kCellNodes), gauss_legendre(kSmoothCellNodes), gauss_jacobi(0.0, 2.0 * kappa, kCellNodes)};
}

double overlap_measure(double a, double b, double c, double d, double kappa) {
  const double lo = std::max(a, c);
  const double hi = std::min(b, d);
  return hi > lo ? measure_segment(lo, hi, kappa) : 0.0;
}

double cube_cell(double kappa, double x, double r, double a, double b, const CellRules& rules) {
  // With u = -y the kernel is tau_x(chi_r)(u) on [-b, -a].
  const double p = -b;
  const double q = -a;
  if (kappa == 0.0) return overlap_measure(p, q, -x - r, -x + r, 0.0);
  const double sign = p >= 0.0 ? 1.0 : -1.0;
  const double lo_v = p >= 0.0 ? p : -q;
  const double hi_v = p >= 0.0 ? q : -p;

  const double ax = std::abs(x);
  const double band_lo = std::max(0.0, ax - r);
  const double band_hi = ax + r;
  const double full = r - ax;  // |u| <= full gives kernel value 1
  if (hi_v <= band_lo || lo_v >= band_hi) return 0.0;

  auto g = [&](double v) { return translate_indicator_interval(kappa, x, sign * v, r); };
  // The kernel behaves like a power dist^k at band_lo, band_hi and full. A
  // piece ending on one is integrated after v = s +- len w^4; a piece with
  // one nearby is split geometrically towards it.
  const double singular[3] = {band_lo, band_hi, full};
  auto distance_below = [&](double v) {
    double best = std::numeric_limits<double>::infinity();
    for (double s : singular) {
      if (s > 0.0 && s <= v) best = std::min(best, v - s);
    }
    return best;
  };
  auto distance_above = [&](double v) {
    double best = std::numeric_limits<double>::infinity();
    for (double s : singular) {
      if (s > 0.0 && s >= v) best = std::min(best, s - v);
    }
    return best;
  };
  auto gl = [&](double lo, double hi, const QuadratureRule& rule) {
    const double half = 0.5 * (hi - lo);
    const double mid = 0.5 * (hi + lo);
    double s = 0.0;
    for (std::size_t k = 0; k < rule.size(); ++k) {
      const double v = mid + half * rule.nodes[k];
      s += rule.weights[k] * g(v) * weight_h2_1d(v, kappa);
    }
    return half * s;
  };
  auto graded = [&](double from, double to) {
    // from is the singular end; to may lie on either side.
    const double len = to - from;
    double s = 0.0;
    for (std::size_t k = 0; k < rules.legendre.size(); ++k) {
      const double w = 0.5 * (1.0 + rules.legendre.nodes[k]);
      const double w3 = w * w * w;
      const double v = from + len * w3 * w;
      s += rules.legendre.weights[k] * 0.5 * g(v) * weight_h2_1d(v, kappa) * 4.0 * w3;
    }
    return std::abs(len) * s;
  };
  auto origin = [&](double hi) {
    const double half = 0.5 * hi;
    double s = 0.0;
    for (std::size_t k = 0; k < rules.origin.size(); ++k) {
      s += rules.origin.weights[k] * g(half * (1.0 + rules.origin.nodes[k]));
    }
    return std::pow(half, 2.0 * kappa + 1.0) * s;
  };
  constexpr double kTouching = 1e-9;
  std::function<double(double, double)> kernel_piece = [&](double c, double d) -> double {
    const double len = d - c;
    const double dl = c == 0.0 ? std::numeric_limits<double>::infinity() : distance_below(c);
    const double dr = distance_above(d);
    if (dl < len && dr < len) {
      const double m = 0.5 * (c + d);
      return kernel_piece(c, m) + kernel_piece(m, d);
    }
    if (dr < len) {
      if (c == 0.0) return origin(0.5 * d) + kernel_piece(0.5 * d, d);
      if (dr <= kTouching * len) return graded(d, c);
      return kernel_piece(c, d - dr) + gl(d - dr, d, rules.legendre);
    }
    if (dl < len) {
      if (dl <= kTouching * len) return graded(c, d);
      return gl(c, c + dl, rules.legendre) + kernel_piece(c + dl, d);
    }
    if (c == 0.0) return origin(d);
    const bool roomy = c == lo_v && d == hi_v && dl >= 2.0 * len && dr >= 2.0 * len;
    return gl(c, d, roomy ? rules.smooth : rules.legendre);
  };

  double cuts[5] = {lo_v, hi_v, band_lo, band_hi, full};
  std::sort(cuts, cuts + 5);
  double acc = 0.0;
  for (int i = 0; i + 1 < 5; ++i) {
    const double c = std::max(cuts[i], lo_v);
    const double d = std::min(cuts[i + 1], hi_v);
    if (!(d > c)) continue;
    const double m = 0.5 * (c + d);
    if (m >= band_hi || m < band_lo) continue;
    if (m <= full) {
      acc += measure_segment(c, d, kappa);
      continue;
    }
    acc += kernel_piece(c, d);
  }
  return acc;
}

double rect_cell(double kappa, double x, double r, double a, double b) {
  const double lo = interval_lower(x, r);
  const double hi = interval_upper(x, r);
  return overlap_measure(a, b, lo, hi, kappa) + overlap_measure(a, b, -hi, -lo, kappa);
}

// tau_{-x}(chi)(y) = tau_x(chi)(-y) on a symmetric grid gives
// m(n-1-i, n-1-k) = m(i, k); only the first half of the rows is integrated.
RealMatrix cube_matrix(const Grid1D& axis, double r, const CellRules& rules) {
  const int n = axis.size();
  RealMatrix m(n, n);
  for (int i = 0; i < n / 2; ++i) {
    const double x = axis.nodes()[static_cast<std::size_t>(i)];
    for (int k = 0; k < n; ++k) {
      const double v = cube_cell(axis.kappa(), x, r, axis.cell_lower(k), axis.cell_upper(k), rules);
      m(i, k) = v;
      m(n - 1 - i, n - 1 - k) = v;
    }
  }
  return m;
}

// Rows pre-divided by mu(I(x_i, r)).
RealMatrix rect_matrix(const Grid1D& axis, double r) {
  const int n = axis.size();
  RealMatrix m(n, n);
  for (int i = 0; i < n; ++i) {
    const double x = axis.nodes()[static_cast<std::size_t>(i)];
    const double norm = measure_segment(interval_lower(x, r), interval_upper(x, r), axis.kappa());
    for (int k = 0; k < n; ++k) m(i, k) = rect_cell(axis.kappa(), x, r, axis.cell_lower(k), axis.cell_upper(k)) / norm;
  }
  return m;
}

std::vector<double> apply_axis(const std::vector<double>& in, const std::vector<int>& shape, int axis,
                               const RealMatrix& mat) {
  std::size_t pre = 1;
  std::size_t post = 1;
  for (int j = 0; j < axis; ++j) pre *= static_cast<std::size_t>(shape[static_cast<std::size_t>(j)]);
  for (std::size_t j = static_cast<std::size_t>(axis) + 1; j < shape.size(); ++j) {
    post *= static_cast<std::size_t>(shape[j]);
  }
  const auto n = static_cast<std::size_t>(mat.rows());
  std::vector<double> out(in.size());
  for (std::size_t k = 0; k < pre; ++k) {
    Eigen::Map<const RealMatrix> src(in.data() + k * n * post, static_cast<Eigen::Index>(n),
                                     static_cast<Eigen::Index>(post));
    Eigen::Map<RealMatrix> dst(out.data() + k * n * post, static_cast<Eigen::Index>(n),
                               static_cast<Eigen::Index>(post));
    dst.noalias() = mat * src;
  }
  return out;
}

std::vector<double> abs_values(const GridFunction& f) {
  std::vector<double> out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = std::abs(f[i]);
  return out;
}

void check_common_grid(std::span<const GridFunction> fs) {
  if (fs.empty()) throw DomainError("maximal: empty input");
  for (const auto& f : fs) {
    if (!(f.grid() == fs.front().grid())) throw DomainError("maximal: inputs must share a grid");
  }
}

// sup over the schedule of |F^{-1}(F f . m_s)|, m_s(xi) = mult(s, |xi|).
// All inputs go through one batched transform per radius.
template <class Mult>
std::vector<GridFunction> spectral_sup(std::span<const GridFunction> fs, const MaximalContext& ctx, Mult&& mult) {
  check_common_grid(fs);
  const GridPtr space = fs.front().grid_ptr();
  const GridPtr freq = ctx.frequency ? ctx.frequency : spectral_frequency_grid(*space, ctx.schedule.r_max());
  const std::size_t members = fs.size();
  std::vector<cplx> stacked(space->size() * members);
  for (std::size_t n = 0; n < members; ++n) {
    for (std::size_t i = 0; i < space->size(); ++i) stacked[i * members + n] = fs[n][i];
  }
  const std::vector<cplx> spectra = transform_batch(stacked, members, *space, *freq, false);

  // The multiplier is radial: evaluate it once per distinct |xi|.
  std::vector<double> rho(freq->size());
  std::vector<double> xi(static_cast<std::size_t>(freq->dim()));
  for (std::size_t i = 0; i < freq->size(); ++i) {
    freq->point(i, xi);
    double s = 0.0;
    for (double v : xi) s += v * v;
    rho[i] = std::sqrt(s);
  }
  std::vector<double> distinct = rho;
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  std::vector<std::size_t> slot(freq->size());
  for (std::size_t i = 0; i < freq->size(); ++i) {
    slot[i] = static_cast<std::size_t>(std::lower_bound(distinct.begin(), distinct.end(), rho[i]) - distinct.begin());
  }
  std::vector<double> mvals(distinct.size());
  std::vector<double> best(space->size() * members, 0.0);
  std::vector<cplx> g(spectra.size());
  for (double s : ctx.schedule.radii()) {
    for (std::size_t k = 0; k < distinct.size(); ++k) mvals[k] = mult(s, distinct[k]);
    for (std::size_t i = 0; i < freq->size(); ++i) {
      const double m = mvals[slot[i]];
      for (std::size_t n = 0; n < members; ++n) g[i * members + n] = spectra[i * members + n] * m;
    }
    const std::vector<cplx> u = transform_batch(g, members, *freq, *space, true);
    for (std::size_t k = 0; k < u.size(); ++k) best[k] = std::max(best[k], std::abs(u[k]));
  }
  std::vector<GridFunction> out;
  for (std::size_t n = 0; n < members; ++n) {
    GridFunction h(space);
    for (std::size_t i = 0; i < space->size(); ++i) h[i] = best[i * members + n];
    out.push_back(std::move(h));
  }
  return out;
}

template <class Build>
std::vector<GridFunction> separable_sup(std::span<const GridFunction> fs, const RadiusSchedule& sched, Build&& build) {
  check_common_grid(fs);
  const Grid& grid = fs.front().grid();
  const std::vector<int> shape = grid.shape();
  std::vector<std::vector<double>> absf;
  std::vector<GridFunction> out;
  for (const auto& f : fs) {
    absf.push_back(abs_values(f));
    out.emplace_back(fs.front().grid_ptr());
  }
  for (double r : sched.radii()) {
    std::vector<RealMatrix> mats;
    double scale = 1.0;
    for (int j = 0; j < grid.dim(); ++j) {
      auto [mat, s] = build(grid.axis(j), r);
      mats.push_back(std::move(mat));
      scale *= s;
    }
    for (std::size_t n = 0; n < fs.size(); ++n) {
      std::vector<double> v = absf[n];
      for (int j = 0; j < grid.dim(); ++j) v = apply_axis(v, shape, j, mats[static_cast<std::size_t>(j)]);
      for (std::size_t i = 0; i < v.size(); ++i) out[n][i] = std::max(out[n][i].real(), v[i] / scale);
    }
  }
  return out;
}

double lr_norm_combine(double acc, double v, double r) { return acc + std::pow(v, r); }

}  // namespace

GridPtr spectral_frequency_grid(const Grid& space, double r_max, double half_width_cap) {
  const Grid1D& a = space.axis(0);
  const double cap = half_width_cap > 0.0 ? half_width_cap : a.half_width();
  const double half_width = std::min(std::numbers::pi / a.spacing(), cap);
  const double step = std::numbers::pi / (1.25 * (a.half_width() + r_max));
  const int n = 2 * static_cast<int>(std::ceil(half_width / step));
  return std::make_shared<const Grid>(space.kappa(), n, half_width);
}

RadiusSchedule::RadiusSchedule(double r_min, double r_max, int count) : r_min_(r_min), r_max_(r_max), count_(count) {
  if (!(r_min > 0.0) || !(r_max > r_min) || !std::isfinite(r_max)) {
    throw DomainError("RadiusSchedule: need 0 < r_min < r_max");
  }
  if (count < 2) throw DomainError("RadiusSchedule: count must be >= 2");
}

RadiusSchedule RadiusSchedule::for_grid(const Grid& grid, int count) {
  const Grid1D& a = grid.axis(0);
  return {0.5 * a.spacing(), 4.0 * a.half_width(), count};
}

double RadiusSchedule::ratio() const { return std::pow(r_max_ / r_min_, 1.0 / (count_ - 1)); }

std::vector<double> RadiusSchedule::radii() const {
  std::vector<double> out(static_cast<std::size_t>(count_));
  const double lr = std::log(r_max_ / r_min_);
  for (int i = 0; i < count_; ++i) out[static_cast<std::size_t>(i)] = r_min_ * std::exp(lr * i / (count_ - 1));
  out.back() = r_max_;
  return out;
}

RadiusSchedule RadiusSchedule::densified() const { return {r_min_, r_max_, 2 * count_ - 1}; }

std::string to_string(MaximalOperator op) {
  switch (op) {
    case MaximalOperator::Ball: return "M";
    case MaximalOperator::Cube: return "MQ";
    case MaximalOperator::Rect: return "MR";
    case MaximalOperator::Phi: return "Mphi";
  }
  return "?";
}

MaximalOperator parse_operator(const std::string& name) {
  if (name == "M" || name == "ball") return MaximalOperator::Ball;
  if (name == "MQ" || name == "cube") return MaximalOperator::Cube;
  if (name == "MR" || name == "rect") return MaximalOperator::Rect;
  if (name == "Mphi" || name == "phi") return MaximalOperator::Phi;
  throw DomainError("unknown maximal operator: " + name);
}

double cube_kernel_cell(double kappa, double x, double r, double a, double b) {
  if (a < 0.0 && b > 0.0) throw DomainError("cube_kernel_cell: cell must not straddle 0");
  if (x == 0.0) throw DomainError("cube_kernel_cell: x must be nonzero");
  return cube_cell(kappa, x, r, a, b, cell_rules(kappa));
}

double rect_kernel_cell(double kappa, double x, double r, double a, double b) { return rect_cell(kappa, x, r, a, b); }

std::vector<GridFunction> maximal_ball(std::span<const GridFunction> fs, const MaximalContext& ctx) {
  if (!(ctx.mollify_t >= 0.0)) throw DomainError("maximal_ball: mollification must be >= 0");
  const Multiplicity& k = fs.front().grid().kappa();
  const double alpha = k.gamma() + 0.5 * k.dim();
  const double t = ctx.mollify_t;
  return spectral_sup(fs, ctx, [alpha, t](double r, double rho) {
    return normalized_bessel(alpha, r * rho) * std::exp(-t * rho * rho);
  });
}

std::vector<GridFunction> maximal_phi(std::span<const GridFunction> fs, const RadialProfile& phi,
                                      const MaximalContext& ctx) {
  if (!phi.fourier) throw InadmissibleProfile("maximal_phi: profile has no transform");
  if (std::isnan(phi.admissible_moment)) admissibility_moment(phi, fs.front().grid().kappa());
  const auto& fourier = phi.fourier;
  return spectral_sup(fs, ctx, [&fourier](double t, double rho) { return fourier(t * rho); });
}

std::vector<GridFunction> maximal_cube(std::span<const GridFunction> fs, const RadiusSchedule& sched) {
  std::map<double, CellRules> rules;
  for (const auto& v : fs.front().grid().kappa().values()) rules.emplace(v, cell_rules(v));
  return separable_sup(fs, sched, [&rules](const Grid1D& axis, double r) {
    return std::make_pair(cube_matrix(axis, r, rules.at(axis.kappa())), measure_segment(-r, r, axis.kappa()));
  });
}

std::vector<GridFunction> maximal_rect(std::span<const GridFunction> fs, const RadiusSchedule& sched) {
  return separable_sup(fs, sched, [](const Grid1D& axis, double r) { return std::make_pair(rect_matrix(axis, r), 1.0); });
}

GridFunction maximal_ball(const GridFunction& f, const MaximalContext& ctx) {
  return maximal_ball(std::span<const GridFunction>(&f, 1), ctx).front();
}

GridFunction maximal_cube(const GridFunction& f, const RadiusSchedule& sched) {
  return maximal_cube(std::span<const GridFunction>(&f, 1), sched).front();
}

GridFunction maximal_rect(const GridFunction& f, const RadiusSchedule& sched) {
  return maximal_rect(std::span<const GridFunction>(&f, 1), sched).front();
}

GridFunction maximal_phi(const GridFunction& f, const RadialProfile& phi, const MaximalContext& ctx) {
  return maximal_phi(std::span<const GridFunction>(&f, 1), phi, ctx).front();
}

std::vector<GridFunction> maximal(MaximalOperator op, std::span<const GridFunction> fs, const MaximalContext& ctx) {
  switch (op) {
    case MaximalOperator::Ball: return maximal_ball(fs, ctx);
    case MaximalOperator::Cube: return maximal_cube(fs, ctx.schedule);
    case MaximalOperator::Rect: return maximal_rect(fs, ctx.schedule);
    case MaximalOperator::Phi:
      if (!ctx.profile) throw DomainError("maximal: M^phi needs a profile");
      return maximal_phi(fs, *ctx.profile, ctx);
  }
  throw DomainError("maximal: unknown operator");
}

GridFunction maximal(MaximalOperator op, const GridFunction& f, const MaximalContext& ctx) {
  return maximal(op, std::span<const GridFunction>(&f, 1), ctx).front();
}

double level_set_measure(const GridFunction& g, double lambda) {
  double m = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (std::abs(g[i]) > lambda) m += g.grid().cell_measure(i);
  }
  return m;
}

std::vector<double> default_lambdas(const GridFunction& g, int count, double span) {
  const double top = g.max_abs();
  if (top == 0.0) return {};
  std::vector<double> out;
  for (int i = 0; i < count; ++i) out.push_back(top * std::pow(span, -static_cast<double>(i + 1) / count));
  return out;
}

double weak_ratio_from(const GridFunction& maximal_values, double norm1, std::span<const double> lambdas) {
  if (!(norm1 > 0.0)) throw DomainError("weak_type_ratio: ||f||_1 must be positive");
  double best = 0.0;
  if (lambdas.empty()) {
    // Exact sup over lambda > 0: just below the k-th largest value the level
    // set is the k largest cells.
    const Grid& g = maximal_values.grid();
    std::vector<std::pair<double, double>> vm(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) vm[i] = {std::abs(maximal_values[i]), g.cell_measure(i)};
    std::sort(vm.begin(), vm.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
    double acc = 0.0;
    for (const auto& [v, m] : vm) {
      acc += m;
      best = std::max(best, v * acc / norm1);
    }
    return best;
  }
  for (double l : lambdas) best = std::max(best, l * level_set_measure(maximal_values, l) / norm1);
  return best;
}

double weak_type_ratio(MaximalOperator op, const GridFunction& f, const MaximalContext& ctx,
                       std::span<const double> lambdas) {
  return weak_ratio_from(maximal(op, f, ctx), f.norm(1.0), lambdas);
}

double strong_type_ratio(MaximalOperator op, const GridFunction& f, double p, const MaximalContext& ctx) {
  if (!(p > 1.0)) throw DomainError("strong_type_ratio: p must be > 1");
  const double n = f.norm(p);
  if (n == 0.0) throw DomainError("strong_type_ratio: ||f||_p must be positive");
  return maximal(op, f, ctx).norm(p) / n;
}

double weighted_inequality_ratio(const GridFunction& f, const GridFunction& w, double q, const RadiusSchedule& sched) {
  if (!(q > 1.0)) throw DomainError("weighted_inequality_ratio: q must be > 1");
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!(w[i].real() > 0.0)) throw DomainError("weighted_inequality_ratio: weight must be positive");
  }
  const GridFunction inputs[2] = {f, w};
  const auto m = maximal_rect(std::span<const GridFunction>(inputs, 2), sched);
  const Grid& g = f.grid();
  double lhs = 0.0;
  double rhs = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    lhs += g.weight(i) * std::pow(m[0][i].real(), q) * w[i].real();
    rhs += g.weight(i) * std::pow(std::abs(f[i]), q) * m[1][i].real();
  }
  if (!(rhs > 0.0)) throw DomainError("weighted_inequality_ratio: right-hand side vanishes");
  return lhs / rhs;
}

GridFunction fs_vector_norm(std::span<const GridFunction> seq, double r) {
  check_common_grid(seq);
  if (!(r >= 1.0)) throw DomainError("fs_vector_norm: r must be >= 1");
  GridFunction out(seq.front().grid_ptr());
  for (std::size_t i = 0; i < out.size(); ++i) {
    double acc = 0.0;
    for (const auto& f : seq) acc = lr_norm_combine(acc, std::abs(f[i]), r);
    out[i] = std::pow(acc, 1.0 / r);
  }
  return out;
}

double fefferman_stein_ratio(MaximalOperator op, std::span<const GridFunction> seq, double r, double p,
                             const MaximalContext& ctx, std::span<const double> lambdas) {
  if (!(r > 1.0)) throw DomainError("fefferman_stein_ratio: r must be > 1");
  if (!(p >= 1.0)) throw DomainError("fefferman_stein_ratio: p must be >= 1");
  const auto maxes = maximal(op, seq, ctx);
  const GridFunction lhs = fs_vector_norm(maxes, r);
  const GridFunction rhs = fs_vector_norm(seq, r);
  if (p == 1.0) return weak_ratio_from(lhs, rhs.norm(1.0), lambdas);
  const double denom = rhs.norm(p);
  if (denom == 0.0) throw DomainError("fefferman_stein_ratio: zero input");
  return lhs.norm(p) / denom;
}

MaximalReport domination_report(const GridFunction& f, const MaximalContext& ctx, double tol) {
  const Multiplicity& k = f.grid().kappa();
  const double c = cube_ball_ratio(k);
  const GridFunction mb = maximal_ball(f, ctx);
  const GridFunction absf = f.abs();
  const GridFunction mq = maximal_cube(absf, ctx.schedule);
  const GridFunction mr = maximal_rect(f, ctx.schedule);

  MaximalReport rep;
  rep.op = "M<=C*MQ|f|";
  rep.values = mb;
  // Spectral round-off floor of M relative to its peak.
  const double floor = 1e-12 * mb.max_abs();
  double worst = 0.0;
  double q_over_r = 0.0;
  double m_over_r = 0.0;
  std::size_t violations = 0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    const double bound = c * mq[i].real();
    const double m = mb[i].real();
    if (bound > 0.0) worst = std::max(worst, (m - bound) / bound);
    if (m > bound * (1.0 + tol) + floor) ++violations;
    if (mr[i].real() > 0.0) {
      q_over_r = std::max(q_over_r, mq[i].real() / mr[i].real());
      m_over_r = std::max(m_over_r, m / mr[i].real());
    }
  }
  rep.constants["cube_ball_ratio"] = c;
  rep.constants["max_relative_excess"] = worst;
  rep.constants["MQ_over_MR"] = q_over_r;
  rep.constants["M_over_MR"] = m_over_r;
  rep.constants["violations"] = static_cast<double>(violations);
  if (violations > 0) {
    rep.passed = false;
    rep.failures.push_back("M f exceeds cube_ball_ratio * M^Q|f| at " + std::to_string(violations) + " points");
  }
  return rep;
}

}  // namespace dunkl
