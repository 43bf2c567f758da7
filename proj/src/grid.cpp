#include "dunkl/grid.hpp"

#include <boost/math/special_functions/zeta.hpp>
#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

namespace dunkl {

namespace {

// zeta(s, 1/2) = (2^s - 1) zeta(s)
double hurwitz_half(double s) { return (std::exp2(s) - 1.0) * boost::math::zeta(s); }

std::vector<double> split_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ';')) out.push_back(std::stod(item));
  return out;
}

}  // namespace

std::vector<double> end_corrections(double kappa, int m) {
  if (!(kappa >= 0.0)) throw DomainError("end_corrections: kappa must be >= 0");
  if (m < 1) throw DomainError("end_corrections: need at least one node");
  using Mat = Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic>;
  using Vec = Eigen::Matrix<long double, Eigen::Dynamic, 1>;
  Mat a(m, m);
  Vec b(m);
  for (int j = 0; j < m; ++j) {
    for (int i = 0; i < m; ++i) a(j, i) = std::pow(static_cast<long double>(i) + 0.5L, 2 * j);
    b(j) = -hurwitz_half(-2.0 * kappa - 2.0 * j);
  }
  const Vec c = a.fullPivLu().solve(b);
  std::vector<double> out(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) out[static_cast<std::size_t>(i)] = static_cast<double>(c(i));
  return out;
}

Grid1D::Grid1D(double kappa, int n, double half_width)
    : kappa_(kappa), half_width_(half_width), spacing_(0.0) {
  if (!(kappa >= 0.0) || !std::isfinite(kappa)) throw DomainError("Grid1D: kappa must be finite and >= 0");
  if (n < 2 || n % 2 != 0) throw DomainError("Grid1D: size must be even and >= 2");
  if (!(half_width > 0.0) || !std::isfinite(half_width)) throw DomainError("Grid1D: half-width must be positive");
  spacing_ = 2.0 * half_width / n;
  const auto nn = static_cast<std::size_t>(n);
  nodes_.resize(nn);
  mu_weights_.resize(nn);
  cell_measures_.resize(nn);
  for (int i = 0; i < n; ++i) {
    const auto ii = static_cast<std::size_t>(i);
    nodes_[ii] = -half_width + (i + 0.5) * spacing_;
    mu_weights_[ii] = spacing_ * weight_h2_1d(nodes_[ii], kappa);
    cell_measures_[ii] = measure_segment(cell_lower(i), cell_upper(i), kappa);
  }
  if (kappa > 0.0) {
    const int half = n / 2;
    const int m = std::min(kEndCorrectionNodes, half);
    const std::vector<double> c = end_corrections(kappa, m);
    const double scale = std::pow(spacing_, 2.0 * kappa + 1.0);
    for (int i = 0; i < m; ++i) {
      mu_weights_[static_cast<std::size_t>(half + i)] += c[static_cast<std::size_t>(i)] * scale;
      mu_weights_[static_cast<std::size_t>(half - 1 - i)] += c[static_cast<std::size_t>(i)] * scale;
    }
  }
}

Grid::Grid(const Multiplicity& kappa, int n, double half_width)
    : Grid(kappa, std::vector<int>(static_cast<std::size_t>(kappa.dim()), n), half_width) {}

Grid::Grid(const Multiplicity& kappa, std::vector<int> sizes, double half_width) : kappa_(kappa), size_(1) {
  if (static_cast<int>(sizes.size()) != kappa.dim()) throw DomainError("Grid: one size per axis required");
  for (int j = 0; j < kappa.dim(); ++j) {
    axes_.emplace_back(kappa[j], sizes[static_cast<std::size_t>(j)], half_width);
    size_ *= static_cast<std::size_t>(axes_.back().size());
  }
}

std::vector<int> Grid::shape() const {
  std::vector<int> s;
  for (const auto& a : axes_) s.push_back(a.size());
  return s;
}

std::vector<int> Grid::unflatten(std::size_t flat) const {
  std::vector<int> idx(axes_.size());
  for (std::size_t j = axes_.size(); j-- > 0;) {
    const auto n = static_cast<std::size_t>(axes_[j].size());
    idx[j] = static_cast<int>(flat % n);
    flat /= n;
  }
  return idx;
}

std::size_t Grid::flatten(std::span<const int> index) const {
  std::size_t flat = 0;
  for (std::size_t j = 0; j < axes_.size(); ++j) {
    flat = flat * static_cast<std::size_t>(axes_[j].size()) + static_cast<std::size_t>(index[j]);
  }
  return flat;
}

void Grid::point(std::size_t flat, std::span<double> out) const {
  for (std::size_t j = axes_.size(); j-- > 0;) {
    const auto n = static_cast<std::size_t>(axes_[j].size());
    out[j] = axes_[j].nodes()[flat % n];
    flat /= n;
  }
}

std::vector<double> Grid::point(std::size_t flat) const {
  std::vector<double> x(axes_.size());
  point(flat, x);
  return x;
}

double Grid::weight(std::size_t flat) const {
  double w = 1.0;
  for (std::size_t j = axes_.size(); j-- > 0;) {
    const auto n = static_cast<std::size_t>(axes_[j].size());
    w *= axes_[j].mu_weights()[flat % n];
    flat /= n;
  }
  return w;
}

double Grid::cell_measure(std::size_t flat) const {
  double w = 1.0;
  for (std::size_t j = axes_.size(); j-- > 0;) {
    const auto n = static_cast<std::size_t>(axes_[j].size());
    w *= axes_[j].cell_measures()[flat % n];
    flat /= n;
  }
  return w;
}

GridPtr make_grid(const Multiplicity& kappa, int n, double half_width) {
  return std::make_shared<const Grid>(kappa, n, half_width);
}

GridFunction::GridFunction(GridPtr grid) : grid_(std::move(grid)) {
  if (!grid_) throw DomainError("GridFunction: null grid");
  values_.assign(grid_->size(), cplx(0.0));
}

GridFunction::GridFunction(GridPtr grid, std::vector<cplx> values) : grid_(std::move(grid)), values_(std::move(values)) {
  if (!grid_) throw DomainError("GridFunction: null grid");
  if (values_.size() != grid_->size()) throw DomainError("GridFunction: value count does not match the grid");
}

double GridFunction::norm(double p) const {
  if (std::isinf(p)) return max_abs();
  if (!(p >= 1.0)) throw DomainError("GridFunction::norm: p must be >= 1");
  double acc = 0.0;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    const double a = std::abs(values_[i]);
    if (a == 0.0) continue;
    acc += grid_->weight(i) * (p == 2.0 ? a * a : std::pow(a, p));
  }
  return std::pow(acc, 1.0 / p);
}

cplx GridFunction::integral() const {
  cplx acc = 0.0;
  for (std::size_t i = 0; i < values_.size(); ++i) acc += grid_->weight(i) * values_[i];
  return acc;
}

double GridFunction::max_abs() const {
  double m = 0.0;
  for (const cplx& v : values_) m = std::max(m, std::abs(v));
  return m;
}

GridFunction GridFunction::abs() const {
  GridFunction out(grid_);
  for (std::size_t i = 0; i < values_.size(); ++i) out.values_[i] = std::abs(values_[i]);
  return out;
}

GridFunction GridFunction::conj() const {
  GridFunction out(grid_);
  for (std::size_t i = 0; i < values_.size(); ++i) out.values_[i] = std::conj(values_[i]);
  return out;
}

void GridFunction::check_same_grid(const GridFunction& o) const {
  if (grid_ != o.grid_ && !(*grid_ == *o.grid_)) throw DomainError("GridFunction: grids differ");
}

GridFunction& GridFunction::operator+=(const GridFunction& o) {
  check_same_grid(o);
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += o.values_[i];
  return *this;
}

GridFunction& GridFunction::operator-=(const GridFunction& o) {
  check_same_grid(o);
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] -= o.values_[i];
  return *this;
}

GridFunction& GridFunction::operator*=(cplx s) {
  for (cplx& v : values_) v *= s;
  return *this;
}

GridFunction& GridFunction::operator*=(const GridFunction& o) {
  check_same_grid(o);
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] *= o.values_[i];
  return *this;
}

void GridFunction::write_csv(std::ostream& os) const {
  const Grid& g = *grid_;
  const auto old_precision = os.precision(17);
  os << "# dunkl-grid-function v1\n";
  os << "# dim=" << g.dim() << " kappa=";
  for (int j = 0; j < g.dim(); ++j) os << (j ? ";" : "") << g.kappa()[j];
  os << " sizes=";
  for (int j = 0; j < g.dim(); ++j) os << (j ? ";" : "") << g.axis(j).size();
  os << " half_width=" << g.axis(0).half_width() << "\n";
  for (int j = 0; j < g.dim(); ++j) os << "i_" << j + 1 << ",";
  for (int j = 0; j < g.dim(); ++j) os << "x_" << j + 1 << ",";
  os << "re,im\n";
  std::vector<double> x(static_cast<std::size_t>(g.dim()));
  for (std::size_t i = 0; i < values_.size(); ++i) {
    const auto idx = g.unflatten(i);
    g.point(i, x);
    for (int v : idx) os << v << ",";
    for (double c : x) os << c << ",";
    os << values_[i].real() << "," << values_[i].imag() << "\n";
  }
  os.precision(old_precision);
}

GridFunction GridFunction::read_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line) || line != "# dunkl-grid-function v1") {
    throw DomainError("GridFunction::read_csv: missing format header");
  }
  if (!std::getline(is, line) || line.rfind("# ", 0) != 0) {
    throw DomainError("GridFunction::read_csv: missing parameter line");
  }
  std::stringstream params(line.substr(2));
  std::string field;
  int dim = 0;
  std::vector<double> kappa;
  std::vector<double> sizes;
  double half_width = 0.0;
  while (params >> field) {
    const auto eq = field.find('=');
    if (eq == std::string::npos) throw DomainError("GridFunction::read_csv: malformed parameter " + field);
    const std::string key = field.substr(0, eq);
    const std::string value = field.substr(eq + 1);
    if (key == "dim") dim = std::stoi(value);
    else if (key == "kappa") kappa = split_list(value);
    else if (key == "sizes") sizes = split_list(value);
    else if (key == "half_width") half_width = std::stod(value);
    else throw DomainError("GridFunction::read_csv: unknown parameter " + key);
  }
  if (dim < 1 || static_cast<int>(kappa.size()) != dim || static_cast<int>(sizes.size()) != dim) {
    throw DomainError("GridFunction::read_csv: inconsistent parameters");
  }
  std::vector<int> n;
  for (double s : sizes) n.push_back(static_cast<int>(s));
  auto grid = std::make_shared<const Grid>(Multiplicity(kappa), n, half_width);
  std::getline(is, line);  // column names
  std::vector<cplx> values;
  values.reserve(grid->size());
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::stringstream row(line);
    std::string cell;
    std::vector<std::string> cells;
    while (std::getline(row, cell, ',')) cells.push_back(cell);
    if (static_cast<int>(cells.size()) != 2 * dim + 2) throw DomainError("GridFunction::read_csv: bad row width");
    values.emplace_back(std::stod(cells[cells.size() - 2]), std::stod(cells.back()));
  }
  return GridFunction(grid, std::move(values));
}

double max_difference(const GridFunction& a, const GridFunction& b) {
  if (a.size() != b.size()) throw DomainError("max_difference: size mismatch");
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

double relative_l2_error(const GridFunction& a, const GridFunction& b) {
  const GridFunction diff = a - b;
  const double denom = b.norm(2.0);
  if (denom == 0.0) throw DomainError("relative_l2_error: reference is zero");
  return diff.norm(2.0) / denom;
}

}  // namespace dunkl
