#include "dunkl/covering.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace dunkl {

namespace {

void check_rect(const Rectangle& r) {
  if (!(r.radius > 0.0) || !std::isfinite(r.radius)) throw DomainError("rectangle radius must be positive and finite");
  for (double c : r.center) {
    if (!std::isfinite(c)) throw DomainError("rectangle center must be finite");
  }
}

}  // namespace

bool intersects(const Rectangle& a, const Rectangle& b) {
  if (a.center.size() != b.center.size()) throw DomainError("intersects: dimension mismatch");
  for (std::size_t j = 0; j < a.center.size(); ++j) {
    const double lo = std::max(interval_lower(a.center[j], a.radius), interval_lower(b.center[j], b.radius));
    const double hi = std::min(interval_upper(a.center[j], a.radius), interval_upper(b.center[j], b.radius));
    if (!(hi > lo)) return false;
  }
  return true;
}

Rectangle dilate(const Rectangle& rect, double factor) { return {rect.center, rect.radius * factor}; }

bool contains(const Rectangle& outer, const Rectangle& inner) {
  if (outer.center.size() != inner.center.size()) throw DomainError("contains: dimension mismatch");
  for (std::size_t j = 0; j < outer.center.size(); ++j) {
    if (interval_lower(inner.center[j], inner.radius) < interval_lower(outer.center[j], outer.radius)) return false;
    if (interval_upper(inner.center[j], inner.radius) > interval_upper(outer.center[j], outer.radius)) return false;
  }
  return true;
}

VitaliSelection vitali_select(const std::vector<Rectangle>& rects, double dilation) {
  if (!(dilation >= 1.0)) throw DomainError("vitali_select: dilation must be >= 1");
  for (const auto& r : rects) check_rect(r);

  std::vector<int> order(rects.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return rects[static_cast<std::size_t>(a)].radius > rects[static_cast<std::size_t>(b)].radius;
  });

  VitaliSelection sel;
  for (int i : order) {
    const Rectangle& r = rects[static_cast<std::size_t>(i)];
    const bool free = std::none_of(sel.selected.begin(), sel.selected.end(),
                                   [&](const Rectangle& s) { return intersects(s, r); });
    if (free) {
      sel.selected.push_back(r);
      sel.selected_index.push_back(i);
    }
  }

  sel.certificate.engulfed_by.assign(rects.size(), -1);
  for (std::size_t i = 0; i < rects.size(); ++i) {
    for (std::size_t s = 0; s < sel.selected.size(); ++s) {
      if (contains(dilate(sel.selected[s], dilation), rects[i])) {
        sel.certificate.engulfed_by[i] = static_cast<int>(s);
        break;
      }
    }
    if (sel.certificate.engulfed_by[i] < 0) sel.certificate.failures.push_back(static_cast<int>(i));
  }
  return sel;
}

double union_measure(const std::vector<Rectangle>& rects, const Multiplicity& kappa) {
  if (rects.empty()) return 0.0;
  const auto d = static_cast<std::size_t>(kappa.dim());
  for (const auto& r : rects) {
    check_rect(r);
    if (r.center.size() != d) throw DomainError("union_measure: dimension mismatch");
  }
  // Elementary intervals per axis.
  std::vector<std::vector<double>> cuts(d);
  for (std::size_t j = 0; j < d; ++j) {
    for (const auto& r : rects) {
      cuts[j].push_back(interval_lower(r.center[j], r.radius));
      cuts[j].push_back(interval_upper(r.center[j], r.radius));
    }
    std::sort(cuts[j].begin(), cuts[j].end());
    cuts[j].erase(std::unique(cuts[j].begin(), cuts[j].end()), cuts[j].end());
  }
  std::vector<std::size_t> shape(d);
  std::size_t total = 1;
  for (std::size_t j = 0; j < d; ++j) {
    shape[j] = cuts[j].size() - 1;
    total *= shape[j];
  }
  std::vector<char> covered(total, 0);
  for (const auto& r : rects) {
    std::vector<std::size_t> lo(d);
    std::vector<std::size_t> hi(d);
    for (std::size_t j = 0; j < d; ++j) {
      auto& c = cuts[j];
      lo[j] = static_cast<std::size_t>(std::lower_bound(c.begin(), c.end(), interval_lower(r.center[j], r.radius)) - c.begin());
      hi[j] = static_cast<std::size_t>(std::lower_bound(c.begin(), c.end(), interval_upper(r.center[j], r.radius)) - c.begin());
    }
    std::vector<std::size_t> idx = lo;
    while (true) {
      std::size_t flat = 0;
      for (std::size_t j = 0; j < d; ++j) flat = flat * shape[j] + idx[j];
      covered[flat] = 1;
      std::size_t j = d;
      while (j-- > 0) {
        if (++idx[j] < hi[j]) break;
        idx[j] = lo[j];
      }
      if (j == static_cast<std::size_t>(-1)) break;
    }
  }
  // Per-axis elementary measures, then sum over covered cells.
  std::vector<std::vector<double>> m(d);
  for (std::size_t j = 0; j < d; ++j) {
    for (std::size_t i = 0; i + 1 < cuts[j].size(); ++i) {
      m[j].push_back(measure_segment(cuts[j][i], cuts[j][i + 1], kappa[static_cast<int>(j)]));
    }
  }
  double acc = 0.0;
  for (std::size_t flat = 0; flat < total; ++flat) {
    if (!covered[flat]) continue;
    double w = 1.0;
    std::size_t rest = flat;
    for (std::size_t j = d; j-- > 0;) {
      w *= m[j][rest % shape[j]];
      rest /= shape[j];
    }
    acc += w;
  }
  return acc;
}

double covering_constant(const std::vector<Rectangle>& rects, const VitaliSelection& sel, const Multiplicity& kappa) {
  double s = 0.0;
  for (const auto& r : sel.selected) s += measure_rectangle(r, kappa);
  if (!(s > 0.0)) throw DomainError("covering_constant: empty selection");
  return union_measure(rects, kappa) / s;
}

}  // namespace dunkl
