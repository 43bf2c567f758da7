#pragma once

// Greedy Vitali-type selection for origin-truncated rectangles
//   R(z, r) = I(z_1, r) x ... x I(z_d, r),  I(z, r) = [max(0, |z| - r), |z| + r),
// and exact measure of finite unions of such rectangles.

#include <vector>

#include "dunkl/measure.hpp"

namespace dunkl {

struct CoverCertificate {
  /// For each input rectangle, the index into `selected` of a selected
  /// rectangle whose dilation contains it, or -1.
  std::vector<int> engulfed_by;
  /// Inputs with no engulfing selected rectangle.
  std::vector<int> failures;
  bool ok() const { return failures.empty(); }
};

struct VitaliSelection {
  std::vector<Rectangle> selected;
  std::vector<int> selected_index;  // positions in the input list
  CoverCertificate certificate;
};

/// True when the half-open boxes share a point.
bool intersects(const Rectangle& a, const Rectangle& b);
/// R(z, s r) for the dilation factor s.
Rectangle dilate(const Rectangle& rect, double factor);
/// a is a subset of b.
bool contains(const Rectangle& outer, const Rectangle& inner);

/// Largest-radius-first greedy disjoint subfamily (ties broken by input
/// order); the certificate checks engulfment at the given dilation.
VitaliSelection vitali_select(const std::vector<Rectangle>& rects, double dilation = 5.0);

/// mu_k of the union, exact by coordinate compression.
double union_measure(const std::vector<Rectangle>& rects, const Multiplicity& kappa);

/// mu_k(union of rects) / sum mu_k(selected).
double covering_constant(const std::vector<Rectangle>& rects, const VitaliSelection& sel, const Multiplicity& kappa);

}  // namespace dunkl
