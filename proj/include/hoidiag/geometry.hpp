#pragma once

#include <algorithm>
#include <stdexcept>

#include "hoidiag/errors.hpp"

namespace hoidiag {

/// Axis-aligned box in continuous image coordinates (x2 > x1, y2 > y1).
/// Area is (x2-x1)*(y2-y1) with no pixel-inclusive +1 correction.
struct BoundingBox {
  double x1 = 0.0;
  double y1 = 0.0;
  double x2 = 0.0;
  double y2 = 0.0;
  int category_id = 0;
  double score = 1.0;

  double width() const { return x2 - x1; }
  double height() const { return y2 - y1; }
  double area() const { return width() * height(); }

  bool valid() const {
    return x2 > x1 && y2 > y1 && score >= 0.0 && score <= 1.0;
  }

  /// Coordinate equality; categories and scores are not part of geometry.
  bool same_coords(const BoundingBox& o) const {
    return x1 == o.x1 && y1 == o.y1 && x2 == o.x2 && y2 == o.y2;
  }
};

/// Intersection-over-union of two boxes. Ignores categories and scores.
/// Throws ValidationError on a degenerate (zero-area) box.
inline double iou(const BoundingBox& a, const BoundingBox& b) {
  if (a.x2 <= a.x1 || a.y2 <= a.y1 || b.x2 <= b.x1 || b.y2 <= b.y1) {
    throw ValidationError("iou: degenerate bounding box (zero or negative area)");
  }
  const double ix1 = std::max(a.x1, b.x1);
  const double iy1 = std::max(a.y1, b.y1);
  const double ix2 = std::min(a.x2, b.x2);
  const double iy2 = std::min(a.y2, b.y2);
  const double iw = ix2 - ix1;
  const double ih = iy2 - iy1;
  if (iw <= 0.0 || ih <= 0.0) return 0.0;
  const double inter = iw * ih;
  const double uni = a.area() + b.area() - inter;
  return inter / uni;
}

}  // namespace hoidiag
