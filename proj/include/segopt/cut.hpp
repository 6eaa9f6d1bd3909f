#pragma once

#include <span>
#include <utility>
#include <vector>

#include "segopt/geometry.hpp"
#include "segopt/monotone.hpp"

namespace segopt {

enum class Side { below, on, above };

// x-monotone polyline through a monotone sequence of cutting points, closed off
// by two half-lines. A non-increasing cut uses half-lines of slope -1, a
// non-decreasing one slope +1, so the cut's height is monotone in the same
// direction as its points everywhere. At an x shared by several cutting points
// the cut is the vertical interval between them.
class Cut {
 public:
  // Degenerate cut without cutting points: the slope -1 line through anchor.
  explicit Cut(Point anchor);
  // Points must be monotone in `direction` and in sweep order.
  explicit Cut(PointSequence cutting_points);

  [[nodiscard]] const PointSequence& cutting_points() const { return points_; }
  [[nodiscard]] Direction direction() const { return points_.direction; }
  // Number of cutting points.
  [[nodiscard]] std::size_t size() const { return points_.size(); }

  // [low, high] of the cut's height at x; low == high except at a vertical
  // piece.
  [[nodiscard]] std::pair<Coord, Coord> range_at(const Coord& x) const;
  [[nodiscard]] Side side(const Point& p) const;

  // Vertices of the cut clipped to the box [corner_lo, corner_hi]; the box
  // must contain every cutting point.
  [[nodiscard]] std::vector<Point> polyline(const Point& corner_lo, const Point& corner_hi) const;

 private:
  [[nodiscard]] const std::vector<Point>& vertices() const { return points_.points.empty() ? anchor_ : points_.points; }
  [[nodiscard]] int slope() const { return points_.direction == Direction::non_increasing ? -1 : 1; }

  PointSequence points_;
  std::vector<Point> anchor_;
};

// Longest monotone sequence of the candidates. With no candidates the cut is
// the degenerate line through (min x - 1, min y - 1) of the representation, so
// every segment lies strictly above it.
Cut build_cut(std::span<const Point> candidates, const Representation& rep);

}  // namespace segopt
