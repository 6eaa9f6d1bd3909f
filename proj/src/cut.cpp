#include "segopt/cut.hpp"

#include <algorithm>
#include <stdexcept>

namespace segopt {

Cut::Cut(Point anchor) : anchor_{std::move(anchor)} { points_.direction = Direction::non_increasing; }

Cut::Cut(PointSequence cutting_points) : points_(std::move(cutting_points)) {
  if (!verify_monotone(points_)) throw std::invalid_argument("cutting points are not monotone");
}

std::pair<Coord, Coord> Cut::range_at(const Coord& x) const {
  const auto& v = vertices();
  const Coord s(slope());
  if (x < v.front().x) {
    Coord y = v.front().y + s * (x - v.front().x);
    return {y, y};
  }
  if (x > v.back().x) {
    Coord y = v.back().y + s * (x - v.back().x);
    return {y, y};
  }
  auto first = std::lower_bound(v.begin(), v.end(), x, [](const Point& p, const Coord& value) { return p.x < value; });
  if (first->x == x) {
    Coord lo = first->y;
    Coord hi = first->y;
    for (auto it = first; it != v.end() && it->x == x; ++it) {
      lo = std::min(lo, it->y);
      hi = std::max(hi, it->y);
    }
    return {lo, hi};
  }
  const Point& left = *(first - 1);
  const Point& right = *first;
  Coord y = left.y + (right.y - left.y) * (x - left.x) / (right.x - left.x);
  return {y, y};
}

Side Cut::side(const Point& p) const {
  auto [lo, hi] = range_at(p.x);
  if (p.y < lo) return Side::below;
  if (p.y > hi) return Side::above;
  return Side::on;
}

std::vector<Point> Cut::polyline(const Point& corner_lo, const Point& corner_hi) const {
  const auto& v = vertices();
  const bool falling = slope() < 0;
  // Horizontal run of each half-line before it leaves the box.
  Coord left = std::min(v.front().x - corner_lo.x, falling ? corner_hi.y - v.front().y : v.front().y - corner_lo.y);
  Coord right = std::min(corner_hi.x - v.back().x, falling ? v.back().y - corner_lo.y : corner_hi.y - v.back().y);
  left = std::max(left, Coord(0));
  right = std::max(right, Coord(0));
  const Coord s(slope());

  std::vector<Point> out;
  out.reserve(v.size() + 2);
  out.push_back(Point{v.front().x - left, v.front().y - s * left});
  for (const Point& p : v) {
    if (out.back() != p) out.push_back(p);
  }
  Point end{v.back().x + right, v.back().y + s * right};
  if (out.back() != end) out.push_back(end);
  return out;
}

Cut build_cut(std::span<const Point> candidates, const Representation& rep) {
  if (!candidates.empty()) return Cut(longest_monotone(candidates));
  Coord min_x(0);
  Coord min_y(0);
  bool first = true;
  for (const Segment& s : rep) {
    Point p = s.low_end();
    if (first || p.x < min_x) min_x = p.x;
    if (first || p.y < min_y) min_y = p.y;
    first = false;
  }
  return Cut(Point{min_x - 1, min_y - 1});
}

}  // namespace segopt
