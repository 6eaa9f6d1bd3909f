#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "segopt/geometry.hpp"

namespace segopt {

enum class Direction { non_decreasing, non_increasing };

std::string_view to_string(Direction d);

// Both coordinates non-decreasing along the list (non_decreasing), or the
// first non-decreasing and the second non-increasing (non_increasing).
struct PointSequence {
  std::vector<Point> points;
  Direction direction = Direction::non_increasing;

  [[nodiscard]] std::size_t size() const { return points.size(); }
};

bool verify_monotone(const PointSequence& seq);

// Longest monotone subsequence of a set of distinct points, over both
// directions, in O(m log m). Ties between directions go to non_increasing;
// among optimal sequences of one direction the earliest in sweep order
// (x ascending, then y in the direction's order) wins. The length is at
// least ceil(sqrt(m)). Throws std::invalid_argument on repeated points.
PointSequence longest_monotone(std::span<const Point> points);

// Longest sequence in a fixed direction, same tie-breaking.
PointSequence longest_in_direction(std::span<const Point> points, Direction d);

}  // namespace segopt
