#include "segopt/monotone.hpp"

#include <algorithm>
#include <stdexcept>

namespace segopt {

std::string_view to_string(Direction d) {
  return d == Direction::non_decreasing ? "non_decreasing" : "non_increasing";
}

bool verify_monotone(const PointSequence& seq) {
  for (std::size_t i = 1; i < seq.points.size(); ++i) {
    const Point& a = seq.points[i - 1];
    const Point& b = seq.points[i];
    if (b.x < a.x) return false;
    if (seq.direction == Direction::non_decreasing ? b.y < a.y : b.y > a.y) return false;
  }
  return true;
}

PointSequence longest_in_direction(std::span<const Point> points, Direction d) {
  std::vector<Point> sorted(points.begin(), points.end());
  const bool up = d == Direction::non_decreasing;
  std::sort(sorted.begin(), sorted.end(), [up](const Point& a, const Point& b) {
    if (a.x != b.x) return a.x < b.x;
    return up ? a.y < b.y : b.y < a.y;
  });
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    if (sorted[i] == sorted[i - 1]) throw std::invalid_argument("repeated point " + to_string(sorted[i]));
  }

  // With key = y (or -y), a monotone sequence is a non-decreasing run of keys
  // in sweep order. chain_from[i] is the longest such run starting at i,
  // computed by patience sorting over the reversed sequence with negated keys.
  const std::size_t m = sorted.size();
  std::vector<Coord> key(m);
  for (std::size_t i = 0; i < m; ++i) key[i] = up ? sorted[i].y : -sorted[i].y;
  std::vector<std::size_t> chain_from(m, 0);
  std::vector<Coord> tails;
  for (std::size_t i = m; i-- > 0;) {
    Coord k = -key[i];
    auto pos = std::upper_bound(tails.begin(), tails.end(), k);
    chain_from[i] = static_cast<std::size_t>(pos - tails.begin()) + 1;
    if (pos == tails.end()) {
      tails.push_back(std::move(k));
    } else {
      *pos = std::move(k);
    }
  }

  PointSequence out;
  out.direction = d;
  std::size_t need = tails.size();
  const Coord* last = nullptr;
  for (std::size_t i = 0; i < m && need > 0; ++i) {
    if (chain_from[i] >= need && (last == nullptr || *last <= key[i])) {
      out.points.push_back(sorted[i]);
      last = &key[i];
      --need;
    }
  }
  return out;
}

PointSequence longest_monotone(std::span<const Point> points) {
  PointSequence dec = longest_in_direction(points, Direction::non_increasing);
  PointSequence inc = longest_in_direction(points, Direction::non_decreasing);
  return inc.size() > dec.size() ? inc : dec;
}

}  // namespace segopt
