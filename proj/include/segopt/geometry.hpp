#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "segopt/rational.hpp"

namespace segopt {

using Coord = Rational;
using SegmentId = std::string;

enum class Orientation : std::uint8_t { horizontal, vertical };

constexpr Orientation orthogonal(Orientation o) {
  return o == Orientation::horizontal ? Orientation::vertical : Orientation::horizontal;
}

constexpr char orientation_letter(Orientation o) { return o == Orientation::horizontal ? 'H' : 'V'; }

struct Point {
  Coord x;
  Coord y;

  friend bool operator==(const Point&, const Point&) = default;
  friend std::strong_ordering operator<=>(const Point&, const Point&) = default;
};

std::string to_string(const Point& p);

// Closed axis-parallel segment. `line` is the fixed coordinate (y for
// horizontal, x for vertical); [lo, hi] is the span on the varying axis.
class Segment {
 public:
  // Endpoints may be given in either order. Throws DegenerateSegmentError
  // when they coincide.
  Segment(SegmentId id, Orientation orientation, Coord line, Coord a, Coord b);

  [[nodiscard]] const SegmentId& id() const { return id_; }
  [[nodiscard]] Orientation orientation() const { return orientation_; }
  [[nodiscard]] bool horizontal() const { return orientation_ == Orientation::horizontal; }
  [[nodiscard]] bool vertical() const { return orientation_ == Orientation::vertical; }
  [[nodiscard]] const Coord& line() const { return line_; }
  [[nodiscard]] const Coord& lo() const { return lo_; }
  [[nodiscard]] const Coord& hi() const { return hi_; }

  // Point at varying-axis coordinate t (not necessarily inside the span).
  [[nodiscard]] Point at(const Coord& t) const;
  [[nodiscard]] Point low_end() const { return at(lo_); }
  [[nodiscard]] Point high_end() const { return at(hi_); }

  [[nodiscard]] bool covers(const Coord& t) const { return lo_ <= t && t <= hi_; }
  [[nodiscard]] bool contains(const Point& p) const;
  // True when p lies strictly between the endpoints.
  [[nodiscard]] bool contains_in_interior(const Point& p) const;

  [[nodiscard]] Segment with_span(Coord lo, Coord hi) const;
  [[nodiscard]] Segment with_line(Coord line) const;

  friend bool operator==(const Segment&, const Segment&) = default;

 private:
  SegmentId id_;
  Orientation orientation_;
  Coord line_;
  Coord lo_;
  Coord hi_;
};

// Closed-segment intersection test.
bool intersects(const Segment& a, const Segment& b);

// Canonical order: orientation, line, lo, hi, id.
bool canonical_less(const Segment& a, const Segment& b);

// Finite family of segments with unique ids; list order is the iteration
// order used by every algorithm.
class Representation {
 public:
  Representation() = default;
  // Throws DuplicateIdError.
  explicit Representation(std::vector<Segment> segments);

  [[nodiscard]] std::size_t size() const { return segments_.size(); }
  [[nodiscard]] bool empty() const { return segments_.empty(); }
  [[nodiscard]] const Segment& operator[](std::size_t i) const { return segments_[i]; }
  [[nodiscard]] const std::vector<Segment>& segments() const { return segments_; }
  [[nodiscard]] auto begin() const { return segments_.begin(); }
  [[nodiscard]] auto end() const { return segments_.end(); }

  [[nodiscard]] std::optional<std::size_t> find(const SegmentId& id) const;
  // Throws UnknownIdError.
  [[nodiscard]] std::size_t index_of(const SegmentId& id) const;

  [[nodiscard]] Representation canonicalized() const;

  friend bool operator==(const Representation& a, const Representation& b) { return a.segments_ == b.segments_; }

 private:
  std::vector<Segment> segments_;
  std::unordered_map<SegmentId, std::size_t> index_;
};

}  // namespace segopt
