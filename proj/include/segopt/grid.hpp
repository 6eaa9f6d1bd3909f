#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "segopt/geometry.hpp"

namespace segopt {

// All segments sharing an orientation and a line coordinate. Members are
// indices into the owning Representation, sorted by (lo, hi, id).
struct GridLine {
  Orientation orientation;
  Coord coordinate;
  std::vector<std::size_t> members;
};

// Horizontal lines first, each group sorted by coordinate.
std::vector<GridLine> grid_lines(const Representation& rep);

// Grid lines of one representation, split by orientation for range queries.
class LineIndex {
 public:
  explicit LineIndex(const Representation& rep);

  [[nodiscard]] std::span<const GridLine> lines(Orientation o) const;
  // Lines of orientation o whose coordinate lies in [lo, hi].
  [[nodiscard]] std::span<const GridLine> lines_in_range(Orientation o, const Coord& lo, const Coord& hi) const;
  [[nodiscard]] const GridLine* line_at(Orientation o, const Coord& coordinate) const;

 private:
  std::vector<GridLine> horizontal_;
  std::vector<GridLine> vertical_;
};

struct MeetingPoint {
  Point point;
  std::size_t first;   // segment index; `first` lies before `second` on the line
  std::size_t second;
  std::size_t line;    // index into grid_lines(rep)
};

// One entry per pair of collinear segments that touch. Throws OverlapError
// when two parallel segments share more than one point.
std::vector<MeetingPoint> meeting_points(const Representation& rep);

struct GridStats {
  std::size_t n = 0;
  std::size_t l_horizontal = 0;
  std::size_t l_vertical = 0;
  std::size_t l_even = 0;
  std::size_t l_odd = 0;
  std::size_t s_even = 0;
  std::size_t s_odd = 0;
  std::size_t t = 0;
  std::size_t t_horizontal = 0;
  std::size_t t_vertical = 0;

  [[nodiscard]] bool consistent() const;
  friend bool operator==(const GridStats&, const GridStats&) = default;
};

GridStats grid_stats(const Representation& rep);
GridStats grid_stats(std::span<const GridLine> lines);

struct GeneralPositionViolation {
  Point point;
  std::vector<SegmentId> ids;  // every segment through `point`, sorted
};

std::optional<GeneralPositionViolation> validate_general_position(const Representation& rep);

// Every triple of segments sharing a point, as (point, three indices). May
// list a point more than once. Used to repair random instances.
struct TriplePoint {
  Point point;
  std::size_t a;
  std::size_t b;
  std::size_t c;
};
std::vector<TriplePoint> find_triple_points(const Representation& rep, bool stop_at_first = false);

// Distinct coordinate values on one axis: line coordinates of segments
// orthogonal to the axis plus span endpoints of segments parallel to it.
std::vector<Coord> axis_values(const Representation& rep, Orientation axis_of);

// Smallest positive difference between distinct values; 1 when fewer than
// two distinct values exist.
Coord min_positive_gap(std::vector<Coord> values);

}  // namespace segopt
