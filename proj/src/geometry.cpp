#include "segopt/geometry.hpp"

#include <algorithm>
#include <utility>

#include "segopt/errors.hpp"

namespace segopt {

std::string to_string(const Point& p) { return "(" + p.x.to_string() + ", " + p.y.to_string() + ")"; }

Segment::Segment(SegmentId id, Orientation orientation, Coord line, Coord a, Coord b)
    : id_(std::move(id)), orientation_(orientation), line_(std::move(line)) {
  if (a == b) {
    throw DegenerateSegmentError("segment '" + id_ + "' has coincident endpoints");
  }
  if (b < a) std::swap(a, b);
  lo_ = std::move(a);
  hi_ = std::move(b);
}

Point Segment::at(const Coord& t) const {
  return horizontal() ? Point{t, line_} : Point{line_, t};
}

bool Segment::contains(const Point& p) const {
  if (horizontal()) return p.y == line_ && covers(p.x);
  return p.x == line_ && covers(p.y);
}

bool Segment::contains_in_interior(const Point& p) const {
  const Coord& fixed = horizontal() ? p.y : p.x;
  const Coord& varying = horizontal() ? p.x : p.y;
  return fixed == line_ && lo_ < varying && varying < hi_;
}

Segment Segment::with_span(Coord lo, Coord hi) const {
  return Segment(id_, orientation_, line_, std::move(lo), std::move(hi));
}

Segment Segment::with_line(Coord line) const { return Segment(id_, orientation_, std::move(line), lo_, hi_); }

bool intersects(const Segment& a, const Segment& b) {
  if (a.orientation() == b.orientation()) {
    return a.line() == b.line() && a.lo() <= b.hi() && b.lo() <= a.hi();
  }
  // a's line coordinate lies on b's varying axis and vice versa.
  return b.covers(a.line()) && a.covers(b.line());
}

bool canonical_less(const Segment& a, const Segment& b) {
  if (a.orientation() != b.orientation()) return a.orientation() < b.orientation();
  if (auto c = a.line() <=> b.line(); c != 0) return c < 0;
  if (auto c = a.lo() <=> b.lo(); c != 0) return c < 0;
  if (auto c = a.hi() <=> b.hi(); c != 0) return c < 0;
  return a.id() < b.id();
}

Representation::Representation(std::vector<Segment> segments) : segments_(std::move(segments)) {
  index_.reserve(segments_.size());
  for (std::size_t i = 0; i < segments_.size(); ++i) {
    if (!index_.emplace(segments_[i].id(), i).second) {
      throw DuplicateIdError("duplicate segment id '" + segments_[i].id() + "'");
    }
  }
}

std::optional<std::size_t> Representation::find(const SegmentId& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t Representation::index_of(const SegmentId& id) const {
  auto found = find(id);
  if (!found) throw UnknownIdError("unknown segment id '" + id + "'");
  return *found;
}

Representation Representation::canonicalized() const {
  std::vector<Segment> sorted = segments_;
  std::sort(sorted.begin(), sorted.end(), canonical_less);
  return Representation(std::move(sorted));
}

}  // namespace segopt
