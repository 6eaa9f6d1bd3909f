#include "segopt/grid.hpp"

#include <algorithm>
#include <numeric>

#include "segopt/errors.hpp"

namespace segopt {
namespace {

bool member_less(const Representation& rep, std::size_t a, std::size_t b) {
  const Segment& sa = rep[a];
  const Segment& sb = rep[b];
  if (auto c = sa.lo() <=> sb.lo(); c != 0) return c < 0;
  if (auto c = sa.hi() <=> sb.hi(); c != 0) return c < 0;
  return sa.id() < sb.id();
}

std::vector<GridLine> lines_of(const Representation& rep, Orientation o) {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < rep.size(); ++i) {
    if (rep[i].orientation() == o) idx.push_back(i);
  }
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    if (auto c = rep[a].line() <=> rep[b].line(); c != 0) return c < 0;
    return member_less(rep, a, b);
  });
  std::vector<GridLine> out;
  for (std::size_t i : idx) {
    if (out.empty() || out.back().coordinate != rep[i].line()) {
      out.push_back(GridLine{o, rep[i].line(), {}});
    }
    out.back().members.push_back(i);
  }
  return out;
}

}  // namespace

std::vector<GridLine> grid_lines(const Representation& rep) {
  std::vector<GridLine> out = lines_of(rep, Orientation::horizontal);
  std::vector<GridLine> v = lines_of(rep, Orientation::vertical);
  out.insert(out.end(), std::make_move_iterator(v.begin()), std::make_move_iterator(v.end()));
  return out;
}

LineIndex::LineIndex(const Representation& rep)
    : horizontal_(lines_of(rep, Orientation::horizontal)), vertical_(lines_of(rep, Orientation::vertical)) {}

std::span<const GridLine> LineIndex::lines(Orientation o) const {
  return o == Orientation::horizontal ? std::span<const GridLine>(horizontal_) : std::span<const GridLine>(vertical_);
}

std::span<const GridLine> LineIndex::lines_in_range(Orientation o, const Coord& lo, const Coord& hi) const {
  auto all = lines(o);
  auto first = std::lower_bound(all.begin(), all.end(), lo,
                                [](const GridLine& g, const Coord& v) { return g.coordinate < v; });
  auto last = std::upper_bound(first, all.end(), hi,
                               [](const Coord& v, const GridLine& g) { return v < g.coordinate; });
  return {first, last};
}

const GridLine* LineIndex::line_at(Orientation o, const Coord& coordinate) const {
  auto range = lines_in_range(o, coordinate, coordinate);
  return range.empty() ? nullptr : &range.front();
}

std::vector<MeetingPoint> meeting_points(const Representation& rep) {
  std::vector<GridLine> lines = grid_lines(rep);
  std::vector<MeetingPoint> out;
  for (std::size_t li = 0; li < lines.size(); ++li) {
    const auto& m = lines[li].members;
    for (std::size_t a = 0; a < m.size(); ++a) {
      const Segment& sa = rep[m[a]];
      for (std::size_t b = a + 1; b < m.size() && rep[m[b]].lo() <= sa.hi(); ++b) {
        const Segment& sb = rep[m[b]];
        if (sb.lo() != sa.hi()) {
          throw OverlapError("parallel segments '" + sa.id() + "' and '" + sb.id() + "' overlap");
        }
        out.push_back(MeetingPoint{sa.at(sb.lo()), m[a], m[b], li});
      }
    }
  }
  return out;
}

bool GridStats::consistent() const {
  std::size_t lines = l_horizontal + l_vertical;
  if (l_even + l_odd != lines || s_even + s_odd != n) return false;
  if (lines == 0) return n == 0 && t == 0;
  return t * lines >= n && t == std::max(t_horizontal, t_vertical);
}

GridStats grid_stats(std::span<const GridLine> lines) {
  GridStats s;
  for (const GridLine& g : lines) {
    std::size_t k = g.members.size();
    s.n += k;
    (g.orientation == Orientation::horizontal ? s.l_horizontal : s.l_vertical) += 1;
    if (k % 2 == 0) {
      ++s.l_even;
      s.s_even += k;
    } else {
      ++s.l_odd;
      s.s_odd += k;
    }
    auto& t_dir = g.orientation == Orientation::horizontal ? s.t_horizontal : s.t_vertical;
    t_dir = std::max(t_dir, k);
  }
  s.t = std::max(s.t_horizontal, s.t_vertical);
  return s;
}

GridStats grid_stats(const Representation& rep) {
  std::vector<GridLine> lines = grid_lines(rep);
  return grid_stats(lines);
}

std::vector<TriplePoint> find_triple_points(const Representation& rep, bool stop_at_first) {
  // Three pairwise-intersecting axis-parallel segments always include two
  // collinear ones, so it suffices to inspect each collinear intersecting
  // pair and look for a third segment meeting their common part.
  LineIndex index(rep);
  std::vector<TriplePoint> out;
  for (Orientation o : {Orientation::horizontal, Orientation::vertical}) {
    for (const GridLine& line : index.lines(o)) {
      const auto& m = line.members;
      for (std::size_t a = 0; a < m.size(); ++a) {
        const Segment& sa = rep[m[a]];
        for (std::size_t b = a + 1; b < m.size() && rep[m[b]].lo() <= sa.hi(); ++b) {
          const Segment& sb = rep[m[b]];
          const Coord& common_lo = sb.lo();
          const Coord& common_hi = std::min(sa.hi(), sb.hi());
          for (std::size_t c = b + 1; c < m.size() && rep[m[c]].lo() <= common_hi; ++c) {
            out.push_back(TriplePoint{sa.at(rep[m[c]].lo()), m[a], m[b], m[c]});
            if (stop_at_first) return out;
          }
          for (const GridLine& cross : index.lines_in_range(orthogonal(o), common_lo, common_hi)) {
            for (std::size_t t : cross.members) {
              if (rep[t].covers(line.coordinate)) {
                out.push_back(TriplePoint{sa.at(cross.coordinate), m[a], m[b], t});
                if (stop_at_first) return out;
              }
            }
          }
        }
      }
    }
  }
  return out;
}

std::optional<GeneralPositionViolation> validate_general_position(const Representation& rep) {
  auto found = find_triple_points(rep, true);
  if (found.empty()) return std::nullopt;
  GeneralPositionViolation v{found.front().point, {}};
  for (const Segment& s : rep) {
    if (s.contains(v.point)) v.ids.push_back(s.id());
  }
  std::sort(v.ids.begin(), v.ids.end());
  return v;
}

std::vector<Coord> axis_values(const Representation& rep, Orientation axis_of) {
  std::vector<Coord> values;
  values.reserve(2 * rep.size());
  for (const Segment& s : rep) {
    if (s.orientation() == axis_of) {
      values.push_back(s.lo());
      values.push_back(s.hi());
    } else {
      values.push_back(s.line());
    }
  }
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return values;
}

Coord min_positive_gap(std::vector<Coord> values) {
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  if (values.size() < 2) return Coord(1);
  Coord best = values[1] - values[0];
  for (std::size_t i = 2; i < values.size(); ++i) {
    best = std::min(best, values[i] - values[i - 1]);
  }
  return best;
}

}  // namespace segopt
