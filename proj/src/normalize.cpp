#include "segopt/normalize.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

#include "segopt/errors.hpp"
#include "segopt/grid.hpp"

namespace segopt {
namespace {

void require_general_position(const Representation& rep) {
  if (auto v = validate_general_position(rep)) {
    std::string ids;
    for (const auto& id : v->ids) ids += (ids.empty() ? "" : ", ") + id;
    throw GeneralPositionError("segments " + ids + " share the point " + to_string(v->point));
  }
}

// Half the smallest gap between distinct values on the axis along which
// segments of orientation `o` vary.
Coord half_gap(const Representation& rep, Orientation o) {
  return min_positive_gap(axis_values(rep, o)) / Coord(2);
}

std::vector<std::size_t> neighbours(const Representation& rep, const Segment& s, std::size_t self) {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < rep.size(); ++j) {
    if (j != self && intersects(s, rep[j])) out.push_back(j);
  }
  return out;
}

}  // namespace

Representation trim_parallel_overlaps(const Representation& rep) {
  require_general_position(rep);
  LineIndex index(rep);
  const std::size_t n = rep.size();
  std::vector<std::optional<Coord>> new_lo(n);
  std::vector<std::optional<Coord>> new_hi(n);
  std::vector<std::optional<std::size_t>> host(n);

  for (Orientation o : {Orientation::horizontal, Orientation::vertical}) {
    for (const GridLine& line : index.lines(o)) {
      const auto& m = line.members;
      for (std::size_t a = 0; a < m.size(); ++a) {
        const Segment& sa = rep[m[a]];
        for (std::size_t b = a + 1; b < m.size() && rep[m[b]].lo() < sa.hi(); ++b) {
          const Segment& sb = rep[m[b]];
          if (sb.hi() <= sa.hi()) {
            host[m[b]] = m[a];
          } else if (sb.lo() == sa.lo()) {
            host[m[a]] = m[b];
          } else {
            // General position leaves each end of a segment at most one
            // overlapping partner.
            if (new_hi[m[a]] || new_lo[m[b]]) throw std::logic_error("overlapping trims on one end");
            Coord mid = Rational::midpoint(sb.lo(), sa.hi());
            new_hi[m[a]] = mid;
            new_lo[m[b]] = std::move(mid);
          }
        }
      }
    }
  }

  const Coord eps_x = half_gap(rep, Orientation::horizontal);
  const Coord eps_y = half_gap(rep, Orientation::vertical);
  std::vector<Segment> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Segment& s = rep[i];
    if (host[i]) {
      // Nested: its only neighbour is the host, so a short crossing stub
      // realizes the same adjacency.
      const Segment& h = rep[*host[i]];
      const Coord& eps = h.horizontal() ? eps_y : eps_x;
      out.emplace_back(s.id(), orthogonal(s.orientation()), Rational::midpoint(s.lo(), s.hi()), h.line() - eps,
                       h.line() + eps);
      continue;
    }
    if (new_lo[i] || new_hi[i]) {
      out.push_back(s.with_span(new_lo[i].value_or(s.lo()), new_hi[i].value_or(s.hi())));
    } else {
      out.push_back(s);
    }
  }
  return Representation(std::move(out));
}

Representation extend_orthogonal_contacts(const Representation& rep) {
  LineIndex index(rep);
  const Coord eps_x = half_gap(rep, Orientation::horizontal);
  const Coord eps_y = half_gap(rep, Orientation::vertical);

  auto touches_orthogonal = [&](const Segment& s, const Coord& end) {
    const GridLine* cross = index.line_at(orthogonal(s.orientation()), end);
    if (cross == nullptr) return false;
    return std::any_of(cross->members.begin(), cross->members.end(),
                       [&](std::size_t t) { return rep[t].covers(s.line()); });
  };

  std::vector<Segment> out;
  out.reserve(rep.size());
  std::vector<std::size_t> changed;
  for (std::size_t i = 0; i < rep.size(); ++i) {
    const Segment& s = rep[i];
    bool grow_lo = touches_orthogonal(s, s.lo());
    bool grow_hi = touches_orthogonal(s, s.hi());
    if (!grow_lo && !grow_hi) {
      out.push_back(s);
      continue;
    }
    const Coord& eps = s.horizontal() ? eps_x : eps_y;
    out.push_back(s.with_span(grow_lo ? s.lo() - eps : s.lo(), grow_hi ? s.hi() + eps : s.hi()));
    changed.push_back(i);
  }
  Representation result(std::move(out));
  for (std::size_t i : changed) {
    if (neighbours(rep, rep[i], i) != neighbours(result, result[i], i)) {
      throw ExtensionBlockedError("extending '" + rep[i].id() + "' would change its neighbourhood");
    }
  }
  return result;
}

Representation separate_paths(const Representation& rep) {
  (void)meeting_points(rep);  // throws OverlapError on shared intervals
  LineIndex index(rep);
  const Coord gap_x = min_positive_gap(axis_values(rep, Orientation::horizontal));
  const Coord gap_y = min_positive_gap(axis_values(rep, Orientation::vertical));

  std::vector<std::optional<Coord>> new_line(rep.size());
  for (Orientation o : {Orientation::horizontal, Orientation::vertical}) {
    // Horizontal lines move along y, vertical lines along x.
    const Coord& gap = o == Orientation::horizontal ? gap_y : gap_x;
    for (const GridLine& line : index.lines(o)) {
      const auto& m = line.members;
      std::vector<std::size_t> chain_of(m.size(), 0);
      for (std::size_t j = 1; j < m.size(); ++j) {
        chain_of[j] = chain_of[j - 1] + (rep[m[j]].lo() == rep[m[j - 1]].hi() ? 0 : 1);
      }
      const std::size_t chains = m.empty() ? 0 : chain_of.back() + 1;
      if (chains < 2) continue;
      const Coord step = gap / Coord(2 * chains);
      for (std::size_t j = 0; j < m.size(); ++j) {
        if (chain_of[j] > 0) new_line[m[j]] = line.coordinate + step * Coord(chain_of[j]);
      }
    }
  }

  std::vector<Segment> out;
  out.reserve(rep.size());
  for (std::size_t i = 0; i < rep.size(); ++i) {
    out.push_back(new_line[i] ? rep[i].with_line(*new_line[i]) : rep[i]);
  }
  return Representation(std::move(out));
}

std::variant<FavorableRepresentation, FavorabilityViolation> is_favorable(const Representation& rep) {
  LineIndex index(rep);
  for (Orientation o : {Orientation::horizontal, Orientation::vertical}) {
    for (const GridLine& line : index.lines(o)) {
      const auto& m = line.members;
      for (std::size_t a = 0; a + 1 < m.size(); ++a) {
        const Segment& sa = rep[m[a]];
        const Segment& sb = rep[m[a + 1]];
        if (sb.lo() < sa.hi()) {
          return FavorabilityViolation{"parallel overlap", "'" + sa.id() + "' and '" + sb.id() + "' share an interval",
                                       {sa.id(), sb.id()}};
        }
      }
    }
  }
  for (const Segment& s : rep) {
    for (const Coord* end : {&s.lo(), &s.hi()}) {
      const GridLine* cross = index.line_at(orthogonal(s.orientation()), *end);
      if (cross == nullptr) continue;
      for (std::size_t t : cross->members) {
        if (rep[t].covers(s.line())) {
          return FavorabilityViolation{"non-interior crossing",
                                       "'" + s.id() + "' ends on '" + rep[t].id() + "' at " + to_string(s.at(*end)),
                                       {s.id(), rep[t].id()}};
        }
      }
    }
  }
  for (Orientation o : {Orientation::horizontal, Orientation::vertical}) {
    for (const GridLine& line : index.lines(o)) {
      const auto& m = line.members;
      for (std::size_t a = 0; a + 1 < m.size(); ++a) {
        if (rep[m[a + 1]].lo() != rep[m[a]].hi()) {
          return FavorabilityViolation{"disconnected grid line",
                                       std::string(1, orientation_letter(o)) + " line at " + line.coordinate.to_string() +
                                           " holds more than one chain",
                                       {rep[m[a]].id(), rep[m[a + 1]].id()}};
        }
      }
    }
  }
  if (auto v = validate_general_position(rep)) {
    return FavorabilityViolation{"triple point", "segments meet at " + to_string(v->point), v->ids};
  }
  return FavorableRepresentation(rep, FavorabilityCertificate{true, true, true, true});
}

FavorableRepresentation make_favorable(const Representation& rep) {
  require_general_position(rep);
  Representation out = separate_paths(extend_orthogonal_contacts(trim_parallel_overlaps(rep)));
  auto checked = is_favorable(out);
  if (auto* v = std::get_if<FavorabilityViolation>(&checked)) {
    throw std::logic_error("normalization left a " + v->kind + ": " + v->detail);
  }
  return std::get<FavorableRepresentation>(std::move(checked));
}

}  // namespace segopt
