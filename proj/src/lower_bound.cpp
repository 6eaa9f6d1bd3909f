#include "segopt/lower_bound.hpp"

#include <algorithm>
#include <array>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "segopt/errors.hpp"
#include "segopt/solution_io.hpp"

namespace segopt {
namespace {

Rational quarter(std::size_t v) { return Rational(static_cast<std::int64_t>(v), 4); }

// Every second entry starting from the first.
void take_alternate(const std::vector<std::size_t>& ordered, std::vector<std::size_t>& out) {
  for (std::size_t i = 0; i < ordered.size(); i += 2) out.push_back(ordered[i]);
}

TechniqueResult make_result(Technique t, const Representation& rep, std::span<const std::size_t> chosen,
                            const GridStats& stats) {
  TechniqueResult r;
  r.technique = t;
  r.origin = t;
  r.independent_set = IndependentSet::from_indices(rep, chosen);
  r.achieved = r.independent_set.size();
  r.guarantee = guarantee_for(t, stats);
  return r;
}

// Fullest line of one orientation; ties go to the smallest coordinate.
const GridLine* fullest(std::span<const GridLine> lines) {
  const GridLine* best = nullptr;
  for (const GridLine& g : lines) {
    if (best == nullptr || g.members.size() > best->members.size()) best = &g;
  }
  return best;
}

}  // namespace

std::string_view to_string(Technique t) {
  switch (t) {
    case Technique::odd: return "odd";
    case Technique::line: return "line";
    case Technique::even: return "even";
    case Technique::best: return "best";
  }
  return "?";
}

Technique parse_technique(std::string_view name) {
  for (Technique t : {Technique::odd, Technique::line, Technique::even, Technique::best}) {
    if (to_string(t) == name) return t;
  }
  throw std::invalid_argument("unknown technique '" + std::string(name) + "'");
}

Bound odd_guarantee(const GridStats& s) { return Bound::rational(quarter(s.n) + quarter(s.l_odd)); }

Bound line_guarantee(const GridStats& s) { return Bound::rational(quarter(s.n + s.t)); }

Bound even_guarantee(const GridStats& s) {
  return Bound{quarter(s.n) - quarter(s.l_odd), Rational(1, 4), Rational(2 * s.s_even)};
}

Bound best_guarantee(const GridStats& s) {
  return Bound{quarter(s.n), Rational(1, 4), Rational(static_cast<std::int64_t>(s.n), 3)};
}

Bound guarantee_for(Technique t, const GridStats& s) {
  switch (t) {
    case Technique::odd: return odd_guarantee(s);
    case Technique::line: return line_guarantee(s);
    case Technique::even: return even_guarantee(s);
    case Technique::best: return best_guarantee(s);
  }
  throw std::logic_error("unknown technique");
}

bool TechniqueResult::certified(const Representation& rep) const {
  return achieved == independent_set.size() && is_independent(rep, independent_set) &&
         guarantee.satisfied_by(Rational(achieved));
}

std::vector<Point> candidate_points(const FavorableRepresentation& frep) {
  const Representation& rep = frep.rep();
  std::vector<Point> out;
  for (const GridLine& g : grid_lines(rep)) {
    const auto& m = g.members;
    if (m.size() % 2 != 0) continue;
    for (std::size_t i = 0; i + 1 < m.size(); i += 2) {
      Point p = rep[m[i]].high_end();
      if (p != rep[m[i + 1]].low_end()) throw std::logic_error("grid line is not a touching chain at " + to_string(p));
      out.push_back(std::move(p));
    }
  }
  return out;
}

TechniqueResult odd_technique(const FavorableRepresentation& frep) {
  const Representation& rep = frep.rep();
  std::vector<GridLine> lines = grid_lines(rep);
  std::vector<std::size_t> horizontal;
  std::vector<std::size_t> vertical;
  for (const GridLine& g : lines) {
    take_alternate(g.members, g.orientation == Orientation::horizontal ? horizontal : vertical);
  }
  const auto& chosen = horizontal.size() >= vertical.size() ? horizontal : vertical;
  return make_result(Technique::odd, rep, chosen, grid_stats(lines));
}

TechniqueResult line_technique(const FavorableRepresentation& frep) {
  const Representation& rep = frep.rep();
  LineIndex index(rep);
  std::vector<std::size_t> by_horizontal;
  std::vector<std::size_t> by_vertical;
  for (Orientation o : {Orientation::horizontal, Orientation::vertical}) {
    auto& family = o == Orientation::horizontal ? by_horizontal : by_vertical;
    if (const GridLine* g = fullest(index.lines(o))) family = g->members;
    for (const GridLine& cross : index.lines(orthogonal(o))) {
      family.insert(family.end(), cross.members.begin(), cross.members.end());
    }
  }
  auto& family = by_horizontal.size() >= by_vertical.size() ? by_horizontal : by_vertical;
  std::sort(family.begin(), family.end());

  std::vector<Segment> selected;
  selected.reserve(family.size());
  for (std::size_t i : family) selected.push_back(rep[i]);
  IntersectionGraph g = build_graph(Representation(std::move(selected)));
  auto coloring = two_coloring(g);
  if (!coloring) throw NotBipartiteError("single-line family induces an odd cycle");

  // Larger colour class per connected component.
  std::vector<std::size_t> chosen;
  std::vector<std::uint8_t> seen(g.size(), 0);
  for (std::size_t root = 0; root < g.size(); ++root) {
    if (seen[root]) continue;
    std::vector<std::size_t> component{root};
    seen[root] = 1;
    for (std::size_t head = 0; head < component.size(); ++head) {
      for (std::uint32_t w : g.neighbors(component[head])) {
        if (!seen[w]) {
          seen[w] = 1;
          component.push_back(w);
        }
      }
    }
    std::array<std::vector<std::size_t>, 2> classes;
    for (std::size_t v : component) classes[(*coloring)[v]].push_back(family[v]);
    const auto& larger = classes[0].size() >= classes[1].size() ? classes[0] : classes[1];
    chosen.insert(chosen.end(), larger.begin(), larger.end());
  }
  return make_result(Technique::line, rep, chosen, grid_stats(rep));
}

TechniqueResult even_technique(const FavorableRepresentation& frep) {
  const Representation& rep = frep.rep();
  std::vector<GridLine> lines = grid_lines(rep);
  GridStats stats = grid_stats(lines);
  if (stats.s_even == 0) {
    TechniqueResult r = odd_technique(frep);
    r.technique = Technique::even;
    r.guarantee = even_guarantee(stats);
    return r;
  }

  std::vector<Point> candidates = candidate_points(frep);
  Cut cut = build_cut(candidates, rep);
  const bool falling = cut.direction() == Direction::non_increasing;
  auto not_above = [&](const Point& p) { return cut.side(p) != Side::above; };
  auto not_below = [&](const Point& p) { return cut.side(p) != Side::below; };

  std::vector<std::size_t> blue;
  std::vector<std::size_t> orange;
  for (const GridLine& g : lines) {
    // Members run bottom-up or left-to-right.
    std::vector<std::size_t> forward;
    std::vector<std::size_t> backward;
    auto fill = [&](auto&& keep, std::vector<std::size_t>& dst, bool reversed) {
      dst.clear();
      for (std::size_t i : g.members) {
        if (keep(rep[i])) dst.push_back(i);
      }
      if (reversed) std::reverse(dst.begin(), dst.end());
    };
    if (g.orientation == Orientation::vertical) {
      fill([&](const Segment& s) { return not_above(s.high_end()); }, forward, false);
      take_alternate(forward, blue);
      fill([&](const Segment& s) { return not_below(s.low_end()); }, backward, true);
      take_alternate(backward, orange);
    } else if (falling) {
      fill([&](const Segment& s) { return not_below(s.low_end()); }, backward, true);
      take_alternate(backward, blue);
      fill([&](const Segment& s) { return not_above(s.high_end()); }, forward, false);
      take_alternate(forward, orange);
    } else {
      fill([&](const Segment& s) { return not_below(s.high_end()); }, forward, false);
      take_alternate(forward, blue);
      fill([&](const Segment& s) { return not_above(s.low_end()); }, backward, true);
      take_alternate(backward, orange);
    }
  }

  const auto& chosen = blue.size() >= orange.size() ? blue : orange;
  TechniqueResult r = make_result(Technique::even, rep, chosen, stats);
  r.even = EvenArtifacts{std::move(cut), IndependentSet::from_indices(rep, blue),
                         IndependentSet::from_indices(rep, orange)};
  return r;
}

TechniqueResult best_lower_bound(const FavorableRepresentation& frep) {
  TechniqueResult best = odd_technique(frep);
  for (TechniqueResult r : {line_technique(frep), even_technique(frep)}) {
    if (r.achieved > best.achieved) best = std::move(r);
  }
  best.technique = Technique::best;
  best.guarantee = best_guarantee(grid_stats(frep.rep()));
  return best;
}

TechniqueResult run_technique(Technique t, const FavorableRepresentation& frep) {
  switch (t) {
    case Technique::odd: return odd_technique(frep);
    case Technique::line: return line_technique(frep);
    case Technique::even: return even_technique(frep);
    case Technique::best: return best_lower_bound(frep);
  }
  throw std::logic_error("unknown technique");
}

void write_technique_result(std::ostream& out, const TechniqueResult& r) {
  out << "TECHNIQUE " << to_string(r.technique) << " achieved=" << r.achieved
      << " guarantee=" << r.guarantee.to_string() << '\n';
  write_independent_set(out, r.independent_set);
}

std::string format_technique_result(const TechniqueResult& r) {
  std::ostringstream out;
  write_technique_result(out, r);
  return out.str();
}

}  // namespace segopt
