#include <doctest.h>

#include <algorithm>

#include "brute.hpp"
#include "instances.hpp"
#include "segopt/errors.hpp"
#include "segopt/extremal.hpp"
#include "segopt/lower_bound.hpp"
#include "segopt/mis.hpp"
#include "segopt/random_instance.hpp"

using namespace segopt;
using fixtures::H;
using fixtures::V;

namespace {

Representation collinear(std::size_t count) {
  std::vector<Segment> s;
  for (std::size_t i = 0; i < count; ++i) s.push_back(H("s" + std::to_string(i), 0, i, i + 1));
  return Representation(std::move(s));
}

std::size_t union_size(const IndependentSet& a, const IndependentSet& b) {
  std::vector<SegmentId> all = a.ids();
  all.insert(all.end(), b.ids().begin(), b.ids().end());
  std::sort(all.begin(), all.end());
  return static_cast<std::size_t>(std::unique(all.begin(), all.end()) - all.begin());
}

void check_blue_orange_structure(const Representation& rep, const EvenArtifacts& art) {
  const Cut& cut = art.cut;
  auto strictly = [&](const Segment& s, Side side) { return cut.side(s.low_end()) == side || cut.side(s.high_end()) == side; };
  for (const auto& id : art.blue.ids()) {
    const Segment& s = rep[rep.index_of(id)];
    if (strictly(s, Side::below)) CHECK(s.vertical());
    if (strictly(s, Side::above)) CHECK(s.horizontal());
  }
  for (const auto& id : art.orange.ids()) {
    const Segment& s = rep[rep.index_of(id)];
    if (strictly(s, Side::above)) CHECK(s.vertical());
    if (strictly(s, Side::below)) CHECK(s.horizontal());
  }
}

}  // namespace

TEST_CASE("guarantee formulas") {
  GridStats s;
  s.n = 40;
  s.l_odd = 3;
  s.s_even = 18;
  s.t = 6;
  CHECK(odd_guarantee(s).to_string() == "43/4");
  CHECK(line_guarantee(s).to_string() == "23/2");
  CHECK(even_guarantee(s).to_string() == "37/4+1/4*sqrt(36)");
  CHECK(even_guarantee(s).satisfied_by(Rational(43, 4)));
  CHECK_FALSE(even_guarantee(s).satisfied_by(Rational(42, 4)));
  CHECK(best_guarantee(s).to_string() == "10+1/4*sqrt(40/3)");
  CHECK(parse_technique("even") == Technique::even);
  CHECK_THROWS_AS(parse_technique("fancy"), std::invalid_argument);
}

TEST_CASE("odd technique") {
  TechniqueResult r = odd_technique(fixtures::favorable(collinear(3)));
  CHECK(r.independent_set == IndependentSet({"s0", "s2"}));
  CHECK(r.guarantee.to_string() == "1");
  CHECK(r.certified(collinear(3)));

  r = odd_technique(fixtures::favorable(collinear(2)));
  CHECK(r.achieved == 1);
  CHECK(r.guarantee.to_string() == "1/2");

  for (std::size_t k = 1; k <= 5; ++k) {
    MkInstance m = make_mk(k);
    r = odd_technique(fixtures::favorable(m.representation));
    CHECK(r.guarantee.to_string() == std::to_string(k * k));
    CHECK(r.achieved >= k * k);
    CHECK(r.certified(m.representation));
  }
}

TEST_CASE("line technique") {
  for (std::size_t n = 1; n <= 7; ++n) {
    TechniqueResult r = line_technique(fixtures::favorable(collinear(n)));
    CHECK(r.achieved == (n + 1) / 2);
    CHECK(r.certified(collinear(n)));
  }
  for (std::size_t k = 1; k <= 5; ++k) {
    MkInstance m = make_mk(k);
    TechniqueResult r = line_technique(fixtures::favorable(m.representation));
    CHECK(r.guarantee == Bound::rational(Rational(static_cast<std::int64_t>(4 * k * k + 2), 4)));
    CHECK(r.certified(m.representation));
  }
}

TEST_CASE("candidate points") {
  auto two = candidate_points(fixtures::favorable(collinear(2)));
  CHECK(two == std::vector<Point>{Point{1, 0}});
  auto four = candidate_points(fixtures::favorable(collinear(4)));
  CHECK(four == std::vector<Point>{Point{1, 0}, Point{3, 0}});
  CHECK(candidate_points(fixtures::favorable(collinear(3))).empty());

  for (std::size_t k = 1; k <= 4; ++k) {
    FavorableRepresentation f = fixtures::favorable(make_mk(k).representation);
    CHECK(candidate_points(f).size() == 2 * k * k);
  }
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    FavorableRepresentation f = make_favorable(random_representation(seed, fixtures::varied_params(40, seed)));
    CHECK(2 * candidate_points(f).size() == grid_stats(f.rep()).s_even);
  }
}

TEST_CASE("cut geometry") {
  Representation one_line = collinear(2);
  std::vector<Point> single{Point{1, 0}};
  Cut c = build_cut(single, one_line);
  CHECK(c.size() == 1);
  CHECK(c.direction() == Direction::non_increasing);
  CHECK(c.range_at(Rational(-3)) == std::pair<Coord, Coord>{4, 4});
  CHECK(c.range_at(Rational(5)) == std::pair<Coord, Coord>{-4, -4});
  CHECK(c.side(Point{1, 0}) == Side::on);
  CHECK(c.side(Point{0, 0}) == Side::below);
  CHECK(c.side(Point{2, 0}) == Side::above);

  std::vector<Point> falling{Point{0, 4}, Point{4, 0}};
  c = build_cut(falling, one_line);
  CHECK(c.size() == 2);
  CHECK(c.range_at(Rational(1)) == std::pair<Coord, Coord>{3, 3});

  // Two cutting points sharing x form a vertical piece.
  std::vector<Point> column{Point{0, 5}, Point{2, 3}, Point{2, 1}, Point{6, 0}};
  c = build_cut(column, one_line);
  REQUIRE(c.size() == 4);
  CHECK(c.range_at(Rational(2)) == std::pair<Coord, Coord>{1, 3});
  CHECK(c.side(Point{2, 2}) == Side::on);
  CHECK(c.side(Point{2, Rational(7, 2)}) == Side::above);
  CHECK(c.range_at(Rational(4)) == std::pair<Coord, Coord>{Rational(1, 2), Rational(1, 2)});

  // A rising cut uses slope +1 half-lines.
  std::vector<Point> rising{Point{0, 0}, Point{1, 1}, Point{2, 2}};
  c = build_cut(rising, one_line);
  CHECK(c.direction() == Direction::non_decreasing);
  CHECK(c.range_at(Rational(10)) == std::pair<Coord, Coord>{10, 10});
  CHECK(c.range_at(Rational(-1)) == std::pair<Coord, Coord>{-1, -1});

  // Without candidates every segment lies above.
  c = build_cut(std::vector<Point>{}, make_mk(2).representation);
  CHECK(c.size() == 0);
  for (const Segment& s : make_mk(2).representation) {
    CHECK(c.side(s.low_end()) == Side::above);
    CHECK(c.side(s.high_end()) == Side::above);
  }
}

TEST_CASE("cut polyline is clipped and x-monotone") {
  std::vector<Point> pts{Point{2, 8}, Point{4, 4}, Point{4, 3}, Point{7, 1}};
  Cut c(PointSequence{pts, Direction::non_increasing});
  auto poly = c.polyline(Point{0, 0}, Point{10, 10});
  REQUIRE(poly.size() == 6);
  CHECK(poly.front() == Point{0, 10});
  CHECK(poly.back() == Point{8, 0});
  for (std::size_t i = 1; i < poly.size(); ++i) CHECK(poly[i - 1].x <= poly[i].x);
  CHECK_THROWS_AS(Cut(PointSequence{pts, Direction::non_decreasing}), std::invalid_argument);
}

TEST_CASE("cut on the extremal family") {
  for (std::size_t k = 1; k <= 6; ++k) {
    FavorableRepresentation f = fixtures::favorable(make_mk(k).representation);
    Cut c = build_cut(candidate_points(f), f.rep());
    CHECK(c.size() == 2 * k);
    CHECK(c.size() * c.size() >= 2 * k * k);
  }
}

TEST_CASE("even technique") {
  Representation two = collinear(2);
  TechniqueResult r = even_technique(fixtures::favorable(two));
  REQUIRE(r.even.has_value());
  CHECK(union_size(r.even->blue, r.even->orange) == 2);
  CHECK(r.achieved == 1);
  CHECK(r.guarantee.ceiling() == 1);
  CHECK(r.certified(two));

  MkInstance m2 = make_mk(2);
  r = even_technique(fixtures::favorable(m2.representation));
  CHECK(r.guarantee.ceiling() == 6);
  CHECK(r.achieved >= 6);
  CHECK(r.achieved <= 8);
  CHECK(r.certified(m2.representation));

  Representation odd_only = collinear(3);
  r = even_technique(fixtures::favorable(odd_only));
  CHECK(r.technique == Technique::even);
  CHECK(r.origin == Technique::odd);
  CHECK_FALSE(r.even.has_value());
  CHECK(r.guarantee.to_string() == "1/2");
  CHECK(r.certified(odd_only));
}

TEST_CASE("best lower bound") {
  MkInstance m3 = make_mk(3);
  TechniqueResult r = best_lower_bound(fixtures::favorable(m3.representation));
  CHECK(r.technique == Technique::best);
  CHECK(r.guarantee.ceiling() == 10);
  CHECK(r.achieved >= 10);
  CHECK(r.achieved <= 16);
  CHECK(r.certified(m3.representation));

  Representation single = fixtures::rep({H("only", 0, 0, 1)});
  r = best_lower_bound(fixtures::favorable(single));
  CHECK(r.achieved == 1);

  Representation big = random_representation(400, fixtures::varied_params(400, 1));
  FavorableRepresentation f = make_favorable(big);
  r = best_lower_bound(f);
  CHECK(r.guarantee.ceiling() == 103);
  CHECK(r.achieved >= 103);
  CHECK(r.certified(f.rep()));
  CHECK(is_independent(big, r.independent_set));

  r = best_lower_bound(make_favorable(Representation{}));
  CHECK(r.achieved == 0);
  CHECK(r.guarantee.to_string() == "0");
}

TEST_CASE("every technique is certified on random favorable instances") {
  std::size_t rising = 0;
  std::size_t falling = 0;
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    FavorableRepresentation f = make_favorable(random_representation(seed, fixtures::varied_params(1 + seed % 150, seed)));
    GridStats stats = grid_stats(f.rep());
    for (Technique t : {Technique::odd, Technique::line, Technique::even, Technique::best}) {
      TechniqueResult r = run_technique(t, f);
      CHECK(r.certified(f.rep()));
      CHECK(r.guarantee == guarantee_for(t, stats));
    }
    TechniqueResult even = even_technique(f);
    if (!even.even) continue;
    const EvenArtifacts& art = *even.even;
    (art.cut.direction() == Direction::non_decreasing ? rising : falling) += 1;
    CHECK(is_independent(f.rep(), art.blue));
    CHECK(is_independent(f.rep(), art.orange));
    check_blue_orange_structure(f.rep(), art);
    // Twice the union meets s_even + 2C + s_odd - l_odd.
    CHECK(2 * union_size(art.blue, art.orange) + stats.l_odd >= stats.s_even + 2 * art.cut.size() + stats.s_odd);
    CHECK(art.cut.size() * art.cut.size() * 2 >= stats.s_even);
  }
  CHECK(rising > 20);
  CHECK(falling > 20);
}

TEST_CASE("techniques never exceed the exact optimum") {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    FavorableRepresentation f = make_favorable(random_representation(seed, fixtures::varied_params(4 + seed % 24, seed)));
    std::size_t alpha = exact_mis(build_graph(f.rep())).size();
    for (Technique t : {Technique::odd, Technique::line, Technique::even, Technique::best}) {
      CHECK(run_technique(t, f).achieved <= alpha);
    }
  }
}
