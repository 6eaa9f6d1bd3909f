#include <doctest.h>

#include <cmath>
#include <random>
#include <set>

#include "brute.hpp"
#include "segopt/monotone.hpp"

using namespace segopt;

namespace {

std::vector<Point> tight_grid(std::int64_t k) {
  std::vector<Point> pts;
  for (std::int64_t block = 0; block < k; ++block) {
    for (std::int64_t i = 0; i < k; ++i) pts.push_back(Point{block * k + i, (k - 1 - block) * k + i});
  }
  return pts;
}

std::vector<Point> random_points(std::uint64_t seed, std::size_t m, std::int64_t range) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> coord(0, range);
  std::set<Point> pts;
  while (pts.size() < m) pts.insert(Point{coord(rng), coord(rng)});
  std::vector<Point> out(pts.begin(), pts.end());
  std::shuffle(out.begin(), out.end(), rng);
  return out;
}

bool is_subsequence_of(const PointSequence& seq, const std::vector<Point>& pts) {
  std::set<Point> pool(pts.begin(), pts.end());
  std::set<Point> used;
  for (const Point& p : seq.points) {
    if (!pool.count(p) || !used.insert(p).second) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("verify_monotone") {
  CHECK(verify_monotone(PointSequence{{Point{0, 0}, Point{1, 1}}, Direction::non_decreasing}));
  CHECK_FALSE(verify_monotone(PointSequence{{Point{0, 0}, Point{1, 1}}, Direction::non_increasing}));
  CHECK(verify_monotone(PointSequence{{Point{0, 5}, Point{0, 3}}, Direction::non_increasing}));
  CHECK_FALSE(verify_monotone(PointSequence{{Point{1, 0}, Point{0, 0}}, Direction::non_decreasing}));
}

TEST_CASE("simple inputs") {
  std::vector<Point> diagonal;
  for (int i = 0; i < 7; ++i) diagonal.push_back(Point{i, i});
  PointSequence all = longest_monotone(diagonal);
  CHECK(all.size() == 7);
  CHECK(all.direction == Direction::non_decreasing);

  std::vector<Point> single{Point{3, 4}};
  CHECK(longest_monotone(single).size() == 1);
  CHECK(longest_monotone(std::vector<Point>{}).size() == 0);

  std::vector<Point> repeated{Point{1, 1}, Point{1, 1}};
  CHECK_THROWS_AS(longest_monotone(repeated), std::invalid_argument);
}

TEST_CASE("ties between directions prefer non-increasing") {
  std::vector<Point> two{Point{0, 0}, Point{1, 1}, Point{2, 0}};
  PointSequence s = longest_monotone(two);
  CHECK(s.size() == 2);
  CHECK(s.direction == Direction::non_increasing);
}

TEST_CASE("shared coordinates count as monotone") {
  std::vector<Point> column{Point{0, 0}, Point{0, 1}, Point{0, 2}, Point{1, 2}};
  CHECK(longest_in_direction(column, Direction::non_decreasing).size() == 4);
  CHECK(longest_in_direction(column, Direction::non_increasing).size() == 3);
}

TEST_CASE("tight grid arrangement") {
  for (std::int64_t k = 1; k <= 4; ++k) {
    std::vector<Point> pts = tight_grid(k);
    PointSequence s = longest_monotone(pts);
    CHECK(s.size() == static_cast<std::size_t>(k));
    CHECK(brute::longest_monotone(pts) == static_cast<std::size_t>(k));
    CHECK(verify_monotone(s));
  }
}

TEST_CASE("matches exhaustive search and the square-root guarantee") {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const std::size_t m = 1 + seed % 12;
    std::vector<Point> pts = random_points(seed, m, seed % 2 == 0 ? 6 : 100);
    PointSequence s = longest_monotone(pts);
    CHECK(verify_monotone(s));
    CHECK(is_subsequence_of(s, pts));
    CHECK(s.size() == brute::longest_monotone(pts));
    CHECK(s.size() * s.size() >= m);
  }
}

TEST_CASE("large inputs stay above the square-root guarantee") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    std::vector<Point> pts = random_points(seed, 5000, 1'000'000);
    PointSequence s = longest_monotone(pts);
    CHECK(verify_monotone(s));
    CHECK(s.size() * s.size() >= pts.size());
  }
}

TEST_CASE("deterministic output") {
  std::vector<Point> pts = random_points(9, 200, 1000);
  PointSequence a = longest_monotone(pts);
  std::reverse(pts.begin(), pts.end());
  PointSequence b = longest_monotone(pts);
  CHECK(a.points == b.points);
  CHECK(a.direction == b.direction);
}
