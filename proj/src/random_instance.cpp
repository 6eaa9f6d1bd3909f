#include "segopt/random_instance.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <random>
#include <set>
#include <stdexcept>
#include <string>

#include "segopt/grid.hpp"

namespace segopt {
namespace {

class Generator {
 public:
  Generator(std::uint64_t seed, const RandomParams& p) : rng_(seed), params_(p) {
    const auto n = static_cast<std::int64_t>(p.n);
    extent_ = 16 * n + 64;
    std::size_t lines = p.lines != 0 ? p.lines : std::max<std::size_t>(1, static_cast<std::size_t>(std::sqrt(p.n)));
    lines = std::min<std::size_t>(lines, static_cast<std::size_t>(extent_));
    for (auto& coords : coords_) {
      std::set<std::int64_t> chosen;
      while (chosen.size() < lines) chosen.insert(uniform(0, extent_));
      coords.assign(chosen.begin(), chosen.end());
    }
    for (auto& per_line : members_) per_line.resize(lines);
    // Segments on a line cover about half of it on average.
    const std::size_t per_line = std::max<std::size_t>(1, p.n / (2 * lines));
    max_length_ = std::max<std::int64_t>(2, extent_ / static_cast<std::int64_t>(per_line));
  }

  Segment draw(std::size_t index, bool plain) {
    const auto o = static_cast<std::size_t>(uniform(0, 1));
    const auto lines = coords_[o].size();
    const double u = unit();
    const auto line = std::min(lines - 1, static_cast<std::size_t>(static_cast<double>(lines) * std::pow(u, params_.skew)));
    auto& peers = members_[o][line];

    std::int64_t length = uniform(1, max_length_);
    std::int64_t start = uniform(0, extent_ - 1);
    const double mode = unit();
    if (!plain && !peers.empty() && mode < params_.chain_rate + params_.overlap_rate) {
      const auto& [lo, hi] = spans_[peers[static_cast<std::size_t>(uniform(0, static_cast<std::int64_t>(peers.size()) - 1))]];
      if (mode < params_.chain_rate) {
        if (uniform(0, 1) == 0) {
          start = hi;
        } else {
          start = lo - length;
        }
      } else if (hi - lo >= 2) {
        start = uniform(lo + 1, hi - 1);
      }
    }
    std::int64_t end = start + length;
    if (!plain && unit() < params_.contact_rate) {
      const auto& cross = coords_[1 - o];
      auto it = std::upper_bound(cross.begin(), cross.end(), start);
      if (it != cross.end()) end = *it;
    }

    if (!plain) peers.push_back(index);
    if (spans_.size() <= index) spans_.resize(index + 1);
    spans_[index] = {start, end};
    const auto orientation = o == 0 ? Orientation::horizontal : Orientation::vertical;
    return Segment("s" + std::to_string(index), orientation, coords_[o][line], start, end);
  }

  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_);
  }

 private:
  double unit() { return std::uniform_real_distribution<double>(0.0, 1.0)(rng_); }

  std::mt19937_64 rng_;
  RandomParams params_;
  std::int64_t extent_ = 0;
  std::int64_t max_length_ = 1;
  std::array<std::vector<std::int64_t>, 2> coords_;
  std::array<std::vector<std::vector<std::size_t>>, 2> members_;
  std::vector<std::pair<std::int64_t, std::int64_t>> spans_;
};

}  // namespace

Representation random_representation(std::uint64_t seed, const RandomParams& params) {
  for (double rate : {params.chain_rate, params.overlap_rate, params.contact_rate}) {
    if (!(rate >= 0.0 && rate <= 1.0)) throw std::invalid_argument("rates must lie in [0, 1]");
  }
  if (!(params.skew > 0.0)) throw std::invalid_argument("skew must be positive");
  if (params.n == 0) return {};

  Generator gen(seed, params);
  std::vector<Segment> segments;
  segments.reserve(params.n);
  for (std::size_t i = 0; i < params.n; ++i) segments.push_back(gen.draw(i, false));

  for (std::size_t round = 0;; ++round) {
    if (round > 100'000) throw std::logic_error("random instance did not reach general position");
    Representation rep(segments);
    std::vector<TriplePoint> triples = find_triple_points(rep);
    if (triples.empty()) return rep;
    std::set<std::size_t> redraw;
    for (const TriplePoint& t : triples) {
      const std::array<std::size_t, 3> members{t.a, t.b, t.c};
      redraw.insert(members[static_cast<std::size_t>(gen.uniform(0, 2))]);
    }
    for (std::size_t i : redraw) segments[i] = gen.draw(i, true);
  }
}

}  // namespace segopt
