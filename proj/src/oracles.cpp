#include "segopt/oracles.hpp"

#include <queue>

#include "segopt/errors.hpp"

namespace segopt {

CliqueCover clique_cover_number_trianglefree(const IntersectionGraph& g) {
  if (!is_triangle_free(g)) throw NotTriangleFreeError("graph contains a triangle");
  Matching m = max_matching(g);
  CliqueCover cover;
  std::vector<std::uint8_t> covered(g.size(), 0);
  for (auto [u, v] : m.edges) {
    cover.cliques.push_back({u, v});
    covered[u] = covered[v] = 1;
  }
  for (std::size_t v = 0; v < g.size(); ++v) {
    if (!covered[v]) cover.cliques.push_back({v});
  }
  return cover;
}

FractionalIndependence fractional_independence(const IntersectionGraph& g) {
  const std::size_t n = g.size();
  // Left copy of u is adjacent to the right copy of every neighbour of u.
  std::vector<std::vector<std::uint32_t>> adjacency(n);
  for (std::size_t u = 0; u < n; ++u) adjacency[u].assign(g.neighbors(u).begin(), g.neighbors(u).end());
  std::vector<std::int64_t> mate_left = max_bipartite_matching(n, n, adjacency);

  std::vector<std::int64_t> mate_right(n, -1);
  std::size_t matched = 0;
  for (std::size_t u = 0; u < n; ++u) {
    if (mate_left[u] >= 0) {
      mate_right[static_cast<std::size_t>(mate_left[u])] = static_cast<std::int64_t>(u);
      ++matched;
    }
  }

  // Koenig: Z = vertices reachable from free left vertices by alternating
  // paths; cover = (L \ Z) + (R & Z).
  std::vector<std::uint8_t> left_reached(n, 0);
  std::vector<std::uint8_t> right_reached(n, 0);
  std::queue<std::size_t> queue;
  for (std::size_t u = 0; u < n; ++u) {
    if (mate_left[u] < 0) {
      left_reached[u] = 1;
      queue.push(u);
    }
  }
  while (!queue.empty()) {
    std::size_t u = queue.front();
    queue.pop();
    for (std::uint32_t v : adjacency[u]) {
      if (right_reached[v]) continue;
      right_reached[v] = 1;
      std::int64_t w = mate_right[v];
      if (w >= 0 && !left_reached[static_cast<std::size_t>(w)]) {
        left_reached[static_cast<std::size_t>(w)] = 1;
        queue.push(static_cast<std::size_t>(w));
      }
    }
  }

  FractionalIndependence out;
  out.weights.reserve(n);
  const Rational half(1, 2);
  for (std::size_t v = 0; v < n; ++v) {
    int in_cover = (left_reached[v] ? 0 : 1) + (right_reached[v] ? 1 : 0);
    out.weights.push_back(Rational(1) - half * Rational(in_cover));
  }
  out.value = Rational(static_cast<std::int64_t>(n)) - Rational(static_cast<std::int64_t>(matched), 2);
  return out;
}

}  // namespace segopt
