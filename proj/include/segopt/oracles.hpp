#pragma once

#include <cstddef>
#include <vector>

#include "segopt/graph.hpp"
#include "segopt/matching.hpp"
#include "segopt/rational.hpp"

namespace segopt {

struct CliqueCover {
  // Matched pairs followed by singletons; every vertex appears exactly once.
  std::vector<std::vector<std::size_t>> cliques;

  [[nodiscard]] std::size_t size() const { return cliques.size(); }
};

// In a triangle-free graph cliques have at most two vertices, so the minimum
// clique partition is n - (maximum matching). Throws NotTriangleFreeError.
CliqueCover clique_cover_number_trianglefree(const IntersectionGraph& g);

struct FractionalIndependence {
  Rational value;
  std::vector<Rational> weights;  // each 0, 1/2 or 1
};

// Optimum of max sum x_v s.t. x_u + x_v <= 1 per edge, 0 <= x_v <= 1.
// Solved on the bipartite double cover: alpha* = n - mu(double cover)/2, with
// the half-integral optimum read off a minimum vertex cover (Koenig).
FractionalIndependence fractional_independence(const IntersectionGraph& g);

}  // namespace segopt
