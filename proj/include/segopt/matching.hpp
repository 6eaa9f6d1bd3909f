#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "segopt/graph.hpp"

namespace segopt {

struct Matching {
  std::vector<Edge> edges;  // (u, v) with u < v, sorted

  [[nodiscard]] std::size_t size() const { return edges.size(); }
};

// Maximum-cardinality matching in a general graph (Edmonds' blossom
// algorithm, greedy warm start).
Matching max_matching(const IntersectionGraph& g);

// Edges are graph edges and pairwise vertex-disjoint.
bool is_valid_matching(const IntersectionGraph& g, const Matching& m);

// Searches for an augmenting path from every exposed vertex.
bool has_augmenting_path(const IntersectionGraph& g, const Matching& m);

// Maximum matching in a bipartite graph given as left-side adjacency lists
// (Hopcroft-Karp). Returns the partner of each left vertex, or -1.
std::vector<std::int64_t> max_bipartite_matching(std::size_t left, std::size_t right,
                                                 std::span<const std::vector<std::uint32_t>> adjacency);

}  // namespace segopt
