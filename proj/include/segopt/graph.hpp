#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "segopt/geometry.hpp"

namespace segopt {

using Edge = std::pair<std::size_t, std::size_t>;

// Simple undirected graph whose vertices carry segment ids. Vertex i of a
// graph built from a representation is segment i.
class IntersectionGraph {
 public:
  IntersectionGraph() = default;
  // Edges may repeat or come in either order; self-loops are rejected with
  // std::invalid_argument.
  IntersectionGraph(std::vector<SegmentId> ids, std::span<const Edge> edges);

  // Abstract graph with ids "0".."n-1".
  static IntersectionGraph from_edges(std::size_t n, std::span<const Edge> edges);

  [[nodiscard]] std::size_t size() const { return adjacency_.size(); }
  [[nodiscard]] std::size_t edge_count() const { return edge_count_; }
  [[nodiscard]] const SegmentId& id(std::size_t v) const { return ids_[v]; }
  [[nodiscard]] const std::vector<SegmentId>& ids() const { return ids_; }
  [[nodiscard]] std::span<const std::uint32_t> neighbors(std::size_t v) const { return adjacency_[v]; }
  [[nodiscard]] std::size_t degree(std::size_t v) const { return adjacency_[v].size(); }
  [[nodiscard]] bool adjacent(std::size_t u, std::size_t v) const;
  // Each edge once, as (u, v) with u < v, sorted.
  [[nodiscard]] std::vector<Edge> edges() const;
  [[nodiscard]] std::optional<std::size_t> vertex_of(const SegmentId& id) const;

  [[nodiscard]] IntersectionGraph induced(std::span<const std::size_t> vertices) const;

 private:
  friend IntersectionGraph build_graph(const Representation& rep);

  std::vector<SegmentId> ids_;
  std::vector<std::vector<std::uint32_t>> adjacency_;  // sorted
  std::size_t edge_count_ = 0;
};

// Edge iff the closed segments intersect. Collinear pairs are found per grid
// line, orthogonal pairs by range queries over the crossing lines.
IntersectionGraph build_graph(const Representation& rep);

bool is_triangle_free(const IntersectionGraph& g);

// Proper 2-colouring (0/1 per vertex), or nullopt when an odd cycle exists.
std::optional<std::vector<std::uint8_t>> two_coloring(const IntersectionGraph& g);

// Set of segment ids, kept sorted.
class IndependentSet {
 public:
  IndependentSet() = default;
  explicit IndependentSet(std::vector<SegmentId> ids);
  static IndependentSet from_indices(const Representation& rep, std::span<const std::size_t> indices);
  static IndependentSet from_vertices(const IntersectionGraph& g, std::span<const std::size_t> vertices);

  [[nodiscard]] std::size_t size() const { return ids_.size(); }
  [[nodiscard]] bool empty() const { return ids_.empty(); }
  [[nodiscard]] const std::vector<SegmentId>& ids() const { return ids_; }
  [[nodiscard]] bool contains(const SegmentId& id) const;

  friend bool operator==(const IndependentSet&, const IndependentSet&) = default;

 private:
  std::vector<SegmentId> ids_;
};

// Pairwise disjointness checked directly on the geometry (no graph).
// Throws UnknownIdError.
bool is_independent(const Representation& rep, std::span<const SegmentId> ids);
bool is_independent(const Representation& rep, const IndependentSet& set);

}  // namespace segopt
