#include "segopt/graph.hpp"

#include <algorithm>
#include <bit>
#include <queue>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "segopt/errors.hpp"
#include "segopt/grid.hpp"

namespace segopt {
namespace {

using SmallEdge = std::pair<std::uint32_t, std::uint32_t>;

std::vector<std::vector<std::uint32_t>> adjacency_from(std::size_t n, std::vector<SmallEdge>& edges,
                                                       std::size_t& edge_count) {
  for (auto& [u, v] : edges) {
    if (u == v) throw std::invalid_argument("self-loop on vertex " + std::to_string(u));
    if (u >= n || v >= n) throw std::invalid_argument("edge endpoint out of range");
    if (v < u) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  std::vector<std::size_t> deg(n, 0);
  for (auto [u, v] : edges) {
    ++deg[u];
    ++deg[v];
  }
  std::vector<std::vector<std::uint32_t>> adj(n);
  for (std::size_t v = 0; v < n; ++v) adj[v].reserve(deg[v]);
  for (auto [u, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  for (auto& row : adj) std::sort(row.begin(), row.end());
  edge_count = edges.size();
  return adj;
}

}  // namespace

IntersectionGraph::IntersectionGraph(std::vector<SegmentId> ids, std::span<const Edge> edges) : ids_(std::move(ids)) {
  std::vector<SmallEdge> small;
  small.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (u >= ids_.size() || v >= ids_.size()) throw std::invalid_argument("edge endpoint out of range");
    small.emplace_back(static_cast<std::uint32_t>(u), static_cast<std::uint32_t>(v));
  }
  adjacency_ = adjacency_from(ids_.size(), small, edge_count_);
}

IntersectionGraph IntersectionGraph::from_edges(std::size_t n, std::span<const Edge> edges) {
  std::vector<SegmentId> ids;
  ids.reserve(n);
  for (std::size_t i = 0; i < n; ++i) ids.push_back(std::to_string(i));
  return IntersectionGraph(std::move(ids), edges);
}

bool IntersectionGraph::adjacent(std::size_t u, std::size_t v) const {
  const auto& row = adjacency_[u];
  return std::binary_search(row.begin(), row.end(), static_cast<std::uint32_t>(v));
}

std::vector<Edge> IntersectionGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (std::size_t u = 0; u < size(); ++u) {
    for (std::uint32_t v : adjacency_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

std::optional<std::size_t> IntersectionGraph::vertex_of(const SegmentId& id) const {
  auto it = std::find(ids_.begin(), ids_.end(), id);
  if (it == ids_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - ids_.begin());
}

IntersectionGraph IntersectionGraph::induced(std::span<const std::size_t> vertices) const {
  std::unordered_map<std::size_t, std::size_t> local;
  std::vector<SegmentId> ids;
  for (std::size_t v : vertices) {
    local.emplace(v, ids.size());
    ids.push_back(ids_[v]);
  }
  std::vector<Edge> edges;
  for (std::size_t v : vertices) {
    for (std::uint32_t w : adjacency_[v]) {
      auto it = local.find(w);
      if (it != local.end() && local[v] < it->second) edges.emplace_back(local[v], it->second);
    }
  }
  return IntersectionGraph(std::move(ids), edges);
}

IntersectionGraph build_graph(const Representation& rep) {
  LineIndex index(rep);
  std::vector<SmallEdge> edges;
  for (Orientation o : {Orientation::horizontal, Orientation::vertical}) {
    for (const GridLine& line : index.lines(o)) {
      const auto& m = line.members;
      for (std::size_t a = 0; a < m.size(); ++a) {
        for (std::size_t b = a + 1; b < m.size() && rep[m[b]].lo() <= rep[m[a]].hi(); ++b) {
          edges.emplace_back(m[a], m[b]);
        }
      }
    }
  }
  for (const GridLine& line : index.lines(Orientation::horizontal)) {
    for (std::size_t h : line.members) {
      for (const GridLine& cross : index.lines_in_range(Orientation::vertical, rep[h].lo(), rep[h].hi())) {
        for (std::size_t v : cross.members) {
          if (rep[v].covers(line.coordinate)) edges.emplace_back(h, v);
        }
      }
    }
  }
  IntersectionGraph g;
  g.ids_.reserve(rep.size());
  for (const Segment& s : rep) g.ids_.push_back(s.id());
  g.adjacency_ = adjacency_from(rep.size(), edges, g.edge_count_);
  return g;
}

bool is_triangle_free(const IntersectionGraph& g) {
  const std::size_t n = g.size();
  const std::size_t words = (n + 63) / 64;
  std::vector<std::uint64_t> rows(n * words, 0);
  for (std::size_t v = 0; v < n; ++v) {
    for (std::uint32_t w : g.neighbors(v)) rows[v * words + w / 64] |= std::uint64_t{1} << (w % 64);
  }
  for (std::size_t u = 0; u < n; ++u) {
    const std::uint64_t* ru = &rows[u * words];
    for (std::uint32_t v : g.neighbors(u)) {
      if (v <= u) continue;
      const std::uint64_t* rv = &rows[v * words];
      std::uint64_t any = 0;
      for (std::size_t i = 0; i < words; ++i) any |= ru[i] & rv[i];
      if (any != 0) return false;
    }
  }
  return true;
}

std::optional<std::vector<std::uint8_t>> two_coloring(const IntersectionGraph& g) {
  constexpr std::uint8_t kUnset = 2;
  std::vector<std::uint8_t> color(g.size(), kUnset);
  std::queue<std::size_t> queue;
  for (std::size_t s = 0; s < g.size(); ++s) {
    if (color[s] != kUnset) continue;
    color[s] = 0;
    queue.push(s);
    while (!queue.empty()) {
      std::size_t v = queue.front();
      queue.pop();
      for (std::uint32_t w : g.neighbors(v)) {
        if (color[w] == kUnset) {
          color[w] = static_cast<std::uint8_t>(1 - color[v]);
          queue.push(w);
        } else if (color[w] == color[v]) {
          return std::nullopt;
        }
      }
    }
  }
  return color;
}

IndependentSet::IndependentSet(std::vector<SegmentId> ids) : ids_(std::move(ids)) {
  std::sort(ids_.begin(), ids_.end());
}

IndependentSet IndependentSet::from_indices(const Representation& rep, std::span<const std::size_t> indices) {
  std::vector<SegmentId> ids;
  ids.reserve(indices.size());
  for (std::size_t i : indices) ids.push_back(rep[i].id());
  return IndependentSet(std::move(ids));
}

IndependentSet IndependentSet::from_vertices(const IntersectionGraph& g, std::span<const std::size_t> vertices) {
  std::vector<SegmentId> ids;
  ids.reserve(vertices.size());
  for (std::size_t v : vertices) ids.push_back(g.id(v));
  return IndependentSet(std::move(ids));
}

bool IndependentSet::contains(const SegmentId& id) const { return std::binary_search(ids_.begin(), ids_.end(), id); }

bool is_independent(const Representation& rep, std::span<const SegmentId> ids) {
  std::vector<std::size_t> idx;
  idx.reserve(ids.size());
  std::unordered_set<std::size_t> seen;
  for (const SegmentId& id : ids) {
    std::size_t i = rep.index_of(id);
    if (!seen.insert(i).second) return false;  // a segment meets itself
    idx.push_back(i);
  }
  for (std::size_t a = 0; a < idx.size(); ++a) {
    for (std::size_t b = a + 1; b < idx.size(); ++b) {
      if (intersects(rep[idx[a]], rep[idx[b]])) return false;
    }
  }
  return true;
}

bool is_independent(const Representation& rep, const IndependentSet& set) { return is_independent(rep, set.ids()); }

}  // namespace segopt
