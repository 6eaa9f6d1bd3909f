#include "segopt/matching.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <stdexcept>

namespace segopt {
namespace {

constexpr std::int64_t kNone = -1;

// Edmonds' blossom search with explicit base/parent arrays; blossoms are
// contracted by relabelling bases rather than building a quotient graph.
class Blossom {
 public:
  explicit Blossom(const IntersectionGraph& g)
      : g_(g), n_(g.size()), mate_(n_, kNone), parent_(n_), base_(n_), used_(n_), in_blossom_(n_), lca_mark_(n_, 0) {}

  void load(const Matching& m) {
    for (auto [u, v] : m.edges) {
      mate_[u] = static_cast<std::int64_t>(v);
      mate_[v] = static_cast<std::int64_t>(u);
    }
  }

  void greedy() {
    std::vector<std::size_t> order(n_);
    for (std::size_t v = 0; v < n_; ++v) order[v] = v;
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return g_.degree(a) < g_.degree(b); });
    for (std::size_t v : order) {
      if (mate_[v] != kNone) continue;
      std::int64_t pick = kNone;
      for (std::uint32_t w : g_.neighbors(v)) {
        if (mate_[w] == kNone && (pick == kNone || g_.degree(w) < g_.degree(static_cast<std::size_t>(pick)))) {
          pick = w;
        }
      }
      if (pick != kNone) {
        mate_[v] = pick;
        mate_[static_cast<std::size_t>(pick)] = static_cast<std::int64_t>(v);
      }
    }
  }

  void solve() {
    for (std::size_t v = 0; v < n_; ++v) {
      if (mate_[v] == kNone) {
        std::int64_t end = find_path(v);
        if (end != kNone) augment(end);
      }
    }
  }

  bool any_augmenting_path() {
    for (std::size_t v = 0; v < n_; ++v) {
      if (mate_[v] == kNone && find_path(v) != kNone) return true;
    }
    return false;
  }

  [[nodiscard]] Matching result() const {
    Matching m;
    for (std::size_t v = 0; v < n_; ++v) {
      if (mate_[v] != kNone && static_cast<std::size_t>(mate_[v]) > v) {
        m.edges.emplace_back(v, static_cast<std::size_t>(mate_[v]));
      }
    }
    return m;
  }

 private:
  std::size_t lca(std::size_t a, std::size_t b) {
    ++stamp_;
    for (;;) {
      a = base_[a];
      lca_mark_[a] = stamp_;
      if (mate_[a] == kNone) break;
      a = static_cast<std::size_t>(parent_[static_cast<std::size_t>(mate_[a])]);
    }
    for (;;) {
      b = base_[b];
      if (lca_mark_[b] == stamp_) return b;
      b = static_cast<std::size_t>(parent_[static_cast<std::size_t>(mate_[b])]);
    }
  }

  void mark_path(std::size_t v, std::size_t b, std::size_t child) {
    while (base_[v] != b) {
      std::size_t m = static_cast<std::size_t>(mate_[v]);
      in_blossom_[base_[v]] = 1;
      in_blossom_[base_[m]] = 1;
      parent_[v] = static_cast<std::int64_t>(child);
      child = m;
      v = static_cast<std::size_t>(parent_[m]);
    }
  }

  std::int64_t find_path(std::size_t root) {
    std::fill(used_.begin(), used_.end(), 0);
    std::fill(parent_.begin(), parent_.end(), kNone);
    for (std::size_t i = 0; i < n_; ++i) base_[i] = i;
    used_[root] = 1;
    std::queue<std::size_t> queue;
    queue.push(root);
    while (!queue.empty()) {
      std::size_t v = queue.front();
      queue.pop();
      for (std::uint32_t to : g_.neighbors(v)) {
        if (base_[v] == base_[to] || mate_[v] == static_cast<std::int64_t>(to)) continue;
        if (to == root || (mate_[to] != kNone && parent_[static_cast<std::size_t>(mate_[to])] != kNone)) {
          std::size_t cur = lca(v, to);
          std::fill(in_blossom_.begin(), in_blossom_.end(), 0);
          mark_path(v, cur, to);
          mark_path(to, cur, v);
          for (std::size_t i = 0; i < n_; ++i) {
            if (in_blossom_[base_[i]]) {
              base_[i] = cur;
              if (!used_[i]) {
                used_[i] = 1;
                queue.push(i);
              }
            }
          }
        } else if (parent_[to] == kNone) {
          parent_[to] = static_cast<std::int64_t>(v);
          if (mate_[to] == kNone) return to;
          std::size_t next = static_cast<std::size_t>(mate_[to]);
          used_[next] = 1;
          queue.push(next);
        }
      }
    }
    return kNone;
  }

  void augment(std::int64_t v) {
    while (v != kNone) {
      std::int64_t pv = parent_[static_cast<std::size_t>(v)];
      std::int64_t ppv = mate_[static_cast<std::size_t>(pv)];
      mate_[static_cast<std::size_t>(v)] = pv;
      mate_[static_cast<std::size_t>(pv)] = v;
      v = ppv;
    }
  }

  const IntersectionGraph& g_;
  std::size_t n_;
  std::vector<std::int64_t> mate_;
  std::vector<std::int64_t> parent_;
  std::vector<std::size_t> base_;
  std::vector<std::uint8_t> used_;
  std::vector<std::uint8_t> in_blossom_;
  std::vector<std::uint64_t> lca_mark_;
  std::uint64_t stamp_ = 0;
};

}  // namespace

Matching max_matching(const IntersectionGraph& g) {
  Blossom solver(g);
  solver.greedy();
  solver.solve();
  return solver.result();
}

bool is_valid_matching(const IntersectionGraph& g, const Matching& m) {
  std::vector<std::uint8_t> seen(g.size(), 0);
  for (auto [u, v] : m.edges) {
    if (u >= g.size() || v >= g.size() || u == v || !g.adjacent(u, v)) return false;
    if (seen[u] || seen[v]) return false;
    seen[u] = seen[v] = 1;
  }
  return true;
}

bool has_augmenting_path(const IntersectionGraph& g, const Matching& m) {
  if (!is_valid_matching(g, m)) throw std::invalid_argument("not a matching of this graph");
  Blossom solver(g);
  solver.load(m);
  return solver.any_augmenting_path();
}

std::vector<std::int64_t> max_bipartite_matching(std::size_t left, std::size_t right,
                                                 std::span<const std::vector<std::uint32_t>> adjacency) {
  constexpr std::size_t kInf = std::numeric_limits<std::size_t>::max();
  std::vector<std::int64_t> mate_left(left, kNone);
  std::vector<std::int64_t> mate_right(right, kNone);
  std::vector<std::size_t> dist(left);
  std::vector<std::size_t> cursor(left);

  auto bfs = [&] {
    std::queue<std::size_t> queue;
    bool reachable_free = false;
    for (std::size_t u = 0; u < left; ++u) {
      if (mate_left[u] == kNone) {
        dist[u] = 0;
        queue.push(u);
      } else {
        dist[u] = kInf;
      }
    }
    while (!queue.empty()) {
      std::size_t u = queue.front();
      queue.pop();
      for (std::uint32_t v : adjacency[u]) {
        std::int64_t w = mate_right[v];
        if (w == kNone) {
          reachable_free = true;
        } else if (dist[static_cast<std::size_t>(w)] == kInf) {
          dist[static_cast<std::size_t>(w)] = dist[u] + 1;
          queue.push(static_cast<std::size_t>(w));
        }
      }
    }
    return reachable_free;
  };

  // Iterative layered DFS from one free left vertex.
  auto dfs = [&](std::size_t root) {
    std::vector<std::size_t> stack{root};
    while (!stack.empty()) {
      std::size_t u = stack.back();
      if (cursor[u] == adjacency[u].size()) {
        dist[u] = kInf;
        stack.pop_back();
        continue;
      }
      std::uint32_t v = adjacency[u][cursor[u]];
      std::int64_t w = mate_right[v];
      if (w == kNone) {
        // Flip the alternating path recorded on the stack.
        for (std::size_t i = stack.size(); i-- > 0;) {
          std::size_t a = stack[i];
          std::uint32_t b = adjacency[a][cursor[a]];
          mate_left[a] = b;
          mate_right[b] = static_cast<std::int64_t>(a);
        }
        return true;
      }
      if (dist[static_cast<std::size_t>(w)] == dist[u] + 1) {
        stack.push_back(static_cast<std::size_t>(w));
      } else {
        ++cursor[u];
      }
    }
    return false;
  };

  while (bfs()) {
    std::fill(cursor.begin(), cursor.end(), 0);
    for (std::size_t u = 0; u < left; ++u) {
      if (mate_left[u] == kNone) dfs(u);
    }
  }
  return mate_left;
}

}  // namespace segopt
