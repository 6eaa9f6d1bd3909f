#include "segopt/mis.hpp"

#include <algorithm>
#include <bit>
#include <vector>

#include "segopt/errors.hpp"

namespace segopt {
namespace {

class BranchAndBound {
 public:
  BranchAndBound(const IntersectionGraph& g, std::uint64_t budget)
      : n_(g.size()), words_((g.size() + 63) / 64), budget_(budget), adj_(n_ * words_, 0) {
    for (std::size_t v = 0; v < n_; ++v) {
      for (std::uint32_t w : g.neighbors(v)) adj_[v * words_ + w / 64] |= std::uint64_t{1} << (w % 64);
    }
    pool_.assign(n_ + 2, std::vector<std::uint64_t>(words_, 0));
  }

  std::vector<std::size_t> run() {
    greedy_lower_bound();
    auto& root = pool_[0];
    for (std::size_t v = 0; v < n_; ++v) set(root, v);
    search(0);
    return best_;
  }

  [[nodiscard]] std::uint64_t nodes() const { return nodes_; }

 private:
  using Bits = std::vector<std::uint64_t>;

  static void set(Bits& b, std::size_t v) { b[v / 64] |= std::uint64_t{1} << (v % 64); }
  static void reset(Bits& b, std::size_t v) { b[v / 64] &= ~(std::uint64_t{1} << (v % 64)); }

  [[nodiscard]] const std::uint64_t* row(std::size_t v) const { return &adj_[v * words_]; }

  [[nodiscard]] std::size_t degree_in(std::size_t v, const Bits& p) const {
    std::size_t d = 0;
    const std::uint64_t* r = row(v);
    for (std::size_t i = 0; i < words_; ++i) d += static_cast<std::size_t>(std::popcount(r[i] & p[i]));
    return d;
  }

  [[nodiscard]] std::size_t first_neighbour_in(std::size_t v, const Bits& p) const {
    const std::uint64_t* r = row(v);
    for (std::size_t i = 0; i < words_; ++i) {
      if (std::uint64_t w = r[i] & p[i]) return i * 64 + static_cast<std::size_t>(std::countr_zero(w));
    }
    return n_;
  }

  template <typename F>
  void for_each(const Bits& p, F&& f) const {
    for (std::size_t i = 0; i < words_; ++i) {
      for (std::uint64_t w = p[i]; w != 0; w &= w - 1) f(i * 64 + static_cast<std::size_t>(std::countr_zero(w)));
    }
  }

  static bool empty(const Bits& p) {
    return std::all_of(p.begin(), p.end(), [](std::uint64_t w) { return w == 0; });
  }

  void greedy_lower_bound() {
    Bits p(words_, 0);
    for (std::size_t v = 0; v < n_; ++v) set(p, v);
    std::vector<std::size_t> chosen;
    while (!empty(p)) {
      std::size_t pick = n_;
      std::size_t pick_deg = 0;
      for_each(p, [&](std::size_t v) {
        std::size_t d = degree_in(v, p);
        if (pick == n_ || d < pick_deg) {
          pick = v;
          pick_deg = d;
        }
      });
      chosen.push_back(pick);
      reset(p, pick);
      const std::uint64_t* r = row(pick);
      for (std::size_t i = 0; i < words_; ++i) p[i] &= ~r[i];
    }
    best_ = std::move(chosen);
  }

  // Number of cliques in a greedy partition of p; bounds α of the induced
  // subgraph from above.
  std::size_t clique_cover_bound(const Bits& p) {
    cliques_.clear();
    for_each(p, [&](std::size_t v) {
      for (Bits& common : cliques_) {
        if (common[v / 64] >> (v % 64) & 1) {
          const std::uint64_t* r = row(v);
          for (std::size_t i = 0; i < words_; ++i) common[i] &= r[i];
          return;
        }
      }
      cliques_.emplace_back(row(v), row(v) + words_);
    });
    return cliques_.size();
  }

  void search(std::size_t depth) {
    if (++nodes_ > budget_) throw BudgetExceeded("branch-and-bound node budget exhausted");
    Bits& p = pool_[depth];
    const std::size_t mark = current_.size();

    for (bool changed = true; changed;) {
      changed = false;
      for_each(p, [&](std::size_t v) {
        if (!(p[v / 64] >> (v % 64) & 1)) return;  // removed earlier in this sweep
        std::size_t d = degree_in(v, p);
        if (d <= 1) {
          if (d == 1) reset(p, first_neighbour_in(v, p));
          reset(p, v);
          current_.push_back(v);
          changed = true;
        }
      });
    }

    if (empty(p)) {
      if (current_.size() > best_.size()) best_ = current_;
      current_.resize(mark);
      return;
    }
    if (current_.size() + clique_cover_bound(p) <= best_.size()) {
      current_.resize(mark);
      return;
    }

    std::size_t pivot = n_;
    std::size_t pivot_deg = 0;
    for_each(p, [&](std::size_t v) {
      std::size_t d = degree_in(v, p);
      if (pivot == n_ || d > pivot_deg) {
        pivot = v;
        pivot_deg = d;
      }
    });

    Bits& next = pool_[depth + 1];
    const std::uint64_t* r = row(pivot);
    for (std::size_t i = 0; i < words_; ++i) next[i] = p[i] & ~r[i];
    reset(next, pivot);
    current_.push_back(pivot);
    search(depth + 1);
    current_.pop_back();

    next = p;
    reset(next, pivot);
    search(depth + 1);

    current_.resize(mark);
  }

  std::size_t n_;
  std::size_t words_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<std::uint64_t> adj_;
  std::vector<Bits> pool_;
  std::vector<Bits> cliques_;
  std::vector<std::size_t> current_;
  std::vector<std::size_t> best_;
};

}  // namespace

IndependentSet exact_mis(const IntersectionGraph& g, const MisOptions& options, MisStats* stats) {
  BranchAndBound solver(g, options.node_budget);
  std::vector<std::size_t> best = solver.run();
  if (stats != nullptr) stats->nodes = solver.nodes();
  return IndependentSet::from_vertices(g, best);
}

}  // namespace segopt
