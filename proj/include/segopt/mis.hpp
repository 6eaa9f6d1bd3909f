#pragma once

#include <cstdint>

#include "segopt/graph.hpp"

namespace segopt {

struct MisOptions {
  // Search nodes allowed before BudgetExceeded is thrown.
  std::uint64_t node_budget = 200'000'000;
};

struct MisStats {
  std::uint64_t nodes = 0;
};

// Maximum independent set by branch and bound: degree-0/1 reductions, branch
// on a maximum-degree vertex (lowest index on ties), greedy clique-cover upper
// bound. Meant for desk-scale graphs (n up to ~60).
IndependentSet exact_mis(const IntersectionGraph& g, const MisOptions& options = {}, MisStats* stats = nullptr);

}  // namespace segopt
