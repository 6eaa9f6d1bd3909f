#pragma once

#include <cstddef>
#include <cstdint>

#include "segopt/geometry.hpp"

namespace segopt {

struct RandomParams {
  std::size_t n = 0;
  // Grid lines per orientation; 0 picks about sqrt(n).
  std::size_t lines = 0;
  // Line popularity: line index is floor(lines * u^skew) for uniform u, so
  // skew 1 is uniform and larger values crowd the low-index lines.
  double skew = 1.0;
  // Probability that a segment starts where an earlier one on its line ends.
  double chain_rate = 0.3;
  // Probability that a segment starts inside an earlier one on its line.
  double overlap_rate = 0.1;
  // Probability that an endpoint is snapped onto a crossing line.
  double contact_rate = 0.1;
};

// Integer-coordinate segments in general position, identical for identical
// (seed, params). Segments taking part in a triple point are redrawn without
// chaining, overlapping or snapping until none remain. Ids are "s0", "s1", ...
// Throws std::invalid_argument on rates outside [0, 1] or skew <= 0.
Representation random_representation(std::uint64_t seed, const RandomParams& params);

}  // namespace segopt
