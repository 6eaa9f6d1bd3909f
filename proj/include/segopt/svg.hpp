#pragma once

#include <optional>
#include <string>

#include "segopt/cut.hpp"
#include "segopt/geometry.hpp"
#include "segopt/graph.hpp"

namespace segopt {

struct RenderOptions {
  std::optional<IndependentSet> highlight;
  std::optional<Cut> cut;
  double width = 800;  // pixels; height follows the aspect ratio
};

// SVG 1.1 document: one <line> per segment (class "segment" or "chosen"), a
// cross <path> per touching pair on a grid line, and the cut as a dotted
// <polyline> clipped to the bounding box grown by 1. Output depends only on
// the inputs.
std::string render_svg(const Representation& rep, const RenderOptions& options = {});

}  // namespace segopt
