#pragma once

#include <cstddef>
#include <vector>

#include "segopt/geometry.hpp"
#include "segopt/graph.hpp"

namespace segopt {

// One k-box: k vertical lines carrying an up and a down segment, k horizontal
// lines carrying a left and a right segment. Up/down lists run left to right,
// left/right lists top to bottom.
struct KBox {
  std::size_t index = 0;  // 1-based position along the diagonal
  std::vector<SegmentId> up;
  std::vector<SegmentId> down;
  std::vector<SegmentId> left;
  std::vector<SegmentId> right;
  std::vector<Point> vertical_meeting_points;    // between up_j and down_j
  std::vector<Point> horizontal_meeting_points;  // between left_j and right_j

  [[nodiscard]] std::size_t size() const { return up.size() + down.size() + left.size() + right.size(); }
};

struct MkInstance {
  std::size_t k = 0;
  Representation representation;
  std::vector<KBox> boxes;
};

// k boxes along the diagonal of the square [0, 4k^2], every segment running
// from its meeting point to a side of the square. Box i (offset o = 4k(i-1))
// has vertical meeting points (o+4j-3, o+4k-4j+3) and horizontal meeting
// points (o+4j-1, o+4k-4j+1). Ids are b<i>_<u|d|l|r><j>. Throws InvalidK.
MkInstance make_mk(std::size_t k);

// Left and up segments of the first box, right and down segments of the
// second, right segments plus the first up segment of every later box.
// Size k^2 + 3k - 2.
IndependentSet canonical_independent_set(const MkInstance& inst);

enum class BoxClass { interesting, boring };

BoxClass classify_box(const KBox& box, const IndependentSet& set);

struct BoxBoundCheck {
  std::size_t count = 0;  // |box ∩ set|
  BoxClass kind = BoxClass::boring;
  bool ok = false;        // count <= 2k, and <= k + 1 when boring
};

BoxBoundCheck verify_box_bounds(const KBox& box, const IndependentSet& set);

std::size_t count_interesting(const MkInstance& inst, const IndependentSet& set);

}  // namespace segopt
