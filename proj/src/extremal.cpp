#include "segopt/extremal.hpp"

#include <string>

#include "segopt/errors.hpp"

namespace segopt {
namespace {

SegmentId box_id(std::size_t box, char role, std::size_t j) {
  return "b" + std::to_string(box) + "_" + role + std::to_string(j);
}

std::size_t count_in(const std::vector<SegmentId>& ids, const IndependentSet& set) {
  std::size_t c = 0;
  for (const auto& id : ids) c += set.contains(id) ? 1 : 0;
  return c;
}

}  // namespace

MkInstance make_mk(std::size_t k) {
  if (k < 1) throw InvalidK("k must be at least 1, got " + std::to_string(k));
  if (k > 100'000) throw InvalidK("k too large: " + std::to_string(k));
  const auto kk = static_cast<std::int64_t>(k);
  const std::int64_t side = 4 * kk * kk;

  MkInstance inst;
  inst.k = k;
  std::vector<Segment> segments;
  segments.reserve(4 * k * k);
  for (std::int64_t i = 1; i <= kk; ++i) {
    const std::int64_t o = (i - 1) * 4 * kk;
    KBox box;
    box.index = static_cast<std::size_t>(i);
    for (std::int64_t j = 1; j <= kk; ++j) {
      const auto jj = static_cast<std::size_t>(j);
      Point v{o + 4 * j - 3, o + 4 * kk - 4 * j + 3};
      Point h{o + 4 * j - 1, o + 4 * kk - 4 * j + 1};
      box.up.push_back(box_id(box.index, 'u', jj));
      box.down.push_back(box_id(box.index, 'd', jj));
      box.left.push_back(box_id(box.index, 'l', jj));
      box.right.push_back(box_id(box.index, 'r', jj));
      segments.emplace_back(box.up.back(), Orientation::vertical, v.x, v.y, side);
      segments.emplace_back(box.down.back(), Orientation::vertical, v.x, 0, v.y);
      segments.emplace_back(box.left.back(), Orientation::horizontal, h.y, 0, h.x);
      segments.emplace_back(box.right.back(), Orientation::horizontal, h.y, h.x, side);
      box.vertical_meeting_points.push_back(std::move(v));
      box.horizontal_meeting_points.push_back(std::move(h));
    }
    inst.boxes.push_back(std::move(box));
  }
  inst.representation = Representation(std::move(segments));
  return inst;
}

IndependentSet canonical_independent_set(const MkInstance& inst) {
  std::vector<SegmentId> ids;
  for (const KBox& box : inst.boxes) {
    if (box.index == 1) {
      ids.insert(ids.end(), box.left.begin(), box.left.end());
      ids.insert(ids.end(), box.up.begin(), box.up.end());
    } else if (box.index == 2) {
      ids.insert(ids.end(), box.right.begin(), box.right.end());
      ids.insert(ids.end(), box.down.begin(), box.down.end());
    } else {
      ids.insert(ids.end(), box.right.begin(), box.right.end());
      ids.push_back(box.up.front());
    }
  }
  return IndependentSet(std::move(ids));
}

BoxClass classify_box(const KBox& box, const IndependentSet& set) {
  const bool down_right = count_in(box.down, set) > 0 && count_in(box.right, set) > 0;
  const bool up_left = count_in(box.up, set) > 0 && count_in(box.left, set) > 0;
  return down_right || up_left ? BoxClass::interesting : BoxClass::boring;
}

BoxBoundCheck verify_box_bounds(const KBox& box, const IndependentSet& set) {
  const std::size_t k = box.up.size();
  BoxBoundCheck r;
  r.count = count_in(box.up, set) + count_in(box.down, set) + count_in(box.left, set) + count_in(box.right, set);
  r.kind = classify_box(box, set);
  r.ok = r.count <= 2 * k && (r.kind == BoxClass::interesting || r.count <= k + 1);
  return r;
}

std::size_t count_interesting(const MkInstance& inst, const IndependentSet& set) {
  std::size_t c = 0;
  for (const KBox& box : inst.boxes) c += classify_box(box, set) == BoxClass::interesting ? 1 : 0;
  return c;
}

}  // namespace segopt
