#pragma once

#include <string>
#include <variant>
#include <vector>

#include "segopt/geometry.hpp"

namespace segopt {

struct FavorabilityCertificate {
  bool single_meeting_points = false;  // parallel segments share at most one point
  bool interior_crossings = false;     // orthogonal contacts lie in both interiors
  bool paths_per_line = false;         // each grid line carries one touching chain
  bool general_position = false;       // no point on three segments

  [[nodiscard]] bool all() const {
    return single_meeting_points && interior_crossings && paths_per_line && general_position;
  }
};

struct FavorabilityViolation {
  std::string kind;  // "parallel overlap", "non-interior crossing", "disconnected grid line", "triple point"
  std::string detail;
  std::vector<SegmentId> ids;
};

class FavorableRepresentation;
std::variant<FavorableRepresentation, FavorabilityViolation> is_favorable(const Representation& rep);

// A representation whose favorability has been checked. Only obtainable from
// is_favorable or make_favorable.
class FavorableRepresentation {
 public:
  [[nodiscard]] const Representation& rep() const { return rep_; }
  [[nodiscard]] const FavorabilityCertificate& certificate() const { return certificate_; }
  [[nodiscard]] std::size_t size() const { return rep_.size(); }

 private:
  FavorableRepresentation(Representation rep, FavorabilityCertificate c)
      : rep_(std::move(rep)), certificate_(c) {}
  friend std::variant<FavorableRepresentation, FavorabilityViolation> is_favorable(const Representation& rep);

  Representation rep_;
  FavorabilityCertificate certificate_;
};

// Collinear segments sharing an interval are shortened to the midpoint of the
// shared interval. A segment nested inside another collinear one has no other
// neighbour; it is replaced by a short orthogonal segment crossing its host at
// the nested span's midpoint. Throws GeneralPositionError.
Representation trim_parallel_overlaps(const Representation& rep);

// Every endpoint that touches an orthogonal segment is pushed past the contact
// by half the smallest positive gap between coordinates on that axis.
// Throws ExtensionBlockedError if an extension would change adjacency.
Representation extend_orthogonal_contacts(const Representation& rep);

// Moves every touching chain beyond the first on a grid line to its own line,
// offset by less than half the smallest coordinate gap on that axis. Requires
// single meeting points (throws OverlapError otherwise) and interior
// orthogonal contacts.
Representation separate_paths(const Representation& rep);

// trim -> extend -> separate. Adjacency on ids is preserved.
// Throws GeneralPositionError.
FavorableRepresentation make_favorable(const Representation& rep);

}  // namespace segopt
