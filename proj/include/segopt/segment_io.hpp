#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include "segopt/geometry.hpp"

namespace segopt {

// Line-oriented segment format:
//
//   H <y> <x1> <x2> [id]
//   V <x> <y1> <y2> [id]
//
// Coordinates are integers or p/q. '#' starts a comment. Records without an
// id get their 0-based record number as id. Throws ParseError with the
// offending line number.
Representation parse_segments(std::istream& in);
Representation parse_segments(std::string_view text);
Representation read_segment_file(const std::filesystem::path& path);

void write_segments(std::ostream& out, const Representation& rep);
std::string format_segments(const Representation& rep);
void write_segment_file(const std::filesystem::path& path, const Representation& rep);

}  // namespace segopt
