#pragma once

#include <iosfwd>
#include <string>

#include "segopt/graph.hpp"
#include "segopt/matching.hpp"
#include "segopt/oracles.hpp"

namespace segopt {

// IS <size>          MATCHING <size>       COVER <size>
// <id>               <id> <id>             <id> [<id>]
// ...                ...                   ...
//
// Ids are sorted; pairs are sorted internally and then lexicographically.
void write_independent_set(std::ostream& out, const IndependentSet& set);
void write_matching(std::ostream& out, const IntersectionGraph& g, const Matching& m);
void write_cover(std::ostream& out, const IntersectionGraph& g, const CliqueCover& cover);

std::string format_independent_set(const IndependentSet& set);

// Reads an IS block, skipping blank lines, '#' comments and a leading
// TECHNIQUE header. Throws ParseError.
IndependentSet parse_independent_set(std::istream& in);
IndependentSet read_independent_set_file(const std::string& path);

}  // namespace segopt
