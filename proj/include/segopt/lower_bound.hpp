#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "segopt/bound.hpp"
#include "segopt/cut.hpp"
#include "segopt/graph.hpp"
#include "segopt/grid.hpp"
#include "segopt/normalize.hpp"

namespace segopt {

enum class Technique { odd, line, even, best };

std::string_view to_string(Technique t);
// Throws std::invalid_argument.
Technique parse_technique(std::string_view name);

// Guaranteed sizes as functions of the grid statistics.
Bound odd_guarantee(const GridStats& s);   // n/4 + l_odd/4
Bound line_guarantee(const GridStats& s);  // (n + t)/4
Bound even_guarantee(const GridStats& s);  // n/4 - l_odd/4 + sqrt(2 s_even)/4
Bound best_guarantee(const GridStats& s);  // n/4 + sqrt(n/3)/4
Bound guarantee_for(Technique t, const GridStats& s);

struct EvenArtifacts {
  Cut cut;
  IndependentSet blue;
  IndependentSet orange;
};

struct TechniqueResult {
  Technique technique = Technique::odd;
  // Technique that produced the set; differs from `technique` only for best
  // and for the even technique without even lines.
  Technique origin = Technique::odd;
  IndependentSet independent_set;
  Bound guarantee;
  std::size_t achieved = 0;
  std::optional<EvenArtifacts> even;

  // Set is pairwise disjoint, achieved matches its size and meets the bound.
  [[nodiscard]] bool certified(const Representation& rep) const;
};

// Meeting points whose line splits into two odd parts at them.
std::vector<Point> candidate_points(const FavorableRepresentation& frep);

TechniqueResult odd_technique(const FavorableRepresentation& frep);
// Throws NotBipartiteError if the chosen family is not bipartite.
TechniqueResult line_technique(const FavorableRepresentation& frep);
TechniqueResult even_technique(const FavorableRepresentation& frep);
// Largest of the three; ties prefer odd, then line.
TechniqueResult best_lower_bound(const FavorableRepresentation& frep);
TechniqueResult run_technique(Technique t, const FavorableRepresentation& frep);

// "TECHNIQUE <name> achieved=<k> guarantee=<bound>" followed by the IS block.
void write_technique_result(std::ostream& out, const TechniqueResult& r);
std::string format_technique_result(const TechniqueResult& r);

}  // namespace segopt
