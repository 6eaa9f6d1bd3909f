#include "segopt/solution_io.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>

#include "segopt/errors.hpp"

namespace segopt {
namespace {

std::vector<std::vector<SegmentId>> sorted_groups(const IntersectionGraph& g,
                                                  const std::vector<std::vector<std::size_t>>& groups) {
  std::vector<std::vector<SegmentId>> out;
  out.reserve(groups.size());
  for (const auto& group : groups) {
    std::vector<SegmentId> ids;
    for (std::size_t v : group) ids.push_back(g.id(v));
    std::sort(ids.begin(), ids.end());
    out.push_back(std::move(ids));
  }
  std::sort(out.begin(), out.end());
  return out;
}

void write_groups(std::ostream& out, const std::vector<std::vector<SegmentId>>& groups) {
  for (const auto& group : groups) {
    for (std::size_t i = 0; i < group.size(); ++i) out << (i ? " " : "") << group[i];
    out << '\n';
  }
}

}  // namespace

void write_independent_set(std::ostream& out, const IndependentSet& set) {
  out << "IS " << set.size() << '\n';
  for (const auto& id : set.ids()) out << id << '\n';
}

std::string format_independent_set(const IndependentSet& set) {
  std::ostringstream out;
  write_independent_set(out, set);
  return out.str();
}

void write_matching(std::ostream& out, const IntersectionGraph& g, const Matching& m) {
  std::vector<std::vector<std::size_t>> groups;
  for (auto [u, v] : m.edges) groups.push_back({u, v});
  out << "MATCHING " << m.size() << '\n';
  write_groups(out, sorted_groups(g, groups));
}

void write_cover(std::ostream& out, const IntersectionGraph& g, const CliqueCover& cover) {
  out << "COVER " << cover.size() << '\n';
  write_groups(out, sorted_groups(g, cover.cliques));
}

IndependentSet parse_independent_set(std::istream& in) {
  std::string line;
  std::optional<std::size_t> declared;
  std::vector<SegmentId> ids;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string first;
    if (!(fields >> first)) continue;
    if (!declared) {
      if (first == "TECHNIQUE") continue;
      std::string count;
      if (first != "IS" || !(fields >> count)) {
        throw ParseError("line " + std::to_string(line_no) + ": expected 'IS <size>' header");
      }
      try {
        declared = std::stoull(count);
      } catch (const std::exception&) {
        throw ParseError("line " + std::to_string(line_no) + ": bad size '" + count + "'");
      }
      continue;
    }
    std::string extra;
    if (fields >> extra) throw ParseError("line " + std::to_string(line_no) + ": expected one id per line");
    ids.push_back(first);
  }
  if (!declared) throw ParseError("missing 'IS <size>' header");
  if (*declared != ids.size()) {
    throw ParseError("header declares " + std::to_string(*declared) + " ids, found " + std::to_string(ids.size()));
  }
  return IndependentSet(std::move(ids));
}

IndependentSet read_independent_set_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return parse_independent_set(in);
}

}  // namespace segopt
