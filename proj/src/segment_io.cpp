#include "segopt/segment_io.hpp"

#include <fstream>
#include <sstream>
#include <unordered_map>
#include <vector>

#include "segopt/errors.hpp"

namespace segopt {

Representation parse_segments(std::istream& in) {
  std::vector<Segment> segments;
  std::string raw;
  std::unordered_map<SegmentId, std::size_t> first_seen;  // id -> line
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream fields(raw);
    std::vector<std::string> tok;
    for (std::string t; fields >> t;) tok.push_back(std::move(t));
    if (tok.empty()) continue;

    auto fail = [&](const std::string& why) {
      return ParseError("line " + std::to_string(line_no) + ": " + why);
    };
    if (tok.size() != 4 && tok.size() != 5) throw fail("expected 'H|V <line> <a> <b> [id]'");
    Orientation o;
    if (tok[0] == "H") {
      o = Orientation::horizontal;
    } else if (tok[0] == "V") {
      o = Orientation::vertical;
    } else {
      throw fail("unknown orientation '" + tok[0] + "'");
    }
    try {
      Coord line = Rational::parse(tok[1]);
      Coord a = Rational::parse(tok[2]);
      Coord b = Rational::parse(tok[3]);
      SegmentId id = tok.size() == 5 ? tok[4] : std::to_string(segments.size());
      if (auto [it, fresh] = first_seen.emplace(id, line_no); !fresh) {
        throw fail("duplicate segment id '" + id + "' (first on line " + std::to_string(it->second) + ")");
      }
      segments.emplace_back(std::move(id), o, std::move(line), std::move(a), std::move(b));
    } catch (const std::invalid_argument& e) {
      throw fail(e.what());
    } catch (const DegenerateSegmentError& e) {
      throw fail(e.what());
    }
  }
  try {
    return Representation(std::move(segments));
  } catch (const DuplicateIdError& e) {
    throw ParseError(e.what());
  }
}

Representation parse_segments(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_segments(in);
}

Representation read_segment_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path.string() + "'");
  return parse_segments(in);
}

void write_segments(std::ostream& out, const Representation& rep) {
  for (const Segment& s : rep) {
    out << orientation_letter(s.orientation()) << ' ' << s.line() << ' ' << s.lo() << ' ' << s.hi() << ' ' << s.id()
        << '\n';
  }
}

std::string format_segments(const Representation& rep) {
  std::ostringstream out;
  write_segments(out, rep);
  return out.str();
}

void write_segment_file(const std::filesystem::path& path, const Representation& rep) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write '" + path.string() + "'");
  write_segments(out, rep);
  if (!out) throw Error("write failed for '" + path.string() + "'");
}

}  // namespace segopt
