#include "segopt/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "segopt/grid.hpp"

namespace segopt {
namespace {

// Fixed six decimals with trailing zeros stripped, so identical inputs give
// identical bytes.
std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  std::string s(buf);
  s.erase(s.find_last_not_of('0') + 1);
  if (s.back() == '.') s.pop_back();
  if (s == "-0") s = "0";
  return s;
}

std::string escape(const std::string& text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::string render_svg(const Representation& rep, const RenderOptions& options) {
  Point lo{0, 0};
  Point hi{1, 1};
  if (!rep.empty()) {
    lo = rep[0].low_end();
    hi = rep[0].high_end();
    for (const Segment& s : rep) {
      for (const Point& p : {s.low_end(), s.high_end()}) {
        lo = Point{std::min(lo.x, p.x), std::min(lo.y, p.y)};
        hi = Point{std::max(hi.x, p.x), std::max(hi.y, p.y)};
      }
    }
  }
  lo = Point{lo.x - 1, lo.y - 1};
  hi = Point{hi.x + 1, hi.y + 1};

  const double span_x = (hi.x - lo.x).to_double();
  const double span_y = (hi.y - lo.y).to_double();
  const double height = options.width * span_y / span_x;
  const double mark = std::max(span_x, span_y) / 150.0;
  // SVG y grows downwards.
  auto sx = [&](const Coord& x) { return num((x - lo.x).to_double()); };
  auto sy = [&](const Coord& y) { return num((hi.y - y).to_double()); };

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << num(options.width) << "\" height=\""
      << num(height) << "\" viewBox=\"0 0 " << num(span_x) << ' ' << num(span_y) << "\">\n"
      << "<style>line,path,polyline{vector-effect:non-scaling-stroke;fill:none}"
      << ".segment{stroke:#555;stroke-width:1.5}.chosen{stroke:#d62728;stroke-width:3}"
      << ".meeting{stroke:#1f77b4;stroke-width:1.5}.cut{stroke:#2ca02c;stroke-width:1.5;stroke-dasharray:2 3}</style>\n";

  for (const Segment& s : rep) {
    const bool chosen = options.highlight && options.highlight->contains(s.id());
    Point a = s.low_end();
    Point b = s.high_end();
    out << "<line class=\"" << (chosen ? "chosen" : "segment") << "\" x1=\"" << sx(a.x) << "\" y1=\"" << sy(a.y)
        << "\" x2=\"" << sx(b.x) << "\" y2=\"" << sy(b.y) << "\"><title>" << escape(s.id()) << "</title></line>\n";
  }

  for (const GridLine& g : grid_lines(rep)) {
    for (std::size_t i = 0; i + 1 < g.members.size(); ++i) {
      const Segment& a = rep[g.members[i]];
      const Segment& b = rep[g.members[i + 1]];
      if (a.hi() != b.lo()) continue;
      Point p = b.low_end();
      const double x = (p.x - lo.x).to_double();
      const double y = (hi.y - p.y).to_double();
      out << "<path class=\"meeting\" d=\"M" << num(x - mark) << ' ' << num(y - mark) << 'L' << num(x + mark) << ' '
          << num(y + mark) << 'M' << num(x - mark) << ' ' << num(y + mark) << 'L' << num(x + mark) << ' '
          << num(y - mark) << "\"/>\n";
    }
  }

  if (options.cut) {
    out << "<polyline class=\"cut\" points=\"";
    bool first = true;
    for (const Point& p : options.cut->polyline(lo, hi)) {
      out << (first ? "" : " ") << sx(p.x) << ',' << sy(p.y);
      first = false;
    }
    out << "\"/>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace segopt
