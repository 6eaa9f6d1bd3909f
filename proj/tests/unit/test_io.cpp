#include <doctest.h>

#include <filesystem>
#include <sstream>

#include "instances.hpp"
#include "segopt/errors.hpp"
#include "segopt/extremal.hpp"
#include "segopt/lower_bound.hpp"
#include "segopt/matching.hpp"
#include "segopt/oracles.hpp"
#include "segopt/segment_io.hpp"
#include "segopt/solution_io.hpp"

using namespace segopt;

TEST_CASE("segment records") {
  Representation r = parse_segments(
      "# header\n"
      "H 0 0 5 A\n"
      "\n"
      "V 1/2 -1 6   # trailing comment\n"
      "H 5 8 0 C\n");
  REQUIRE(r.size() == 3);
  CHECK(r[0].id() == "A");
  CHECK(r[1].id() == "1");
  CHECK(r[1].line() == Rational(1, 2));
  CHECK(r[2].lo() == Rational(0));
  CHECK(r[2].hi() == Rational(8));
  CHECK(parse_segments("").empty());
}

TEST_CASE("segment parse errors carry the line number") {
  auto message = [](const std::string& text) {
    try {
      (void)parse_segments(text);
    } catch (const ParseError& e) {
      return std::string(e.what());
    }
    return std::string("no error");
  };
  CHECK(message("H 0 0 1\nX 0 0 1\n").find("line 2") != std::string::npos);
  CHECK(message("H 0 0\n").find("line 1") != std::string::npos);
  CHECK(message("H 0 1 1\n").find("line 1") != std::string::npos);
  CHECK(message("H 0 0 1 a\nV 3 0 1 a\n").find("line 2") != std::string::npos);
  CHECK(message("H 0 0 1/0\n").find("line 1") != std::string::npos);
  CHECK(message("H 0 0 1 a extra\n").find("line 1") != std::string::npos);
}

TEST_CASE("segment files round-trip") {
  for (std::size_t k : {1u, 3u}) {
    Representation r = make_mk(k).representation;
    CHECK(parse_segments(format_segments(r)) == r);
  }
  Representation frac = fixtures::rep({fixtures::H("x", Rational(1, 3), Rational(-7, 2), 4)});
  CHECK(parse_segments(format_segments(frac)) == frac);

  auto path = std::filesystem::temp_directory_path() / "segopt_io_roundtrip.seg";
  Representation r = make_mk(2).representation;
  write_segment_file(path, r);
  CHECK(read_segment_file(path) == r);
  std::filesystem::remove(path);
  CHECK_THROWS_AS(read_segment_file(path), ParseError);
}

TEST_CASE("independent set files") {
  IndependentSet set({"b", "a", "c"});
  std::string text = format_independent_set(set);
  CHECK(text == "IS 3\na\nb\nc\n");
  std::istringstream in("TECHNIQUE odd achieved=3 guarantee=1\n# note\nIS 3\na\nb\nc\n");
  CHECK(parse_independent_set(in) == set);
  std::istringstream short_block("IS 4\na\n");
  CHECK_THROWS_AS(parse_independent_set(short_block), ParseError);
  std::istringstream no_header("a\nb\n");
  CHECK_THROWS_AS(parse_independent_set(no_header), ParseError);
}

TEST_CASE("technique result serialization") {
  MkInstance m2 = make_mk(2);
  TechniqueResult r = odd_technique(fixtures::favorable(m2.representation));
  std::string text = format_technique_result(r);
  CHECK(text.rfind("TECHNIQUE odd achieved=4 guarantee=4\nIS 4\n", 0) == 0);
  std::istringstream in(text);
  CHECK(parse_independent_set(in) == r.independent_set);
}

TEST_CASE("matching and cover files") {
  IntersectionGraph g = build_graph(fixtures::five_cycle());
  std::ostringstream m;
  write_matching(m, g, max_matching(g));
  CHECK(m.str().rfind("MATCHING 2\n", 0) == 0);
  std::ostringstream c;
  write_cover(c, g, clique_cover_number_trianglefree(g));
  CHECK(c.str().rfind("COVER 3\n", 0) == 0);
}
