#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include <json.hpp>

#include "cli.hpp"
#include "segopt/graph.hpp"
#include "segopt/segment_io.hpp"
#include "segopt/solution_io.hpp"

namespace fs = std::filesystem;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  int code = segopt::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

// Scratch directory removed on destruction.
class Scratch {
 public:
  Scratch() : dir_(fs::temp_directory_path() / ("segopt_cli_" + std::to_string(counter_++) + "_" + std::to_string(::getpid()))) {
    fs::create_directories(dir_);
  }
  ~Scratch() {
    std::error_code ec;
    fs::remove_all(dir_, ec);
  }
  Scratch(const Scratch&) = delete;
  Scratch& operator=(const Scratch&) = delete;

  [[nodiscard]] std::string path(const std::string& name) const { return (dir_ / name).string(); }
  std::string write(const std::string& name, const std::string& content) const {
    std::ofstream(path(name)) << content;
    return path(name);
  }

 private:
  static inline int counter_ = 0;
  fs::path dir_;
};

std::string mk_file(const Scratch& s, int k) {
  std::string p = s.path("m" + std::to_string(k) + ".seg");
  REQUIRE(run({"generate-mk", "-k", std::to_string(k), "-o", p}).code == segopt::cli::ok);
  return p;
}

nlohmann::json json_of(const Outcome& o) { return nlohmann::json::parse(o.out); }

}  // namespace

TEST_CASE("generate-mk") {
  Outcome o = run({"generate-mk", "-k", "1"});
  CHECK(o.code == 0);
  std::istringstream in(o.out);
  CHECK(segopt::parse_segments(in).size() == 4);

  Scratch s;
  std::string p = mk_file(s, 3);
  CHECK(segopt::read_segment_file(p).size() == 36);

  CHECK(run({"generate-mk", "-k", "0"}).code == segopt::cli::usage_error);
  CHECK(run({"generate-mk"}).code == segopt::cli::usage_error);
  CHECK(run({}).code == segopt::cli::usage_error);
  CHECK(run({"no-such-command"}).code == segopt::cli::usage_error);
}

TEST_CASE("lb") {
  Scratch s;
  std::string m2 = mk_file(s, 2);
  Outcome o = run({"lb", m2, "-t", "all", "--json", "--deterministic"});
  REQUIRE(o.code == 0);
  nlohmann::json j = json_of(o);
  REQUIRE(j["techniques"].size() == 4);
  for (const auto& t : j["techniques"]) CHECK(t["certified"].get<bool>());
  CHECK(j["techniques"][3]["technique"] == "best");
  CHECK(j["techniques"][3]["achieved"].get<std::size_t>() >= 5);
  CHECK_FALSE(j.contains("time_ms"));

  std::string path3 = s.write("p3.seg", "H 0 0 1 a\nH 0 1 2 b\nH 0 2 3 c\n");
  std::string is_path = s.path("p3.is");
  o = run({"lb", path3, "-t", "odd", "-o", is_path, "--json"});
  REQUIRE(o.code == 0);
  CHECK(json_of(o)["techniques"][0]["achieved"] == 2);
  CHECK(json_of(o).contains("time_ms"));
  segopt::IndependentSet set = segopt::read_independent_set_file(is_path);
  CHECK(set.size() == 2);
  CHECK(segopt::is_independent(segopt::read_segment_file(path3), set));

  std::string empty = s.write("empty.seg", "");
  o = run({"lb", empty, "-t", "best", "--json"});
  REQUIRE(o.code == 0);
  CHECK(json_of(o)["techniques"][0]["achieved"] == 0);
  CHECK(json_of(o)["techniques"][0]["guarantee"] == "0");

  o = run({"lb", m2, "-t", "even"});
  CHECK(o.code == 0);
  CHECK(o.out.find("techniques[0].technique: even") != std::string::npos);
  CHECK(run({"lb", m2, "-t", "fancy"}).code == segopt::cli::usage_error);
}

TEST_CASE("oracles") {
  Scratch s;
  struct Case {
    int k;
    int alpha;
    int theta;
    std::string alpha_star;
  };
  for (const Case& c : {Case{2, 8, 8, "8"}, Case{3, 16, 18, "18"}}) {
    Outcome o = run({"oracles", mk_file(s, c.k), "--json"});
    REQUIRE(o.code == 0);
    nlohmann::json j = json_of(o);
    CHECK(j["alpha"] == c.alpha);
    CHECK(j["theta"] == c.theta);
    CHECK(j["alpha_star"] == c.alpha_star);
  }
  std::string c5 = s.write("c5.seg", "H 0 0 5 A\nV 1 -1 6 B\nH 5 0 8 C\nV 7 -1 6 D\nH 0 5 10 E\n");
  nlohmann::json j = json_of(run({"oracles", c5, "--json"}));
  CHECK(j["alpha"] == 2);
  CHECK(j["theta"] == 3);
  CHECK(j["alpha_star"] == "5/2");

  j = json_of(run({"oracles", c5, "--which", "theta", "--json"}));
  CHECK(j.contains("theta"));
  CHECK_FALSE(j.contains("alpha"));

  CHECK(run({"theta", c5}).out.find("theta: 3") != std::string::npos);
  CHECK(run({"alpha-star", c5}).out.find("alpha_star: 5/2") != std::string::npos);
  Outcome exact = run({"exact", c5, "-o", s.path("c5.is")});
  CHECK(exact.code == 0);
  CHECK(segopt::read_independent_set_file(s.path("c5.is")).size() == 2);
}

TEST_CASE("budget exhaustion") {
  Scratch s;
  std::string m3 = mk_file(s, 3);
  CHECK(run({"exact", m3, "--budget", "1"}).code == segopt::cli::budget_error);
  CHECK(run({"oracles", m3, "--budget", "1"}).code == segopt::cli::budget_error);

  ::setenv("SEGOPT_ORACLE_BUDGET", "1", 1);
  CHECK(run({"exact", m3}).code == segopt::cli::budget_error);
  CHECK(run({"exact", m3, "--budget", "100000000"}).code == segopt::cli::ok);
  ::setenv("SEGOPT_ORACLE_BUDGET", "lots", 1);
  CHECK(run({"exact", m3}).code == segopt::cli::usage_error);
  ::unsetenv("SEGOPT_ORACLE_BUDGET");
}

TEST_CASE("verify") {
  Scratch s;
  Outcome o = run({"verify", mk_file(s, 4)});
  CHECK(o.code == 0);

  o = run({"verify", s.write("overlap.seg", "H 0 0 2 a\nH 0 1 3 b\n"), "--json"});
  CHECK(o.code == segopt::cli::validation_error);
  CHECK(json_of(o)["favorable"]["kind"] == "parallel overlap");
  CHECK(json_of(o)["general_position"]["ok"] == true);

  o = run({"verify", s.write("triple.seg", "V 0 -1 0 a\nV 0 0 1 b\nH 0 -1 1 c\n"), "--json"});
  CHECK(o.code == segopt::cli::validation_error);
  CHECK(json_of(o)["general_position"]["point"] == "(0, 0)");
}

TEST_CASE("input errors") {
  Scratch s;
  CHECK(run({"stats", s.path("missing.seg")}).code == segopt::cli::input_error);
  Outcome o = run({"stats", s.write("bad.seg", "H 0 0 1 a\nQ 1 2 3 b\n")});
  CHECK(o.code == segopt::cli::input_error);
  CHECK(o.err.find("2") != std::string::npos);
  CHECK(run({"lb", s.write("triple.seg", "V 0 -1 0 a\nV 0 0 1 b\nH 0 -1 1 c\n")}).code ==
        segopt::cli::validation_error);
}

TEST_CASE("render") {
  Scratch s;
  std::string m2 = mk_file(s, 2);
  Outcome o = run({"render", m2, "--cut"});
  CHECK(o.code == 0);
  CHECK(o.out.find("<polyline") != std::string::npos);
  CHECK(run({"render", s.path("missing.seg")}).code != 0);

  REQUIRE(run({"lb", m2, "-t", "best", "-o", s.path("m2.is")}).code == 0);
  o = run({"render", m2, "--is", s.path("m2.is")});
  CHECK(o.code == 0);
  CHECK(o.out.find("class=\"chosen\"") != std::string::npos);
}

TEST_CASE("random and deterministic reports") {
  Scratch s;
  std::string p = s.path("r.seg");
  REQUIRE(run({"random", "-n", "60", "--seed", "5", "-o", p}).code == 0);
  CHECK(segopt::read_segment_file(p).size() == 60);
  CHECK(run({"random", "-n", "60", "--seed", "5"}).out == run({"random", "-n", "60", "--seed", "5"}).out);
  CHECK(run({"random", "-n", "5", "--chain-rate", "2"}).code == segopt::cli::usage_error);

  Outcome a = run({"lb", p, "-t", "all", "--deterministic"});
  Outcome b = run({"lb", p, "-t", "all", "--deterministic"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  Outcome st = run({"stats", p, "--json", "--deterministic"});
  CHECK(json_of(st)["stats"]["n"] == 60);
}
