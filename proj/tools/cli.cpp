#include "cli.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <variant>

#include <CLI11.hpp>
#include <json.hpp>

#include "segopt/errors.hpp"
#include "segopt/extremal.hpp"
#include "segopt/lower_bound.hpp"
#include "segopt/matching.hpp"
#include "segopt/mis.hpp"
#include "segopt/oracles.hpp"
#include "segopt/random_instance.hpp"
#include "segopt/segment_io.hpp"
#include "segopt/solution_io.hpp"
#include "segopt/svg.hpp"

namespace segopt::cli {
namespace {

using Json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string input;
  std::string output;
  bool json = false;
  bool deterministic = false;

  std::size_t k = 0;

  std::size_t n = 0;
  std::uint64_t seed = 0;
  RandomParams random;

  std::string technique = "all";
  std::optional<std::uint64_t> budget;
  std::vector<std::string> which;
  std::string is_file;
  bool cut = false;
};

void emit_file(const std::string& path, const std::string& content, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << content;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file || !(file << content) || !file.flush()) throw IoError("cannot write '" + path + "'");
}

// "a.b: value" lines for nested objects; arrays of objects are numbered.
void print_human(std::ostream& out, const Json& j, const std::string& prefix = "") {
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) print_human(out, value, prefix.empty() ? key : prefix + "." + key);
  } else if (j.is_array() && !j.empty() && j.front().is_structured()) {
    for (std::size_t i = 0; i < j.size(); ++i) print_human(out, j[i], prefix + "[" + std::to_string(i) + "]");
  } else if (j.is_string()) {
    out << prefix << ": " << j.get<std::string>() << '\n';
  } else {
    out << prefix << ": " << j.dump() << '\n';
  }
}

void print_report(std::ostream& out, Json report, const Options& opt, Clock::time_point start) {
  if (!opt.deterministic) {
    report["time_ms"] = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  }
  if (opt.json) {
    out << report.dump(2) << '\n';
  } else {
    print_human(out, report);
  }
}

Json stats_json(const GridStats& s) {
  return Json{{"n", s.n},           {"lines_horizontal", s.l_horizontal},
              {"lines_vertical", s.l_vertical}, {"lines_even", s.l_even},
              {"lines_odd", s.l_odd},   {"segments_on_even_lines", s.s_even},
              {"segments_on_odd_lines", s.s_odd}, {"t", s.t}};
}

std::uint64_t oracle_budget(const Options& opt) {
  if (opt.budget) return *opt.budget;
  if (const char* env = std::getenv("SEGOPT_ORACLE_BUDGET")) {
    try {
      std::size_t used = 0;
      std::string text(env);
      unsigned long long v = std::stoull(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
      return v;
    } catch (const std::exception&) {
      throw UsageError("SEGOPT_ORACLE_BUDGET must be a non-negative integer, got '" + std::string(env) + "'");
    }
  }
  return MisOptions{}.node_budget;
}

int cmd_generate_mk(const Options& opt, std::ostream& out) {
  MkInstance inst = make_mk(opt.k);
  emit_file(opt.output, format_segments(inst.representation), out);
  return ok;
}

int cmd_random(const Options& opt, std::ostream& out) {
  RandomParams p = opt.random;
  p.n = opt.n;
  emit_file(opt.output, format_segments(random_representation(opt.seed, p)), out);
  return ok;
}

int cmd_stats(const Options& opt, std::ostream& out) {
  auto start = Clock::now();
  Representation rep = read_segment_file(opt.input);
  bool favorable_input = std::holds_alternative<FavorableRepresentation>(is_favorable(rep));
  FavorableRepresentation frep = make_favorable(rep);
  Json report{{"input", opt.input}, {"favorable_input", favorable_input}, {"stats", stats_json(grid_stats(frep.rep()))}};
  print_report(out, std::move(report), opt, start);
  return ok;
}

int cmd_lb(const Options& opt, std::ostream& out) {
  auto start = Clock::now();
  Representation rep = read_segment_file(opt.input);
  FavorableRepresentation frep = make_favorable(rep);
  GridStats stats = grid_stats(frep.rep());

  std::vector<Technique> order;
  if (opt.technique == "all") {
    order = {Technique::odd, Technique::line, Technique::even, Technique::best};
  } else {
    order = {parse_technique(opt.technique)};
  }

  Json techniques = Json::array();
  std::optional<TechniqueResult> last;
  bool all_certified = true;
  for (Technique t : order) {
    TechniqueResult r = run_technique(t, frep);
    const bool certified = r.certified(frep.rep()) && is_independent(rep, r.independent_set);
    all_certified = all_certified && certified;
    Json entry{{"technique", std::string(to_string(r.technique))},
               {"origin", std::string(to_string(r.origin))},
               {"achieved", r.achieved},
               {"guarantee", r.guarantee.to_string()},
               {"guarantee_approx", r.guarantee.approx()},
               {"certified", certified}};
    if (r.even) {
      entry["cut_points"] = r.even->cut.size();
      entry["cut_direction"] = std::string(to_string(r.even->cut.direction()));
    }
    techniques.push_back(std::move(entry));
    last = std::move(r);
  }
  if (!opt.output.empty()) emit_file(opt.output, format_technique_result(*last), out);

  Json report{{"input", opt.input}, {"stats", stats_json(stats)}, {"techniques", std::move(techniques)}};
  print_report(out, std::move(report), opt, start);
  return all_certified ? ok : internal_error;
}

int cmd_exact(const Options& opt, std::ostream& out) {
  auto start = Clock::now();
  Representation rep = read_segment_file(opt.input);
  IntersectionGraph g = build_graph(rep);
  MisStats mis_stats;
  IndependentSet best = exact_mis(g, MisOptions{oracle_budget(opt)}, &mis_stats);
  if (!opt.output.empty()) emit_file(opt.output, format_independent_set(best), out);
  Json report{{"input", opt.input},
              {"n", rep.size()},
              {"alpha", best.size()},
              {"certified", is_independent(rep, best)},
              {"nodes", mis_stats.nodes}};
  print_report(out, std::move(report), opt, start);
  return ok;
}

int cmd_theta(const Options& opt, std::ostream& out) {
  auto start = Clock::now();
  Representation rep = read_segment_file(opt.input);
  IntersectionGraph g = build_graph(rep);
  CliqueCover cover = clique_cover_number_trianglefree(g);
  if (!opt.output.empty()) {
    std::ostringstream text;
    write_cover(text, g, cover);
    emit_file(opt.output, text.str(), out);
  }
  Json report{{"input", opt.input}, {"n", rep.size()}, {"theta", cover.size()}};
  print_report(out, std::move(report), opt, start);
  return ok;
}

int cmd_alpha_star(const Options& opt, std::ostream& out) {
  auto start = Clock::now();
  Representation rep = read_segment_file(opt.input);
  FractionalIndependence f = fractional_independence(build_graph(rep));
  std::map<std::string, std::size_t> weights{{"0", 0}, {"1/2", 0}, {"1", 0}};
  for (const Rational& w : f.weights) ++weights[w.to_string()];
  Json report{{"input", opt.input},
              {"n", rep.size()},
              {"alpha_star", f.value.to_string()},
              {"weights", Json{{"zero", weights["0"]}, {"half", weights["1/2"]}, {"one", weights["1"]}}}};
  print_report(out, std::move(report), opt, start);
  return ok;
}

int cmd_oracles(const Options& opt, std::ostream& out) {
  auto start = Clock::now();
  Representation rep = read_segment_file(opt.input);
  IntersectionGraph g = build_graph(rep);
  std::vector<std::string> which = opt.which.empty() ? std::vector<std::string>{"alpha", "theta", "alpha_star"} : opt.which;
  Json report{{"input", opt.input}, {"n", rep.size()}};
  for (const std::string& w : which) {
    if (w == "alpha") {
      IndependentSet best = exact_mis(g, MisOptions{oracle_budget(opt)});
      report["alpha"] = best.size();
    } else if (w == "theta") {
      report["theta"] = clique_cover_number_trianglefree(g).size();
    } else if (w == "alpha_star") {
      report["alpha_star"] = fractional_independence(g).value.to_string();
    }
  }
  print_report(out, std::move(report), opt, start);
  return ok;
}

int cmd_verify(const Options& opt, std::ostream& out) {
  auto start = Clock::now();
  Representation rep = read_segment_file(opt.input);
  Json report{{"input", opt.input}, {"n", rep.size()}};
  bool clean = true;
  if (auto violation = validate_general_position(rep)) {
    clean = false;
    report["general_position"] = Json{{"ok", false}, {"point", to_string(violation->point)}, {"ids", violation->ids}};
  } else {
    report["general_position"] = Json{{"ok", true}};
  }
  auto fav = is_favorable(rep);
  if (auto* v = std::get_if<FavorabilityViolation>(&fav)) {
    clean = false;
    report["favorable"] = Json{{"ok", false}, {"kind", v->kind}, {"detail", v->detail}, {"ids", v->ids}};
  } else {
    report["favorable"] = Json{{"ok", true}};
  }
  print_report(out, std::move(report), opt, start);
  return clean ? ok : validation_error;
}

int cmd_render(const Options& opt, std::ostream& out) {
  Representation rep = read_segment_file(opt.input);
  RenderOptions render;
  if (!opt.is_file.empty()) {
    IndependentSet set = read_independent_set_file(opt.is_file);
    for (const auto& id : set.ids()) (void)rep.index_of(id);
    render.highlight = std::move(set);
  }
  if (opt.cut) {
    // The cut lives in the favorable form, so that form is drawn.
    FavorableRepresentation frep = make_favorable(rep);
    std::vector<Point> candidates = candidate_points(frep);
    render.cut = build_cut(candidates, frep.rep());
    rep = frep.rep();
  }
  emit_file(opt.output, render_svg(rep, render), out);
  return ok;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Certified independent sets in intersection graphs of axis-parallel segments", "segopt"};
  app.require_subcommand(1);
  Options opt;

  auto add_input = [&](CLI::App* sub) { sub->add_option("input", opt.input, "Segment file")->required(); };
  auto add_report = [&](CLI::App* sub) {
    sub->add_flag("--json", opt.json, "JSON report");
    sub->add_flag("--deterministic", opt.deterministic, "Omit timing from the report");
  };

  auto* generate = app.add_subcommand("generate-mk", "Write the extremal instance M_k");
  generate->add_option("-k,--k", opt.k, "Number of boxes")->required()->check(CLI::Range(std::size_t{1}, std::size_t{100'000}));
  generate->add_option("-o,--output", opt.output, "Output segment file (default stdout)");

  auto* random = app.add_subcommand("random", "Write a random instance in general position");
  random->add_option("-n,--n", opt.n, "Number of segments")->required();
  random->add_option("--seed", opt.seed, "Random seed");
  random->add_option("--lines", opt.random.lines, "Grid lines per orientation (0: about sqrt(n))");
  random->add_option("--skew", opt.random.skew, "Line popularity skew")->check(CLI::PositiveNumber);
  random->add_option("--chain-rate", opt.random.chain_rate)->check(CLI::Range(0.0, 1.0));
  random->add_option("--overlap-rate", opt.random.overlap_rate)->check(CLI::Range(0.0, 1.0));
  random->add_option("--contact-rate", opt.random.contact_rate)->check(CLI::Range(0.0, 1.0));
  random->add_option("-o,--output", opt.output, "Output segment file (default stdout)");

  auto* stats = app.add_subcommand("stats", "Grid statistics of the favorable form");
  add_input(stats);
  add_report(stats);

  auto* lb = app.add_subcommand("lb", "Run the lower-bound techniques");
  add_input(lb);
  add_report(lb);
  lb->add_option("-t,--technique", opt.technique, "odd, line, even, best or all")
      ->check(CLI::IsMember({"odd", "line", "even", "best", "all"}));
  lb->add_option("-o,--output", opt.output, "Independent set file (best result for 'all')");

  auto* exact = app.add_subcommand("exact", "Maximum independent set by branch and bound");
  add_input(exact);
  add_report(exact);
  exact->add_option("--budget", opt.budget, "Node budget (overrides SEGOPT_ORACLE_BUDGET)");
  exact->add_option("-o,--output", opt.output, "Independent set file");

  auto* theta = app.add_subcommand("theta", "Clique cover number of a triangle-free instance");
  add_input(theta);
  add_report(theta);
  theta->add_option("-o,--output", opt.output, "Cover file");

  auto* alpha_star = app.add_subcommand("alpha-star", "Fractional independence number");
  add_input(alpha_star);
  add_report(alpha_star);

  auto* oracles = app.add_subcommand("oracles", "Exact alpha, theta and alpha*");
  add_input(oracles);
  add_report(oracles);
  oracles->add_option("--which", opt.which, "Subset of alpha, theta, alpha_star")
      ->delimiter(',')
      ->check(CLI::IsMember({"alpha", "theta", "alpha_star"}));
  oracles->add_option("--budget", opt.budget, "Node budget for alpha (overrides SEGOPT_ORACLE_BUDGET)");

  auto* verify = app.add_subcommand("verify", "Check general position and favorability");
  add_input(verify);
  add_report(verify);

  auto* render = app.add_subcommand("render", "Draw an instance as SVG");
  add_input(render);
  render->add_option("--is", opt.is_file, "Independent set file to highlight");
  render->add_flag("--cut", opt.cut, "Draw the cut of the favorable form");
  render->add_option("-o,--output", opt.output, "Output SVG (default stdout)");

  std::vector<const char*> argv{"segopt"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return usage_error;
  }

  try {
    if (generate->parsed()) return cmd_generate_mk(opt, out);
    if (random->parsed()) return cmd_random(opt, out);
    if (stats->parsed()) return cmd_stats(opt, out);
    if (lb->parsed()) return cmd_lb(opt, out);
    if (exact->parsed()) return cmd_exact(opt, out);
    if (theta->parsed()) return cmd_theta(opt, out);
    if (alpha_star->parsed()) return cmd_alpha_star(opt, out);
    if (oracles->parsed()) return cmd_oracles(opt, out);
    if (verify->parsed()) return cmd_verify(opt, out);
    if (render->parsed()) return cmd_render(opt, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return usage_error;
  } catch (const InvalidK& e) {
    err << "error: " << e.what() << '\n';
    return usage_error;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return input_error;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return input_error;
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << '\n';
    return budget_error;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return validation_error;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return internal_error;
  }
  return usage_error;
}

}  // namespace segopt::cli
