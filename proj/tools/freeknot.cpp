// freeknot: batch front end. JSON report on stdout, diagnostics on stderr.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "freeknot/freeknot.hpp"
#include "freeknot/json.hpp"

using namespace freeknot;
using nlohmann::json;

namespace {

struct Options {
  std::vector<std::string> diagrams;
  std::string file;
  std::size_t max_crossings = 8;
  std::size_t max_depth = 4;
  std::string parity;
  std::string kind;
  std::string theorem;
  std::size_t max_n = 8;
  bool json_only = false;
};

std::vector<Diagram> inputs(const Options& o, std::size_t want) {
  std::vector<std::string> texts = o.diagrams;
  if (!o.file.empty()) {
    std::ifstream in(o.file);
    if (!in) throw DiagramError("cannot read " + o.file);
    for (std::string line; std::getline(in, line);)
      if (line.find_first_not_of(" \t\r") != std::string::npos) texts.push_back(line);
  }
  if (texts.size() != want)
    throw DiagramError("expected " + std::to_string(want) + " diagram(s), got " + std::to_string(texts.size()));
  std::vector<Diagram> out;
  for (const auto& t : texts) out.push_back(parse_diagram(t));
  return out;
}

ParityKind parity_kind_for(const Diagram& d) {
  if (d.component_count() == 2) return ParityKind::Component;
  return ParityKind::Gaussian;
}

json moves_json(const Diagram& d, const std::vector<MoveInstance>& ms) {
  json out = json::array();
  for (const auto& m : ms) {
    json j = to_json(m);
    j["resulting_diagram"] = emit_diagram(apply_move(d, m));
    out.push_back(j);
  }
  return out;
}

// Returns the exit code; fills `report`.
int execute(const std::string& command, const Options& o, json& report) {
  if (command == "examples") {
    auto w = search_long_example(o.max_n);
    report["result"] = {{"link", emit_diagram(builtin_example_link())},
                        {"knot", emit_diagram(builtin_example_knot())},
                        {"long_witness", w ? json(emit_diagram(*w)) : json(nullptr)}};
    return 0;
  }
  if (command == "bfs") {
    auto ds = inputs(o, 2);
    report["input"] = {emit_diagram(canonical_form(ds[0])), emit_diagram(canonical_form(ds[1]))};
    auto path = bfs_equivalence(ds[0], ds[1], o.max_crossings, o.max_depth);
    report["result"] = {{"found", path.has_value()},
                        {"length", path ? json(path->size()) : json(nullptr)},
                        {"path", path ? to_json(*path) : json(nullptr)}};
    return 0;
  }

  Diagram d = inputs(o, 1).front();
  report["input"] = emit_diagram(canonical_form(d));
  if (command == "canon") {
    report["result"] = emit_diagram(canonical_form(d));
  } else if (command == "reduce") {
    Diagram r = reduce_r2(d);
    report["result"] = {{"reduced", emit_diagram(canonical_form(r))}, {"irreducible_input", is_irreducible_r2(d)}};
  } else if (command == "parity") {
    ParityKind kind = parity_kind_for(d);
    report["result"] = {{"kind", kind == ParityKind::Gaussian ? "gaussian" : "component"},
                        {"table", to_json(parity_table(d, kind))}};
  } else if (command == "moves") {
    std::vector<MoveKind> kinds{MoveKind::R1_remove, MoveKind::R2_remove, MoveKind::R3};
    if (d.crossing_count() + 1 <= o.max_crossings) kinds.push_back(MoveKind::R1_add);
    if (d.crossing_count() + 2 <= o.max_crossings) kinds.push_back(MoveKind::R2_add);
    report["result"] = moves_json(d, find_moves(d, kinds));
  } else if (command == "bracket") {
    ZgElement z;
    if (o.kind == "curly") z = bracket_curly(d);
    else if (o.kind == "square") z = bracket_square(d);
    else if (o.kind == "square-or") z = bracket_square_or(d);
    else if (o.kind == "curly2") z = bracket_curly2(d);
    else throw DiagramError("--kind must be one of curly, square, square-or, curly2");
    report["result"] = to_json(z);
  } else if (command == "delta") {
    if (o.parity.empty()) report["result"] = to_json(delta(d));
    else if (o.parity == "odd") report["result"] = to_json(delta_parity(d, Parity::Odd));
    else if (o.parity == "even") report["result"] = to_json(delta_parity(d, Parity::Even));
    else throw DiagramError("--parity must be odd or even");
  } else if (command == "beta") {
    report["result"] = to_json(beta_sequence(d));
  } else if (command == "certify") {
    Certificate c;
    if (o.theorem == "long") c = check_long_theorem(d);
    else if (o.theorem == "link") c = check_link_theorem(d);
    else if (o.theorem == "knot-delta") c = knot_noninvertibility_via_delta(d);
    else throw DiagramError("--theorem must be one of long, link, knot-delta");
    report["result"] = to_json(c);
    return c.verdict == Verdict::NonInvertible ? 0 : 2;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Free knot and link computations on Gauss codes"};
  app.require_subcommand(1);
  Options o;
  auto add = [&](const std::string& name, const std::string& help, std::size_t diagrams) {
    CLI::App* sub = app.add_subcommand(name, help);
    if (diagrams > 0) {
      sub->add_option("diagram", o.diagrams, "Gauss code")->expected(0, static_cast<int>(diagrams));
      sub->add_option("--file", o.file, "read diagrams from a file, one per line");
    }
    sub->add_flag("--json-only", o.json_only, "suppress diagnostics on stderr");
    return sub;
  };
  add("canon", "canonical form", 1);
  add("reduce", "R2 normal form", 1);
  add("parity", "parity table (gaussian for knots, component for two-component links)", 1);
  add("moves", "applicable Reidemeister moves", 1)->add_option("--max-crossings", o.max_crossings);
  CLI::App* bfs = add("bfs", "shortest move path between two diagrams", 2);
  bfs->add_option("--max-crossings", o.max_crossings);
  bfs->add_option("--max-depth", o.max_depth);
  add("bracket", "bracket invariant", 1)
      ->add_option("--kind", o.kind, "curly | square | square-or | curly2")
      ->required();
  add("delta", "the delta map", 1)->add_option("--parity", o.parity, "odd | even");
  add("beta", "distance sequence of an all-intercomponent link", 1);
  add("certify", "non-invertibility certificate", 1)
      ->add_option("--theorem", o.theorem, "long | link | knot-delta")
      ->required();
  add("examples", "built-in examples and the searched long witness", 0)->add_option("--max-n", o.max_n);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  json report{{"command", command}};
  auto t0 = std::chrono::steady_clock::now();
  int code = 0;
  try {
    code = execute(command, o, report);
  } catch (const std::exception& e) {
    if (!o.json_only) std::cerr << "freeknot: " << e.what() << "\n";
    report["error"] = e.what();
    std::cout << report.dump(2) << "\n";
    return 1;
  }
  std::cout << report.dump(2) << "\n";
  if (!o.json_only) {
    double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    std::cerr << "freeknot: " << command << " finished in " << ms << " ms\n";
  }
  return code;
}
