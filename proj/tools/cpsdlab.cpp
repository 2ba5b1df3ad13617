#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "commands.hpp"

namespace {

using cpsdlab::Json;
using namespace cpsdlab::cli;

struct Globals {
  CommonOptions common;
  std::string out;
  std::string format = "json";
};

void add_common(CLI::App* cmd, Globals& g) {
  cmd->add_option("--tol", g.common.tol, "verification tolerance")->capture_default_str();
  cmd->add_option("--cap", g.common.cap, "largest Clifford source dimension")->capture_default_str();
  cmd->add_option("--out", g.out, "write the result here instead of stdout");
  cmd->add_option("--format", g.format, "output format")->check(CLI::IsMember({"json"}));
}

Json load(const std::string& path) { return cpsdlab::read_json_file(path); }

int emit(const CommandResult& r, const Globals& g) {
  const std::string text = cpsdlab::dump_json(r.to_json());
  if (r.status != Status::Ok) {
    std::cerr << text;
    return r.exit_code();
  }
  if (g.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(g.out);
    if (!f) {
      CommandResult err;
      err.status = Status::InvalidInput;
      err.message = "cannot write " + g.out;
      std::cerr << cpsdlab::dump_json(err.to_json());
      return err.exit_code();
    }
    f << text;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Completely positive semidefinite factorizations, bounds and separations"};
  app.require_subcommand(1);
  Globals g;

  std::string kind;
  GenerateParams gen;
  auto* generate = app.add_subcommand("generate", "build a named matrix family");
  generate->add_option("kind", kind, "family")
      ->required()
      ->check(CLI::IsMember({"elliptope-extreme", "exp-family", "cycle-sep", "odd-cycle-dnn", "eij-gram"}));
  generate->add_option("--n", gen.n, "size parameter");
  generate->add_option("--r", gen.r, "rank parameter");
  generate->add_option("--t", gen.t, "cycle parameter (length 2t + 1)");
  add_common(generate, g);

  std::string input;
  auto* factorize = app.add_subcommand("factorize", "cpsd factorization of a Gram-Lorentz input");
  factorize->add_option("input", input, "Lorentz vectors or 2x2 matrix JSON")->required();
  add_common(factorize, g);

  BoundOptions bound_opts;
  std::string verify_path;
  auto* bound = app.add_subcommand("bound", "lower and upper bounds on cpsd-rank");
  bound->add_option("input", input, "matrix JSON")->required();
  bound->add_flag("--scale-search", bound_opts.scale_search, "search diagonal scalings");
  bound->add_option("--scale-iters", bound_opts.scale_iters, "scaling sweeps")->capture_default_str();
  bound->add_flag("--graph", bound_opts.graph, "report the support graph test");
  bound->add_option("--verify", verify_path, "factorization JSON to attach as upper bound");
  add_common(bound, g);

  BehaviorOptions behavior_opts;
  auto* behavior = app.add_subcommand("behavior", "behavior of a correlation matrix");
  behavior->add_option("input", input, "correlation matrix JSON")->required();
  behavior->add_flag("--simulate", behavior_opts.simulate, "cross-check against a quantum simulation");
  behavior->add_flag("--validate", behavior_opts.validate, "check the affine section constraints");
  add_common(behavior, g);

  auto* graph = app.add_subcommand("graph", "decide whether a graph is a cpsd-graph");
  graph->add_option("input", input, "graph JSON")->required();
  add_common(graph, g);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    CommandResult err;
    err.status = Status::InvalidInput;
    err.message = e.what();
    std::cerr << cpsdlab::dump_json(err.to_json());
    return err.exit_code();
  }

  CommandResult result;
  try {
    if (*generate) {
      result = cmd_generate(kind, gen, g.common);
    } else if (*factorize) {
      result = cmd_factorize(load(input), g.common);
    } else if (*bound) {
      if (!verify_path.empty()) bound_opts.verify = load(verify_path);
      result = cmd_bound(load(input), bound_opts, g.common);
    } else if (*behavior) {
      result = cmd_behavior(load(input), behavior_opts, g.common);
    } else if (*graph) {
      result = cmd_graph(load(input), g.common);
    }
  } catch (const cpsdlab::Error& e) {
    result = CommandResult{};
    result.status = e.kind() == cpsdlab::ErrorKind::CapExceeded ? Status::CapExceeded : Status::InvalidInput;
    result.message = e.what();
  }
  return emit(result, g);
}
