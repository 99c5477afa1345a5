#include "unssp/cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "unssp/complete_set.hpp"
#include "unssp/enumeration.hpp"
#include "unssp/errors.hpp"
#include "unssp/instances.hpp"
#include "unssp/json_io.hpp"
#include "unssp/lp_export.hpp"
#include "unssp/solvers.hpp"

namespace unssp {

namespace {

using nlohmann::json;

struct Options {
  std::string graph;
  std::string lambda = "sum";
  std::string epsilon = "0";
  std::string delta;
  std::string algorithm = "alg2";
  std::uint64_t max_paths = kDefaultMaxPaths;
  bool sum_fast_path = false;
  Value xi = 0;
  std::optional<Value> psi;
  std::string method = "exhaustive";
  std::string model;
  std::string family;
  int blocks = 1;
  int n = 0;
  int m = 0;
  Cost cost_max = 9;
  std::uint64_t seed = 1;
  std::string output;
};

void error_line(std::ostream& err, const char* kind, const std::string& message) {
  err << json{{"error", kind}, {"message", message}}.dump() << "\n";
}

// Holds the stream results are written to: --output when given, else `out`.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary);
      if (!file_) throw ValidationError("cannot open output file '" + path + "'");
      stream_ = &file_;
    }
  }
  std::ostream& get() { return *stream_; }

 private:
  std::ofstream file_;
  std::ostream* stream_;
};

int cmd_solve(const Options& o, std::ostream& out) {
  const Graph g = read_graph_file(o.graph);
  const Lambda lam = parse_lambda(o.lambda, g.num_vertices());
  ArcMask none(g);
  const SolveOutcome r = solve(g, none, g.source(), g.sink(), lam);
  json j;
  if (r.found()) {
    j = path_record(g, *r.path, *r.value);
  } else {
    j = json{{"value", nullptr}};
  }
  out << j.dump() << "\n";
  return kExitOk;
}

int cmd_enumerate(const Options& o, std::ostream& out) {
  const Rational eps = parse_rational(o.epsilon);
  const Algorithm algo = parse_algorithm(o.algorithm);
  if (o.sum_fast_path && algo != Algorithm::Alg1) {
    throw ValidationError("--sum-fast-path applies to --algorithm alg1 only");
  }
  const Graph g = read_graph_file(o.graph);
  const Lambda lam = parse_lambda(o.lambda, g.num_vertices());
  EnumerationOptions opt;
  opt.sum_fast_path = o.sum_fast_path;
  PathSink sink([&](const Path& p, Value v) { out << path_record(g, p, v).dump() << "\n"; },
                o.max_paths);
  const auto start = std::chrono::steady_clock::now();
  const RunStats stats = enumerate(algo, g, lam, eps, sink, opt);
  const auto elapsed = std::chrono::duration<double, std::milli>(
      std::chrono::steady_clock::now() - start);
  json rec = stats_json(stats);
  rec["wall_time_ms"] = elapsed.count();
  out << json{{"stats", rec}}.dump() << "\n";
  return kExitOk;
}

int cmd_mincomplete(const Options& o, std::ostream& out) {
  const Rational eps = parse_rational(o.epsilon);
  const Graph g = read_graph_file(o.graph);
  const Lambda lam = parse_lambda(o.lambda, g.num_vertices());
  out << complete_set_json(g, minimal_complete_set(g, lam, eps)).dump() << "\n";
  return kExitOk;
}

int cmd_representatives(const Options& o, std::ostream& out) {
  const Rational eps = parse_rational(o.epsilon);
  const Rational delta = parse_rational(o.delta);
  const Graph g = read_graph_file(o.graph);
  const Lambda lam = parse_lambda(o.lambda, g.num_vertices());
  out << representatives_json(g, representatives(g, lam, eps, delta)).dump() << "\n";
  return kExitOk;
}

int cmd_next_usp(const Options& o, std::ostream& out) {
  const Graph g = read_graph_file(o.graph);
  const Lambda lam = parse_lambda(o.lambda, g.num_vertices());
  std::optional<EmittedPath> found;
  if (o.method == "subsets") {
    if (lam.family() != Lambda::Family::KSum) {
      throw ValidationError("--method subsets needs --lambda ksum:<k>");
    }
    Value psi = 0;
    if (o.psi) {
      psi = *o.psi;
    } else {
      for (const Arc& a : g.arcs()) psi = checked_add(psi, a.cost);
    }
    found = next_usp_theorem5(g, lam.k(), checked_add(o.xi, -1), psi).witness;
  } else {
    found = next_usp(g, NextUspQuery{lam, o.xi, o.psi});
  }
  out << (found ? valued_path_json(g, *found) : json(nullptr)).dump() << "\n";
  return kExitOk;
}

int cmd_emit_lp(const Options& o, std::ostream& out) {
  const Graph g = read_graph_file(o.graph);
  if (o.model == "nspip") {
    out << emit_nspip(g, o.xi);
  } else {
    out << emit_unspip(g, parse_lambda(o.lambda, g.num_vertices()), o.xi);
  }
  return kExitOk;
}

int cmd_gen(const Options& o, std::ostream& out) {
  Graph g = [&] {
    if (o.family == "triplet") return gen_triplet_chain(o.blocks);
    if (o.family == "doubling") return gen_binary_doubling(o.n);
    return gen_random(RandomSpec{o.n, o.m, o.cost_max, o.seed});
  }();
  out << serialize_graph(g);
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Universal near-shortest simple path tools"};
  app.name("unssp");
  app.require_subcommand(1);
  Options o;

  auto add_output = [&](CLI::App* sub) {
    sub->add_option("-o,--output", o.output, "Write results to this file instead of stdout");
  };
  auto add_graph = [&](CLI::App* sub) {
    sub->add_option("-g,--graph", o.graph, "Graph file")->required();
  };
  const std::string lambda_help = "Objective: sum | bottleneck | ksum:<k> | kmax:<k> | vec:<w1,...>";

  auto* solve = app.add_subcommand("solve", "Universal shortest path");
  add_graph(solve);
  solve->add_option("-l,--lambda", o.lambda, lambda_help);
  add_output(solve);

  auto* en = app.add_subcommand("enumerate", "All simple s-t paths within (1+eps) f*");
  add_graph(en);
  en->add_option("-l,--lambda", o.lambda, lambda_help);
  en->add_option("-e,--epsilon", o.epsilon, "Tolerance, integer or num/den");
  en->add_option("-a,--algorithm", o.algorithm, "alg1 | alg2 | brute")
      ->check(CLI::IsMember({"alg1", "alg2", "brute"}));
  en->add_option("--max-paths", o.max_paths, "Stop after this many paths");
  en->add_flag("--sum-fast-path", o.sum_fast_path,
               "alg1 with lambda=sum: distance-table extension test");
  add_output(en);

  auto* mc = app.add_subcommand("mincomplete", "One path per achievable value within the bound");
  add_graph(mc);
  mc->add_option("-l,--lambda", o.lambda, lambda_help);
  mc->add_option("-e,--epsilon", o.epsilon, "Tolerance, integer or num/den");
  add_output(mc);

  auto* rep = app.add_subcommand("representatives", "One path per interval of [f*, B]");
  add_graph(rep);
  rep->add_option("-l,--lambda", o.lambda, lambda_help);
  rep->add_option("-e,--epsilon", o.epsilon, "Tolerance, integer or num/den");
  rep->add_option("-d,--delta", o.delta, "Interval ratio minus one, num/den")->required();
  add_output(rep);

  auto* nu = app.add_subcommand("next-usp", "Cheapest path with value >= xi");
  add_graph(nu);
  nu->add_option("-l,--lambda", o.lambda, lambda_help);
  nu->add_option("--xi", o.xi, "Lower target")->required();
  nu->add_option("--psi", o.psi, "Upper cap");
  nu->add_option("--method", o.method, "exhaustive | subsets (ksum only)")
      ->check(CLI::IsMember({"exhaustive", "subsets"}));
  add_output(nu);

  auto* lp = app.add_subcommand(
      "emit-lp", "Write an integer program in LP format (nspip: c.x >= xi; unspip: value <= f* + xi)");
  lp->add_option("model", o.model, "nspip | unspip")
      ->required()
      ->check(CLI::IsMember({"nspip", "unspip"}));
  add_graph(lp);
  lp->add_option("--xi", o.xi, "Lower bound (nspip) or slack over f* (unspip)")->required();
  lp->add_option("-l,--lambda", o.lambda, lambda_help);
  add_output(lp);

  auto* gen = app.add_subcommand("gen", "Generate a graph file");
  gen->add_option("family", o.family, "triplet | doubling | random")
      ->required()
      ->check(CLI::IsMember({"triplet", "doubling", "random"}));
  auto* opt_b = gen->add_option("--b", o.blocks, "triplet: number of blocks");
  auto* opt_n = gen->add_option("--n", o.n, "doubling, random: vertex count");
  auto* opt_m = gen->add_option("--m", o.m, "random: arc count");
  auto* opt_c = gen->add_option("--cost-max", o.cost_max, "random: largest cost");
  auto* opt_s = gen->add_option("--seed", o.seed, "random: seed");
  add_output(gen);

  try {
    app.parse(argc, argv);
    if (gen->parsed()) {
      const bool triplet = o.family == "triplet";
      const bool random = o.family == "random";
      if (triplet && (opt_n->count() || opt_m->count() || opt_c->count() || opt_s->count())) {
        throw CLI::ValidationError("gen triplet takes only --b");
      }
      if (!triplet && opt_b->count()) throw CLI::ValidationError("--b applies to gen triplet only");
      if (!triplet && !opt_n->count()) throw CLI::ValidationError("--n is required");
      if (!random && (opt_m->count() || opt_c->count() || opt_s->count())) {
        throw CLI::ValidationError("--m, --cost-max and --seed apply to gen random only");
      }
      if (random && !opt_m->count()) throw CLI::ValidationError("--m is required");
    }
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kExitOk;
    }
    error_line(err, "usage", e.what());
    return kExitUsage;
  }

  try {
    Sink sink(o.output, out);
    std::ostream& dest = sink.get();
    if (solve->parsed()) return cmd_solve(o, dest);
    if (en->parsed()) return cmd_enumerate(o, dest);
    if (mc->parsed()) return cmd_mincomplete(o, dest);
    if (rep->parsed()) return cmd_representatives(o, dest);
    if (nu->parsed()) return cmd_next_usp(o, dest);
    if (lp->parsed()) return cmd_emit_lp(o, dest);
    return cmd_gen(o, dest);
  } catch (const SizeGateError& e) {
    error_line(err, "size_gate", e.what());
    return kExitSizeGate;
  } catch (const ParseError& e) {
    error_line(err, "input", e.what());
    return kExitInput;
  } catch (const Error& e) {
    error_line(err, "input", e.what());
    return kExitInput;
  }
}

}  // namespace unssp
