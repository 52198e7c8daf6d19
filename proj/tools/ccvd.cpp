// Command-line front end: solve, kernelize, analyze, reduce, generate, and
// verify c-closed vertex deletion instances.
//
// Exit codes: 0 = yes / success, 1 = no, 2 = error.

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <optional>
#include <string>

#include "ccvd/applications.hpp"
#include "ccvd/closure.hpp"
#include "ccvd/generators.hpp"
#include "ccvd/graph.hpp"
#include "ccvd/ilp.hpp"
#include "ccvd/intervals.hpp"
#include "ccvd/io.hpp"
#include "ccvd/oracle.hpp"
#include "ccvd/reductions.hpp"
#include "ccvd/solvers.hpp"

using namespace ccvd;

namespace {

struct SolveOptions {
  std::string input;
  std::string intervals;
  int c = 2;
  int k = 0;
  std::string method = "auto";
  bool stats = false;
  bool json = false;
  int nd_threshold = 12;
  long long brute_guard = 100'000'000;
};

void print_stats(const Stats& stats) {
  for (const auto& [key, value] : stats)
    std::cout << "stat." << key << ": " << value << "\n";
}

std::string pick_method(const SolveOptions& opt, const Graph& g,
                        const std::optional<IntervalRepresentation>& rep) {
  if (rep && rep->depth() <= opt.c + 1) return "interval";
  const int delta = g.max_degree();
  if ((opt.c == 2 && delta <= 2) || (opt.c == 3 && delta <= 3)) return "degree";
  if (opt.c >= 2 && neighborhood_partition(g).size() <= opt.nd_threshold) return "nd";
  return "branch";
}

int run_solve(const SolveOptions& opt) {
  Graph g = parse_graph(read_file(opt.input));
  std::optional<IntervalRepresentation> rep;
  if (!opt.intervals.empty()) {
    rep = parse_intervals(read_file(opt.intervals));
    if (!(rep->induced_graph() == g))
      throw InputError("interval representation does not induce the input graph");
  }

  std::string method = opt.method;
  if (method == "auto") method = pick_method(opt, g, rep);

  SolveResult result;
  if (method == "brute") {
    result = brute_force_min_deletion(g, opt.c, opt.k, opt.brute_guard);
  } else if (method == "branch") {
    result = solve_branching(g, opt.c, opt.k);
  } else if (method == "nd") {
    result = solve_nd_branching(g, opt.c, opt.k);
  } else if (method == "degree") {
    result = solve_degree_bounded(g, opt.c);
  } else if (method == "interval") {
    if (!rep) throw InputError("method 'interval' needs --intervals");
    result = solve_unit_interval(*rep, opt.c);
  } else {
    throw InputError("unknown method: " + opt.method);
  }

  // optimizing methods return a minimum solution; decide against the budget
  bool yes = result.found && result.solution.size() <= opt.k;
  int optimum = result.found ? result.solution.size() : -1;

  if (opt.json) {
    nlohmann::json out;
    out["answer"] = yes ? "yes" : "no";
    out["method"] = method;
    out["c"] = opt.c;
    out["k"] = opt.k;
    if (result.found) {
      out["size"] = result.solution.size();
      out["solution"] = result.solution.members();
    }
    if (!yes) out["lower_bound"] = result.found ? optimum : result.lower_bound;
    out["stats"] = result.stats;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << (yes ? "yes" : "no") << "\n";
    std::cout << "method: " << method << "\n";
    if (yes) {
      std::cout << "size: " << result.solution.size() << "\n";
      std::cout << "solution:";
      for (Vertex v : result.solution) std::cout << " " << v;
      std::cout << "\n";
    } else if (result.found) {
      std::cout << "optimum: " << optimum << "\n";
    } else {
      std::cout << "lower_bound: " << result.lower_bound << "\n";
    }
    if (opt.stats) print_stats(result.stats);
  }
  return yes ? 0 : 1;
}

VertexSet modulator_for(const Graph& g, int c, const std::string& path) {
  if (!path.empty()) return parse_vertex_set(read_file(path));
  for (int k = 0; k <= g.vertex_count(); ++k) {
    SolveResult r = solve_branching(g, c, k);
    if (r.found) return r.solution;
  }
  return {};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact solver toolkit for c-closed vertex deletion"};
  app.require_subcommand(1);

  SolveOptions solve_opt;
  auto* solve = app.add_subcommand("solve", "decide (G,k) and print a minimum solution");
  solve->add_option("--input", solve_opt.input, "graph file")->required();
  solve->add_option("--intervals", solve_opt.intervals, "unit interval file");
  solve->add_option("--c", solve_opt.c, "closure parameter")->required();
  solve->add_option("--k", solve_opt.k, "deletion budget")->required();
  solve->add_option("--method", solve_opt.method,
                    "auto|brute|branch|nd|interval|degree");
  solve->add_flag("--stats", solve_opt.stats, "print solver counters");
  solve->add_flag("--json", solve_opt.json, "machine-readable output");
  solve->add_option("--nd-threshold", solve_opt.nd_threshold,
                    "auto: largest neighborhood diversity routed to nd");
  solve->add_option("--brute-guard", solve_opt.brute_guard,
                    "subset guard for the brute-force method");

  std::string input, output, map_file, solution_file, direction, param,
      vc_input, hs_input, family;
  int c = 2, k = 0, target = 1, s = 1, n = 0;
  double p = 0.5;
  std::uint64_t seed = 1, mask = 0;
  bool weak = false, fsgs = false, do_solve = false;
  long long cap = 100, guard = 20'000'000;

  auto* closure = app.add_subcommand("closure", "print the closure number");
  closure->add_option("--input", input, "graph file")->required();
  closure->add_flag("--weak", weak, "print the weak closure number instead");

  auto* badpairs = app.add_subcommand("badpairs", "list bad pairs and connectors");
  badpairs->add_option("--input", input, "graph file")->required();
  badpairs->add_option("--c", c, "closure parameter")->required();
  badpairs->add_flag("--fsgs", fsgs, "also list forbidden subgraph witnesses");
  badpairs->add_option("--cap", cap, "witness cap per bad pair");

  auto* kernel = app.add_subcommand("kernel", "kernelize an instance");
  kernel->add_option("--input", input, "graph file")->required();
  kernel->add_option("--c", c, "closure parameter")->required();
  kernel->add_option("--k", k, "deletion budget")->required();
  kernel->add_option("--param", param, "k (hitting-set kernel) or x (bad-pair kernel)")
      ->required();
  kernel->add_option("--out", output, "kernel graph file")->required();
  kernel->add_option("--map", map_file, "write 'kernel_id original_id' lines");

  auto* reduce = app.add_subcommand("reduce", "translate to or from hitting set");
  reduce->add_option("--direction", direction, "to-hs | from-hs")->required();
  reduce->add_option("--input", input, "input file")->required();
  reduce->add_option("--out", output, "output file")->required();
  reduce->add_option("--c", c, "closure parameter (to-hs)");
  reduce->add_option("--k", k, "budget (to-hs)");

  auto* generate_cmd = app.add_subcommand("generate", "emit instance families");
  generate_cmd->add_option("--family", family,
                           "fsg|clique-pendants|indep-components|random|"
                           "random-interval|vc-maxdeg6|vc-maxdeg45|hs-split")
      ->required();
  generate_cmd->add_option("--out", output, "output file")->required();
  generate_cmd->add_option("--c", c, "closure parameter");
  generate_cmd->add_option("--k", k, "budget recorded in the header");
  generate_cmd->add_option("--s", s, "family size parameter");
  generate_cmd->add_option("--n", n, "vertex count");
  generate_cmd->add_option("--p", p, "edge probability");
  generate_cmd->add_option("--seed", seed, "random seed");
  generate_cmd->add_option("--mask", mask, "optional connector edge mask (fsg)");
  generate_cmd->add_option("--vc-input", vc_input, "vertex cover graph file");
  generate_cmd->add_option("--hs-input", hs_input, "hitting set file");

  auto* cliques = app.add_subcommand("cliques", "enumerate maximal cliques");
  cliques->add_option("--input", input, "graph file")->required();
  cliques->add_option("--c", c, "closure parameter")->required();
  cliques->add_option("--modulator", solution_file, "modulator vertex set file");

  auto* indepset = app.add_subcommand("indepset", "find an independent set");
  indepset->add_option("--input", input, "graph file")->required();
  indepset->add_option("--c", c, "closure parameter")->required();
  indepset->add_option("--l", target, "target size")->required();
  indepset->add_option("--modulator", solution_file, "modulator vertex set file");

  auto* ilp = app.add_subcommand("ilp", "emit the neighborhood-diversity ILP");
  ilp->add_option("--input", input, "graph file")->required();
  ilp->add_option("--c", c, "closure parameter")->required();
  ilp->add_option("--out", output, "LP file")->required();
  ilp->add_flag("--solve", do_solve, "also solve by bounded enumeration");
  ilp->add_option("--k", k, "optional budget to decide against");
  ilp->add_option("--guard", guard, "enumeration guard");

  auto* verify = app.add_subcommand("verify", "check a claimed solution");
  verify->add_option("--input", input, "graph file")->required();
  verify->add_option("--c", c, "closure parameter")->required();
  verify->add_option("--k", k, "deletion budget")->required();
  verify->add_option("--solution", solution_file, "vertex set file")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (solve->parsed()) return run_solve(solve_opt);

    if (closure->parsed()) {
      Graph g = parse_graph(read_file(input));
      std::cout << (weak ? weak_closure_number(g) : closure_number(g)) << "\n";
      return 0;
    }

    if (badpairs->parsed()) {
      Graph g = parse_graph(read_file(input));
      auto pairs = enumerate_bad_pairs(g, c);
      std::cout << "bad_pairs: " << pairs.size() << "\n";
      for (const auto& pair : pairs) {
        std::cout << pair.u << " " << pair.v << " :";
        for (Vertex w : pair.connectors) std::cout << " " << w;
        std::cout << "\n";
      }
      if (fsgs) {
        FsgEnumeration enumeration = enumerate_fsgs(g, c, cap);
        std::cout << "fsgs: " << enumeration.fsgs.size()
                  << (enumeration.truncated ? " (truncated)" : "") << "\n";
        for (const auto& fsg : enumeration.fsgs) {
          std::cout << fsg.u << " " << fsg.v << " :";
          for (Vertex w : fsg.connectors) std::cout << " " << w;
          std::cout << "\n";
        }
      }
      return 0;
    }

    if (kernel->parsed()) {
      Graph g = parse_graph(read_file(input));
      KernelOutput out;
      if (param == "k") out = kernelize_parameter_k(g, c, k);
      else if (param == "x") out = rule2_x_kernel(g, c, k);
      else throw InputError("--param must be k or x");
      write_file(output, serialize_graph(out.graph));
      if (!map_file.empty()) {
        std::string text;
        for (Vertex v = 0; v < out.graph.vertex_count(); ++v)
          text += std::to_string(v) + " " + std::to_string(out.old_ids[v]) + "\n";
        write_file(map_file, text);
      }
      std::cout << "n: " << out.graph.vertex_count() << "\n"
                << "m: " << out.graph.edge_count() << "\n"
                << "k: " << out.k << "\n"
                << "forced_pairs: " << out.forced_pairs.size() << "\n";
      return 0;
    }

    if (reduce->parsed()) {
      if (direction == "to-hs") {
        Graph g = parse_graph(read_file(input));
        HittingSetInstance hs = reduce_ccvd_to_hittingset(g, c, k);
        write_file(output, serialize_hitting_set(hs));
        std::cout << "universe: " << hs.universe_size << "\n"
                  << "sets: " << hs.sets.size() << "\n"
                  << "d: " << hs.d << "\n";
      } else if (direction == "from-hs") {
        HittingSetInstance hs = parse_hitting_set(read_file(input));
        CcvdInstance instance = reduce_hittingset_to_ccvd(hs);
        std::string text = "# hs-split instance, c=" + std::to_string(instance.c) +
                           " k=" + std::to_string(instance.k) +
                           " clique_size=" + std::to_string(instance.clique_size) +
                           "\n" + serialize_graph(instance.graph);
        write_file(output, text);
        std::cout << "c: " << instance.c << "\n"
                  << "k: " << instance.k << "\n"
                  << "n: " << instance.graph.vertex_count() << "\n";
      } else {
        throw InputError("--direction must be to-hs or from-hs");
      }
      return 0;
    }

    if (generate_cmd->parsed()) {
      GeneratorSpec spec;
      spec.family = family;
      spec.c = c;
      spec.k = k;
      spec.s = s;
      spec.n = n;
      spec.p = p;
      spec.seed = seed;
      spec.mask = mask;
      if (!vc_input.empty()) spec.input_graph = parse_graph(read_file(vc_input));
      if (!hs_input.empty()) spec.input_hs = parse_hitting_set(read_file(hs_input));
      GeneratedInstance instance = generate(spec);
      std::string text = "# " + instance.comment + "\n";
      text += instance.kind == "interval" ? serialize_intervals(instance.intervals)
                                          : serialize_graph(instance.graph);
      write_file(output, text);
      std::cout << "kind: " << instance.kind << "\n";
      return 0;
    }

    if (cliques->parsed()) {
      Graph g = parse_graph(read_file(input));
      VertexSet mod = modulator_for(g, c, solution_file);
      AlmostClosedDecomposition dec{g, mod, c};
      Stats stats;
      auto result = enumerate_maximal_cliques(dec, &stats);
      std::cout << "modulator_size: " << mod.size() << "\n"
                << "cliques: " << result.size() << "\n";
      for (const auto& clique : result) {
        bool first = true;
        for (Vertex v : clique) {
          std::cout << (first ? "" : " ") << v;
          first = false;
        }
        std::cout << "\n";
      }
      return 0;
    }

    if (indepset->parsed()) {
      Graph g = parse_graph(read_file(input));
      VertexSet mod = modulator_for(g, c, solution_file);
      AlmostClosedDecomposition dec{g, mod, c};
      auto found = max_independent_set(dec, target);
      if (!found) {
        std::cout << "no\n";
        return 1;
      }
      std::cout << "yes\nsize: " << found->size() << "\nsolution:";
      for (Vertex v : *found) std::cout << " " << v;
      std::cout << "\n";
      return 0;
    }

    if (ilp->parsed()) {
      Graph g = parse_graph(read_file(input));
      IlpModel model = build_ilp(g, c);
      write_file(output, model.to_lp_format());
      std::cout << "variables: " << model.variable_names.size() << "\n"
                << "rows: " << model.rows.size() << "\n";
      if (do_solve) {
        SolveResult r = solve_ilp_tiny(model, g, c, guard);
        std::cout << "objective: " << r.stats.at("objective") << "\n"
                  << "size: " << r.solution.size() << "\nsolution:";
        for (Vertex v : r.solution) std::cout << " " << v;
        std::cout << "\n";
        if (ilp->count("--k") > 0) return r.solution.size() <= k ? 0 : 1;
      }
      return 0;
    }

    if (verify->parsed()) {
      Graph g = parse_graph(read_file(input));
      VertexSet claimed = parse_vertex_set(read_file(solution_file));
      for (Vertex v : claimed) g.check_vertex(v);
      bool ok = claimed.size() <= k &&
                is_c_closed(delete_vertices(g, claimed).graph, c);
      std::cout << (ok ? "yes" : "no") << "\n";
      return ok ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
