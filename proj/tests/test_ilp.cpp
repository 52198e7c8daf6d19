#include <doctest.h>

#include "ccvd/generators.hpp"
#include "ccvd/ilp.hpp"
#include "ccvd/oracle.hpp"
#include "ccvd/rng.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace ccvd;
using namespace ccvd::testing;

TEST_CASE("ilp model shape") {
  Graph g = complete_bipartite(2, 3);
  IlpModel model = build_ilp(g, 2);
  CHECK(model.class_count == 2);
  CHECK(model.variable_names.size() == 6);  // 3 * nd
  CHECK(model.big_m == 26);                 // n^2 + 1
  CHECK(model.upper_bounds == std::vector<long long>{2, 3});
}

TEST_CASE("ilp optimum examples") {
  // c-closed graph: keep everything
  Graph c5 = cycle(5);
  SolveResult closed = solve_ilp_tiny(build_ilp(c5, 2), c5, 2);
  CHECK(closed.solution.empty());
  CHECK(closed.stats.at("objective") == 5);

  Graph c4 = cycle(4);
  SolveResult r = solve_ilp_tiny(build_ilp(c4, 2), c4, 2);
  CHECK(r.stats.at("objective") == 3);
  CHECK(r.solution.size() == 1);

  for (int c = 2; c <= 3; ++c) {
    Graph g = complete_bipartite(2, c + 1);
    SolveResult s = solve_ilp_tiny(build_ilp(g, c), g, c);
    CHECK(s.stats.at("objective") == g.vertex_count() - brute_force_optimum(g, c));
  }
}

TEST_CASE("ilp objective equals n minus the optimum") {
  Rng rng(113);
  for (int trial = 0; trial < 80; ++trial) {
    Graph g = random_graph(rng, rng.next_int(1, 9), rng.next_double());
    int c = rng.next_int(1, 3);
    IlpModel model = build_ilp(g, c);
    SolveResult r = solve_ilp_tiny(model, g, c);
    CHECK(r.stats.at("objective") == g.vertex_count() - brute_force_optimum(g, c));
    CHECK(is_c_closed(delete_vertices(g, r.solution).graph, c));
    CHECK(static_cast<long long>(g.vertex_count() - r.solution.size()) ==
          r.stats.at("objective"));
  }
}

TEST_CASE("ilp enumeration guard") {
  Graph g = clique(40);
  IlpModel model = build_ilp(g, 2);
  CHECK_THROWS_AS(solve_ilp_tiny(model, g, 2, 10), ResourceError);
}

TEST_CASE("lp format output") {
  Graph g = complete_bipartite(2, 3);
  std::string lp = build_ilp(g, 2).to_lp_format();
  CHECK(lp.find("Maximize") != std::string::npos);
  CHECK(lp.find("Subject To") != std::string::npos);
  CHECK(lp.find("Bounds") != std::string::npos);
  CHECK(lp.find("General") != std::string::npos);
  CHECK(lp.find("Binary") != std::string::npos);
  CHECK(lp.find("End") != std::string::npos);
  CHECK(lp.find("x0 + x1") != std::string::npos);
  CHECK(lp.find(" < ") == std::string::npos);  // no strict inequalities anywhere
  // both classes are independent sets: one same-class row each; the classes
  // are mutually adjacent, so there is no pair row
  CHECK(lp.find("ind0:") != std::string::npos);
  CHECK(lp.find("ind1:") != std::string::npos);
  CHECK(lp.find("pair0_1:") == std::string::npos);

  // two disjoint edges: two clique classes, nonadjacent, one pair row, no
  // same-class rows
  Graph two_edges(4, {{0, 1}, {2, 3}});
  std::string lp2 = build_ilp(two_edges, 2).to_lp_format();
  CHECK(lp2.find("pair0_1:") != std::string::npos);
  CHECK(lp2.find("ind0:") == std::string::npos);
}
