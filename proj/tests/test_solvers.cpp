#include <doctest.h>

#include "ccvd/generators.hpp"
#include "ccvd/oracle.hpp"
#include "ccvd/reductions.hpp"
#include "ccvd/rng.hpp"
#include "ccvd/solvers.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace ccvd;
using namespace ccvd::testing;

TEST_CASE("branching solver examples") {
  SolveResult closed = solve_branching(cycle(5), 2, 0);
  CHECK(closed.found);
  CHECK(closed.solution.empty());

  SolveResult fsg = solve_branching(generate_fsg(3, 0), 3, 1);
  CHECK(fsg.found);
  CHECK(fsg.solution.size() == 1);

  SolveResult no = solve_branching(disjoint_union(cycle(4), cycle(4)), 2, 1);
  CHECK(!no.found);
  CHECK(no.lower_bound == 2);
}

TEST_CASE("branching solver matches brute force exhaustively at n=5") {
  // every labeled graph on five vertices
  for (std::uint32_t mask = 0; mask < (1u << 10); ++mask) {
    std::vector<Edge> edges;
    int bit = 0;
    for (Vertex u = 0; u < 5; ++u)
      for (Vertex v = u + 1; v < 5; ++v, ++bit)
        if (mask & (1u << bit)) edges.emplace_back(u, v);
    Graph g(5, edges);
    for (int c = 1; c <= 3; ++c) {
      int optimum = brute_force_optimum(g, c);
      for (int k = 0; k <= 3; ++k) {
        SolveResult r = solve_branching(g, c, k);
        CHECK(r.found == (optimum <= k));
        if (r.found) {
          CHECK(r.solution.size() == optimum);
          CHECK(is_c_closed(delete_vertices(g, r.solution).graph, c));
        }
      }
    }
  }
}

TEST_CASE("branching solver matches brute force on random graphs") {
  Rng rng(97);
  for (int trial = 0; trial < 60; ++trial) {
    Graph g = random_graph(rng, rng.next_int(1, 8), rng.next_double());
    int c = rng.next_int(1, 3);
    int k = rng.next_int(0, 3);
    SolveResult r = solve_branching(g, c, k);
    SolveResult oracle = brute_force_min_deletion(g, c, k);
    CHECK(r.found == oracle.found);
    if (r.found) CHECK(r.solution.size() == oracle.solution.size());
  }
}

TEST_CASE("neighborhood partition") {
  NeighborhoodPartition kn = neighborhood_partition(clique(5));
  CHECK(kn.size() == 1);
  CHECK(kn.is_clique[0]);

  NeighborhoodPartition k23 = neighborhood_partition(complete_bipartite(2, 3));
  REQUIRE(k23.size() == 2);
  CHECK(k23.classes[0] == VertexSet{0, 1});
  CHECK(k23.classes[1] == VertexSet{2, 3, 4});
  CHECK(!k23.is_clique[0]);
  CHECK(!k23.is_clique[1]);

  NeighborhoodPartition c5 = neighborhood_partition(cycle(5));
  CHECK(c5.size() == 5);
}

TEST_CASE("partition classes are twin classes") {
  Rng rng(101);
  for (int trial = 0; trial < 50; ++trial) {
    Graph g = random_graph(rng, rng.next_int(1, 9), rng.next_double());
    NeighborhoodPartition part = neighborhood_partition(g);
    for (Vertex u = 0; u < g.vertex_count(); ++u)
      for (Vertex v = u + 1; v < g.vertex_count(); ++v) {
        std::vector<Vertex> nu, nv;
        for (Vertex w : g.neighbors(u))
          if (w != v) nu.push_back(w);
        for (Vertex w : g.neighbors(v))
          if (w != u) nv.push_back(w);
        CHECK((part.class_of[u] == part.class_of[v]) == (nu == nv));
      }
    for (int d = 0; d < part.size(); ++d) {
      const auto& members = part.classes[d].members();
      for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = i + 1; j < members.size(); ++j)
          CHECK(g.adjacent(members[i], members[j]) == part.is_clique[d]);
    }
  }
}

TEST_CASE("nd solver examples") {
  SolveResult closed = solve_nd_branching(cycle(5), 2, 0);
  CHECK(closed.found);
  CHECK(closed.solution.empty());

  // clique with two pendant vertices: delete exactly the pendants
  Graph pendants = generate_clique_pendants(4);
  SolveResult r = solve_nd_branching(pendants, 2, 2);
  CHECK(r.found);
  CHECK(r.solution == VertexSet{8, 9});
  CHECK(is_c_closed(delete_vertices(pendants, r.solution).graph, 2));

  CHECK_THROWS_AS(solve_nd_branching(cycle(4), 1, 1), InputError);
}

TEST_CASE("nd solver matches brute force") {
  Rng rng(103);
  for (int trial = 0; trial < 80; ++trial) {
    Graph g = random_graph(rng, rng.next_int(1, 9), rng.next_double());
    int c = rng.next_int(2, 3);
    int optimum = brute_force_optimum(g, c);
    SolveResult r = solve_nd_branching(g, c, g.vertex_count());
    REQUIRE(r.found);
    CHECK(r.solution.size() == optimum);
    CHECK(is_c_closed(delete_vertices(g, r.solution).graph, c));

    long long bound = 1;
    NeighborhoodPartition part = neighborhood_partition(g);
    for (int i = 0; i < part.size(); ++i) bound *= c + 1;
    CHECK(r.stats.at("profiles_explored") <= bound);

    SolveResult tight = solve_nd_branching(g, c, optimum);
    CHECK(tight.found);
    if (optimum > 0) CHECK(!solve_nd_branching(g, c, optimum - 1).found);
  }
}

TEST_CASE("degree-bounded solver examples") {
  SolveResult c4 = solve_degree_bounded(cycle(4), 2);
  CHECK(c4.solution.size() == 1);

  // K_{3,3}: six vertices, all of degree three
  Graph k33 = complete_bipartite(3, 3);
  SolveResult r = solve_degree_bounded(k33, 3);
  CHECK(r.solution.size() == brute_force_optimum(k33, 3));

  SolveResult closed = solve_degree_bounded(cycle(5), 2);
  CHECK(closed.solution.empty());

  CHECK_THROWS_AS(solve_degree_bounded(clique(4), 2), InputError);
  CHECK_THROWS_AS(solve_degree_bounded(cycle(4), 4), InputError);
}

TEST_CASE("degree-bounded solver matches brute force") {
  Rng rng(107);
  for (int trial = 0; trial < 60; ++trial) {
    int c = rng.next_int(2, 3);
    int n = rng.next_int(1, 12);
    Graph g = random_graph_max_degree(rng, n, c, 3 * n);
    SolveResult r = solve_degree_bounded(g, c);
    CHECK(r.solution.size() == brute_force_optimum(g, c));
    CHECK(is_c_closed(delete_vertices(g, r.solution).graph, c));

    // the paper's component bound after rule 1
    Graph reduced = rule1_noncritical_edge(g, c);
    std::vector<int> comp(reduced.vertex_count(), -1);
    int comps = 0;
    for (Vertex s = 0; s < reduced.vertex_count(); ++s) {
      if (comp[s] != -1) continue;
      std::vector<Vertex> stack = {s};
      comp[s] = comps;
      int size = 0;
      while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        ++size;
        for (Vertex w : reduced.neighbors(v))
          if (comp[w] == -1) {
            comp[w] = comps;
            stack.push_back(w);
          }
      }
      CHECK(size <= 6);
      ++comps;
    }
  }
}

TEST_CASE("minimum solutions admit an nd class profile of equal size") {
  // the per-class keep-all-or-below-c structure never costs optimality
  Rng rng(109);
  for (int trial = 0; trial < 50; ++trial) {
    Graph g = random_graph(rng, rng.next_int(1, 7), rng.next_double());
    for (int c = 2; c <= 3; ++c) {
      SolveResult nd = solve_nd_branching(g, c, g.vertex_count());
      CHECK(nd.solution.size() == brute_force_optimum(g, c));
    }
  }
}
