#include <doctest.h>

#include "ccvd/generators.hpp"
#include "ccvd/graph.hpp"
#include "ccvd/oracle.hpp"
#include "ccvd/rng.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace ccvd;
using namespace ccvd::testing;

TEST_CASE("graph construction validates") {
  CHECK_THROWS_AS(Graph(2, {{0, 2}}), InputError);
  CHECK_THROWS_AS(Graph(2, {{1, 1}}), InputError);
  CHECK_THROWS_AS(Graph(2, {{0, 1}, {1, 0}}), InputError);
  Graph g(3, {{0, 1}, {2, 1}});
  CHECK(g.edge_count() == 2);
  CHECK(g.adjacent(1, 2));
  CHECK(!g.adjacent(0, 2));
  CHECK(g.max_degree() == 2);
  CHECK(g.neighbors(1) == std::vector<Vertex>{0, 2});
}

TEST_CASE("common neighbors") {
  Graph c4 = cycle(4);
  CHECK(common_neighbors(c4, 0, 2) == VertexSet{1, 3});
  Graph k4 = clique(4);
  CHECK(common_neighbors(k4, 0, 1) == VertexSet{2, 3});
  // c=3 forbidden subgraph: the bad pair sees exactly its three connectors
  Graph fsg3 = generate_fsg(3, 0);
  CHECK(common_neighbors(fsg3, 0, 1) == VertexSet{2, 3, 4});
  CHECK_THROWS_AS(common_neighbors(c4, 0, 7), InputError);
  CHECK_THROWS_AS(common_neighbors(c4, 2, 2), InputError);
}

TEST_CASE("c-closedness") {
  CHECK(!is_c_closed(path(3), 1));
  for (int c = 1; c <= 4; ++c) CHECK(is_c_closed(clique(5), c));
  Graph c4 = cycle(4);
  CHECK(!is_c_closed(c4, 2));
  CHECK(is_c_closed(c4, 3));
  CHECK(is_c_closed(Graph(0), 1));
  CHECK_THROWS_AS(is_c_closed(c4, 0), InputError);
}

TEST_CASE("closure number") {
  CHECK(closure_number(Graph(4)) == 1);
  CHECK(closure_number(Graph(0)) == 1);
  CHECK(closure_number(cycle(4)) == 3);
  for (int c = 2; c <= 5; ++c)
    CHECK(closure_number(complete_bipartite(2, c)) == c + 1);
}

TEST_CASE("closure number matches is_c_closed everywhere") {
  Rng rng(7);
  for (int trial = 0; trial < 80; ++trial) {
    Graph g = random_graph(rng, rng.next_int(0, 9), rng.next_double());
    int closure = closure_number(g);
    for (int c = 1; c <= closure + 2; ++c)
      CHECK(is_c_closed(g, c) == (closure <= c));
  }
}

TEST_CASE("c-closedness is hereditary") {
  Rng rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    Graph g = random_graph(rng, rng.next_int(1, 9), rng.next_double());
    int c = closure_number(g);
    std::vector<Vertex> sample;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
      if (rng.next_bool(0.4)) sample.push_back(v);
    CHECK(is_c_closed(delete_vertices(g, VertexSet(sample)).graph, c));
  }
}

TEST_CASE("weak closure") {
  CHECK(weak_closure_number(clique(6)) == 0);
  CHECK(weak_closure_number(cycle(4)) == 2);
  // clique on 2s vertices with two pendants each adjacent to one half
  Graph pendants = generate_clique_pendants(4);
  CHECK(weak_closure_number(pendants) == 4);
  CHECK(weak_closure_number(pendants) == brute_weak_closure(pendants));
}

TEST_CASE("weak closure equals the induced-subgraph definition") {
  Rng rng(13);
  for (int trial = 0; trial < 40; ++trial) {
    Graph g = random_graph(rng, rng.next_int(1, 8), rng.next_double());
    CHECK(weak_closure_number(g) == brute_weak_closure(g));
  }
}

TEST_CASE("weak closure bounds") {
  Rng rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    Graph g = random_graph(rng, rng.next_int(1, 9), rng.next_double());
    int gamma = weak_closure_number(g);
    CHECK(gamma <= degeneracy(g));
    CHECK(gamma <= closure_number(g));
  }
}

TEST_CASE("delete vertices") {
  InducedSubgraph k2 = delete_vertices(clique(3), VertexSet{1});
  CHECK(k2.graph.vertex_count() == 2);
  CHECK(k2.graph.edge_count() == 1);
  CHECK(k2.old_ids == std::vector<Vertex>{0, 2});
  CHECK(k2.new_ids == std::vector<int>{0, -1, 1});

  InducedSubgraph p4 = delete_vertices(cycle(5), VertexSet{4});
  CHECK(p4.graph == path(4));

  // dropping one connector of the c=3 FSG leaves a 3-closed graph
  InducedSubgraph rest = delete_vertices(generate_fsg(3, 0), VertexSet{2});
  CHECK(is_c_closed(rest.graph, 3));
}

TEST_CASE("brute force minimum deletion") {
  SUBCASE("single forbidden subgraphs need one deletion") {
    for (std::uint64_t mask : {0ull, 1ull}) {
      SolveResult r = brute_force_min_deletion(generate_fsg(2, mask), 2, 3);
      CHECK(r.found);
      CHECK(r.optimal);
      CHECK(r.solution.size() == 1);
    }
  }
  SUBCASE("c-closed graphs need nothing") {
    SolveResult r = brute_force_min_deletion(cycle(5), 2, 2);
    CHECK(r.found);
    CHECK(r.solution.empty());
  }
  SUBCASE("two disjoint FSGs need two deletions") {
    Graph two = disjoint_union(cycle(4), cycle(4));
    CHECK(brute_force_min_deletion(two, 2, 4).solution.size() == 2);
    SolveResult no = brute_force_min_deletion(two, 2, 1);
    CHECK(!no.found);
    CHECK(no.lower_bound == 2);
  }
  SUBCASE("solutions are verified minimal") {
    Rng rng(23);
    for (int trial = 0; trial < 40; ++trial) {
      Graph g = random_graph(rng, rng.next_int(1, 8), rng.next_double());
      int c = rng.next_int(1, 3);
      SolveResult r = brute_force_min_deletion(g, c, g.vertex_count());
      REQUIRE(r.found);
      CHECK(is_c_closed(delete_vertices(g, r.solution).graph, c));
      if (r.solution.size() > 0) {
        SolveResult smaller = brute_force_min_deletion(g, c, r.solution.size() - 1);
        CHECK(!smaller.found);
      }
    }
  }
  SUBCASE("guard rejects huge enumerations") {
    CHECK_THROWS_AS(brute_force_min_deletion(Graph(200), 2, 100, 1000), ResourceError);
  }
}
