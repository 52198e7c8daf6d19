#pragma once

#include <optional>
#include <string>

#include "ccvd/graph.hpp"
#include "ccvd/hitting_set.hpp"
#include "ccvd/intervals.hpp"
#include "ccvd/reductions.hpp"
#include "ccvd/types.hpp"

namespace ccvd {

/// One forbidden subgraph: bad pair 0,1; connectors 2..c+1; `optional_edges`
/// selects connector-connector edges, bit i for the i-th pair in
/// lexicographic order.
Graph generate_fsg(int c, std::uint64_t optional_edges);

/// Clique on 2s vertices, plus vertex 2s adjacent to the first s clique
/// vertices and vertex 2s+1 adjacent to the other s.
Graph generate_clique_pendants(int s);

/// s disjoint copies of K_{2,c}: an independent set of size c plus two
/// nonadjacent vertices adjacent to all of it. (c+1)-closed; deleting one
/// vertex per copy makes it c-closed.
Graph generate_indep_components(int s, int c);

Graph generate_random_graph(int n, double p, std::uint64_t seed);

/// Random unit-interval instance with depth at most c+1 (enforced by
/// construction; gaps stay strictly away from length 1).
IntervalRepresentation generate_random_intervals(int n, int c, std::uint64_t seed);

/// Vertex Cover with max degree 3 -> c-CVD with max degree max(c, 6):
/// replaces every edge by an FSG gadget (two bad-pair vertices adjacent to
/// the endpoints and to c-2 fresh connecting vertices). Bipartite; preserves
/// the budget.
Graph generate_vc_maxdeg6(const Graph& vc_instance, int c);

/// Vertex Cover with max degree 3, degree-3 vertices pairwise at distance
/// >= 3 -> c-CVD with max degree 4 (c=2) or 5 (c=3). Edges at a degree-3
/// vertex share its private gadget (s_i path vertices plus x hub vertices).
Graph generate_vc_maxdeg45(const Graph& vc_instance, int c);

/// Split-graph instances; alias for the hitting set reduction.
CcvdInstance generate_hs_split(const HittingSetInstance& hs);

struct GeneratorSpec {
  std::string family;
  int c = 2;
  int k = -1;
  int s = 1;
  int n = 0;
  double p = 0.5;
  std::uint64_t seed = 1;
  std::uint64_t mask = 0;
  std::optional<Graph> input_graph;
  std::optional<HittingSetInstance> input_hs;
};

struct GeneratedInstance {
  std::string kind;  // "graph" or "interval"
  Graph graph;
  IntervalRepresentation intervals;
  int c = -1;  // set when the family fixes c
  int k = -1;  // set when the family fixes or preserves k
  std::string comment;
};

GeneratedInstance generate(const GeneratorSpec& spec);

}  // namespace ccvd
