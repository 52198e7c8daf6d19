#pragma once

#include <vector>

#include "ccvd/graph.hpp"
#include "ccvd/types.hpp"

namespace ccvd {

/// A bad pair (u,v) with its full set of connecting vertices
/// (all common neighbors; at least c of them for the c in force).
struct BadPairWitness {
  Vertex u = 0;
  Vertex v = 0;
  VertexSet connectors;
};

/// A forbidden subgraph: the designated bad pair plus exactly c of its
/// connecting vertices, c+2 vertices in total.
struct FsgWitness {
  Vertex u = 0;
  Vertex v = 0;
  VertexSet connectors;
};

struct FsgEnumeration {
  std::vector<FsgWitness> fsgs;
  bool truncated = false;  // some pair hit cap_per_pair
};

/// Edges lying between a bad pair vertex and one of its connecting vertices.
struct CriticalEdgeSet {
  std::vector<Edge> edges;  // normalized, sorted
  bool contains(Vertex u, Vertex v) const;
};

/// All nonadjacent pairs with at least c common neighbors, sorted by (u,v),
/// each with its full connector set.
std::vector<BadPairWitness> enumerate_bad_pairs(const Graph& g, int c);

/// X: the union of {u,v} over all bad pairs.
VertexSet bad_pair_vertices(const Graph& g, int c);

/// For each bad pair, its size-c connector subsets in lexicographic order,
/// truncated to cap_per_pair per pair.
FsgEnumeration enumerate_fsgs(const Graph& g, int c, long long cap_per_pair);

/// {u,w} is critical iff some bad pair (u,v) has w among its connectors.
CriticalEdgeSet critical_edges(const Graph& g, int c);

}  // namespace ccvd
