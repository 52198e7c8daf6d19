#pragma once

#include <span>
#include <vector>

#include "ccvd/types.hpp"

namespace ccvd {

/// Undirected simple graph over dense vertex ids 0..n-1. Immutable after
/// construction: adjacency is kept as sorted neighbor lists (source of truth)
/// plus per-vertex bitset rows when n <= 4096 for fast intersections.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n) : Graph(n, {}) {}
  Graph(int n, const std::vector<Edge>& edges);

  int vertex_count() const { return n_; }
  long long edge_count() const { return m_; }

  const std::vector<Vertex>& neighbors(Vertex v) const;
  int degree(Vertex v) const;
  int max_degree() const;
  bool adjacent(Vertex u, Vertex v) const;

  std::vector<Edge> edges() const;  // normalized, sorted

  bool has_bitsets() const { return !bits_.empty(); }
  int row_words() const { return row_words_; }
  std::span<const std::uint64_t> row(Vertex v) const;

  int common_neighbor_count(Vertex u, Vertex v) const;

  void check_vertex(Vertex v) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.adj_ == b.adj_;
  }

 private:
  int n_ = 0;
  long long m_ = 0;
  std::vector<std::vector<Vertex>> adj_;
  int row_words_ = 0;
  std::vector<std::uint64_t> bits_;
};

/// N(u) int N(v), sorted. u and v must be distinct, in-range vertices.
VertexSet common_neighbors(const Graph& g, Vertex u, Vertex v);

/// True iff no nonadjacent pair has >= c common neighbors. The empty graph is
/// c-closed for every c.
bool is_c_closed(const Graph& g, int c);

/// Smallest c such that the graph is c-closed: 1 + the largest common
/// neighborhood over nonadjacent pairs (0 when there is no such pair).
int closure_number(const Graph& g);

/// Elimination value: repeatedly remove a vertex minimizing the maximum
/// common neighborhood with its nonneighbors (ties to the smallest id); the
/// result is the maximum of these minima over all rounds.
int weak_closure_number(const Graph& g);

/// Result of deleting a vertex set: the induced subgraph re-indexed to dense
/// ids plus the mapping in both directions.
struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> old_ids;  // new id -> old id
  std::vector<int> new_ids;     // old id -> new id, -1 for deleted vertices
};

InducedSubgraph delete_vertices(const Graph& g, const VertexSet& s);

}  // namespace ccvd
