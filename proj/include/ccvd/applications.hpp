#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "ccvd/graph.hpp"
#include "ccvd/types.hpp"

namespace ccvd {

/// A graph with a modulator S such that G - S is c-closed.
struct AlmostClosedDecomposition {
  Graph graph;
  VertexSet modulator;
  int c = 1;
};

/// Exact maximum-independent-set routine used on the c-closed remainder;
/// swap in a specialised solver if available.
using MaxIsSolver = std::function<VertexSet(const Graph&)>;

/// Whole-graph maximal clique enumeration, pivot Bron-Kerbosch. Output is
/// canonical: every clique sorted, cliques in lexicographic order.
std::vector<VertexSet> bron_kerbosch_maximal_cliques(const Graph& g);

/// Exact maximum independent set by branching; the default pluggable solver.
VertexSet max_independent_set_exact(const Graph& g);

/// All maximal cliques of G via the decomposition: for every clique subset S'
/// of the modulator, enumerate maximal cliques among the common neighbors in
/// G - S and keep S' + K' when maximal in G.
std::vector<VertexSet> enumerate_maximal_cliques(const AlmostClosedDecomposition& dec,
                                                 Stats* stats = nullptr);

/// An independent set of size >= target if one exists: branch over the
/// independent subsets S' of the modulator, strip N(S') from G - S, and solve
/// the c-closed remainder exactly.
std::optional<VertexSet> max_independent_set(const AlmostClosedDecomposition& dec,
                                             int target,
                                             const MaxIsSolver& solver = {},
                                             Stats* stats = nullptr);

}  // namespace ccvd
