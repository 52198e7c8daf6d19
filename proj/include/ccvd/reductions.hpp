#pragma once

#include <vector>

#include "ccvd/graph.hpp"
#include "ccvd/hitting_set.hpp"
#include "ccvd/types.hpp"

namespace ccvd {

/// Kernelization output: a shrunken answer-equivalent instance together with
/// the mapping back to the input graph and the heavy-pair decisions recorded
/// along the way.
struct KernelOutput {
  Graph graph;
  int k = 0;
  std::vector<Vertex> old_ids;     // kernel vertex -> original vertex
  std::vector<Edge> forced_pairs;  // heavy bad pairs (original ids)
  Stats stats;
};

struct CcvdInstance {
  Graph graph;
  int c = 0;
  int k = 0;
  int clique_size = 0;  // for split constructions: vertices 0..clique_size-1
};

/// Removes, until fixpoint, every edge that is not critical and whose
/// endpoints have fewer than c common neighbors. Answer-preserving for every
/// budget.
Graph rule1_noncritical_edge(const Graph& g, int c, Stats* stats = nullptr);

/// Marks X and the connectors of weak bad pairs, deletes unmarked vertices
/// (keeping every bad pair through a deleted vertex at k+c connectors or
/// more), re-marks, and repeats until everything is marked.
KernelOutput rule2_x_kernel(const Graph& g, int c, int k);

/// d-Hitting Set -> c-CVD with c = d: pad each set to exactly d fresh
/// elements, make the padded universe a clique, and attach a nonadjacent
/// vertex pair per set adjacent to exactly that set. Output is a split graph.
CcvdInstance reduce_hittingset_to_ccvd(const HittingSetInstance& hs);

/// c-CVD -> (c+2)-Hitting Set over universe V(G): one set per FSG, where bad
/// pairs with >= k+c connectors are restricted to their lexicographically
/// smallest k+c connectors.
HittingSetInstance reduce_ccvd_to_hittingset(const Graph& g, int c, int k,
                                             long long max_sets = 5'000'000);

/// Keeps a subfamily with at most (k+1)^d sets preserving all hitting sets of
/// size <= k in both directions: a set is kept iff every subset T of it is
/// contained in fewer than (k+1)^(d-|T|) already-kept sets (canonical order).
HittingSetInstance expressive_hittingset_kernel(const HittingSetInstance& hs);

/// The O(k^(c+2))-vertex kernel: reduce to hitting set, kernelize that, and
/// induce the graph on the surviving universe. Returns the input unchanged
/// when n <= k^(c+2).
KernelOutput kernelize_parameter_k(const Graph& g, int c, int k,
                                   long long max_sets = 5'000'000);

/// Bad pairs with at least k+c connecting vertices; any size-<=k solution
/// must contain one endpoint of each.
std::vector<Edge> forced_pair_rule(const Graph& g, int c, int k);

}  // namespace ccvd
