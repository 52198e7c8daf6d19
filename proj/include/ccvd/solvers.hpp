#pragma once

#include <vector>

#include "ccvd/graph.hpp"
#include "ccvd/oracle.hpp"
#include "ccvd/types.hpp"

namespace ccvd {

/// Equivalence classes of u ~ v :<=> N(u)\{v} = N(v)\{u}. Classes of size >= 2
/// are internally complete (clique) or internally edgeless (independent);
/// singletons are labeled independent.
struct NeighborhoodPartition {
  std::vector<VertexSet> classes;  // ordered by smallest member
  std::vector<bool> is_clique;     // per class
  std::vector<int> class_of;       // vertex -> class index
  int size() const { return static_cast<int>(classes.size()); }
};

NeighborhoodPartition neighborhood_partition(const Graph& g);

/// Bounded search tree: Rule 1 once at the root, then branch 2-ways on bad
/// pairs with >= k'+c connectors (k' the remaining budget) and (c+2)-ways on
/// the FSG of a bad pair with the fewest connectors otherwise. Iterative
/// deepening makes the returned solution minimum-size.
SolveResult solve_branching(const Graph& g, int c, int k);

/// Per neighborhood class D, tries keeping |D| or any count below c; picks
/// the best feasible profile. Requires c >= 2.
SolveResult solve_nd_branching(const Graph& g, int c, int k);

/// O(n)-style solver for c = Delta in {2, 3}: Rule 1 shatters the graph into
/// constant-size components which are solved by brute force.
SolveResult solve_degree_bounded(const Graph& g, int c);

}  // namespace ccvd
