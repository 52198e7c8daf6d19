#pragma once

#include "ccvd/graph.hpp"
#include "ccvd/types.hpp"

namespace ccvd {

/// Outcome of a decision/optimization run. When found, `solution` deletes to a
/// c-closed graph; `optimal` marks it as minimum-size. When no solution within
/// budget exists, `lower_bound` is budget+1 (the optimum is at least that).
struct SolveResult {
  bool found = false;
  bool optimal = false;
  VertexSet solution;
  int lower_bound = 0;
  Stats stats;
};

/// Enumerates deletion sets by increasing size (lexicographic within a size)
/// and returns the first one whose removal leaves a c-closed graph. Anchors
/// every other solver's tests. Refuses when the subset count exceeds
/// max_subsets.
SolveResult brute_force_min_deletion(const Graph& g, int c, int k_max,
                                     long long max_subsets = 100'000'000);

/// Convenience: exact optimum size via brute force with budget n.
int brute_force_optimum(const Graph& g, int c, long long max_subsets = 100'000'000);

}  // namespace ccvd
