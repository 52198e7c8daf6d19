#pragma once

#include <vector>

#include "ccvd/graph.hpp"
#include "ccvd/oracle.hpp"
#include "ccvd/types.hpp"

namespace ccvd {

/// Unit-length closed intervals [start, start+1], one per vertex id. Two
/// vertices are adjacent iff their intervals intersect (touching counts).
class IntervalRepresentation {
 public:
  IntervalRepresentation() = default;
  explicit IntervalRepresentation(std::vector<double> starts);

  int size() const { return static_cast<int>(starts_.size()); }
  double start(Vertex v) const { return starts_[v]; }
  double end(Vertex v) const { return starts_[v] + 1.0; }
  const std::vector<double>& starts() const { return starts_; }

  /// Vertex ids ordered by nondecreasing start (ties by id).
  const std::vector<Vertex>& order() const { return order_; }

  /// Largest number of intervals covering one point (= max clique size).
  int depth() const;

  Graph induced_graph() const;

 private:
  std::vector<double> starts_;
  std::vector<Vertex> order_;
};

/// Greedy left-to-right scan: whenever the next c+2 intervals form an FSG,
/// delete the last one and jump past the window. Optimal on unit interval
/// graphs with depth <= c+1 (verified, otherwise an input error).
SolveResult solve_unit_interval(const IntervalRepresentation& rep, int c);

/// Test harness: enumerates every FSG of the induced graph and checks it is a
/// consecutive window in start order with the window endpoints as the bad
/// pair.
bool verify_fsg_window_structure(const IntervalRepresentation& rep, int c);

}  // namespace ccvd
