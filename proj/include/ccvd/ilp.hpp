#pragma once

#include <string>
#include <vector>

#include "ccvd/graph.hpp"
#include "ccvd/oracle.hpp"
#include "ccvd/solvers.hpp"
#include "ccvd/types.hpp"

namespace ccvd {

/// Integer program over neighborhood classes: x_D = retained count per class,
/// with indicator variables y_D (x_D >= 1) and z_D (x_D >= 2). Objective:
/// maximize the total retained count. 3*nd variables.
struct IlpModel {
  struct Term {
    int variable;
    long long coefficient;
  };
  enum class Relation { LessEqual, GreaterEqual };
  struct Row {
    std::string name;
    std::vector<Term> terms;
    Relation relation;
    long long rhs;
  };

  int class_count = 0;
  long long big_m = 0;
  std::vector<std::string> variable_names;  // x.., then y.., then z..
  std::vector<long long> upper_bounds;      // per x variable: |D|
  std::vector<Row> rows;
  NeighborhoodPartition partition;

  int x_var(int d) const { return d; }
  int y_var(int d) const { return class_count + d; }
  int z_var(int d) const { return 2 * class_count + d; }

  /// CPLEX LP‑format text (objective, constraints, bounds, general/binary).
  std::string to_lp_format() const;
};

/// Builds the model with M = n^2 + 1; one row per unordered nonadjacent class
/// pair and one per independent class, plus the indicator rows. Strict
/// inequalities are written as <= with the right side lowered by one.
IlpModel build_ilp(const Graph& g, int c);

/// Exhaustive enumeration of the x_D assignments (guarded); indicators are
/// derived, constraints checked, and the best objective kept. The deletion
/// set removes the highest ids of each class.
SolveResult solve_ilp_tiny(const IlpModel& model, const Graph& g, int c,
                           long long guard = 20'000'000);

}  // namespace ccvd
