#include "ccvd/ilp.hpp"

#include <algorithm>
#include <sstream>

namespace ccvd {

std::string IlpModel::to_lp_format() const {
  std::ostringstream out;
  out << "Maximize\n obj:";
  if (class_count == 0) out << " 0 x_none";
  for (int d = 0; d < class_count; ++d)
    out << (d == 0 ? " " : " + ") << variable_names[x_var(d)];
  out << "\nSubject To\n";
  for (const auto& row : rows) {
    out << " " << row.name << ":";
    bool first = true;
    for (const auto& term : row.terms) {
      long long coef = term.coefficient;
      if (first) {
        out << " ";
        if (coef == -1) out << "- ";
        else if (coef != 1) out << coef << " ";
        first = false;
      } else {
        out << (coef < 0 ? " - " : " + ");
        long long mag = coef < 0 ? -coef : coef;
        if (mag != 1) out << mag << " ";
      }
      out << variable_names[term.variable];
    }
    out << (row.relation == Relation::LessEqual ? " <= " : " >= ") << row.rhs << "\n";
  }
  out << "Bounds\n";
  for (int d = 0; d < class_count; ++d)
    out << " 0 <= " << variable_names[x_var(d)] << " <= " << upper_bounds[d] << "\n";
  if (class_count == 0) out << " 0 <= x_none <= 0\n";
  out << "General\n";
  for (int d = 0; d < class_count; ++d) out << " " << variable_names[x_var(d)];
  out << "\nBinary\n";
  for (int d = 0; d < class_count; ++d) out << " " << variable_names[y_var(d)];
  for (int d = 0; d < class_count; ++d) out << " " << variable_names[z_var(d)];
  out << "\nEnd\n";
  return out.str();
}

IlpModel build_ilp(const Graph& g, int c) {
  if (c < 1) throw InputError("c must be at least 1");
  const long long n = g.vertex_count();
  IlpModel model;
  model.partition = neighborhood_partition(g);
  const int nd = model.partition.size();
  model.class_count = nd;
  model.big_m = n * n + 1;

  for (int d = 0; d < nd; ++d) model.variable_names.push_back("x" + std::to_string(d));
  for (int d = 0; d < nd; ++d) model.variable_names.push_back("y" + std::to_string(d));
  for (int d = 0; d < nd; ++d) model.variable_names.push_back("z" + std::to_string(d));
  for (int d = 0; d < nd; ++d)
    model.upper_bounds.push_back(model.partition.classes[d].size());

  const long long M = model.big_m;
  using Rel = IlpModel::Relation;
  for (int d = 0; d < nd; ++d) {
    // y_d = [x_d >= 1], z_d = [x_d >= 2]
    model.rows.push_back({"y_up" + std::to_string(d),
                          {{model.y_var(d), M}, {model.x_var(d), -1}},
                          Rel::GreaterEqual,
                          0});
    model.rows.push_back({"y_lo" + std::to_string(d),
                          {{model.y_var(d), 1}, {model.x_var(d), -1}},
                          Rel::LessEqual,
                          0});
    model.rows.push_back({"z_up" + std::to_string(d),
                          {{model.z_var(d), M}, {model.x_var(d), -1}},
                          Rel::GreaterEqual,
                          -1});
    model.rows.push_back({"z_lo" + std::to_string(d),
                          {{model.z_var(d), 2}, {model.x_var(d), -1}},
                          Rel::LessEqual,
                          0});
  }

  std::vector<std::vector<bool>> quotient(nd, std::vector<bool>(nd, false));
  for (int a = 0; a < nd; ++a) {
    quotient[a][a] = model.partition.is_clique[a];
    for (int b = a + 1; b < nd; ++b) {
      bool adj = g.adjacent(model.partition.classes[a].members()[0],
                            model.partition.classes[b].members()[0]);
      quotient[a][b] = quotient[b][a] = adj;
    }
  }

  // one row per nonadjacent class pair (duplicate vertex-pair rows collapse)
  for (int a = 0; a < nd; ++a)
    for (int b = a + 1; b < nd; ++b) {
      if (quotient[a][b]) continue;
      IlpModel::Row row;
      row.name = "pair" + std::to_string(a) + "_" + std::to_string(b);
      row.terms.push_back({model.y_var(a), M});
      row.terms.push_back({model.y_var(b), M});
      for (int cdx = 0; cdx < nd; ++cdx)
        if (quotient[a][cdx] && quotient[b][cdx])
          row.terms.push_back({model.x_var(cdx), 1});
      row.relation = Rel::LessEqual;
      row.rhs = 2 * M + c - 1;  // strict "< 2M" with the constant c moved right
      model.rows.push_back(std::move(row));
    }
  // one row per independent class
  for (int d = 0; d < nd; ++d) {
    if (model.partition.is_clique[d]) continue;
    IlpModel::Row row;
    row.name = "ind" + std::to_string(d);
    row.terms.push_back({model.z_var(d), M});
    for (int cdx = 0; cdx < nd; ++cdx)
      if (quotient[d][cdx]) row.terms.push_back({model.x_var(cdx), 1});
    row.relation = Rel::LessEqual;
    row.rhs = M + c - 1;
    model.rows.push_back(std::move(row));
  }
  return model;
}

SolveResult solve_ilp_tiny(const IlpModel& model, const Graph& g, int c,
                           long long guard) {
  if (static_cast<int>(model.partition.class_of.size()) != g.vertex_count())
    throw InputError("model does not match the graph");
  const int nd = model.class_count;
  long long space = 1;
  for (int d = 0; d < nd; ++d) {
    space *= model.upper_bounds[d] + 1;
    if (space > guard)
      throw ResourceError("ILP enumeration exceeds guard; export the LP file instead");
  }

  std::vector<long long> assignment(nd, 0);
  std::vector<long long> values(3 * nd, 0);
  auto feasible = [&]() {
    for (int d = 0; d < nd; ++d) {
      values[model.x_var(d)] = assignment[d];
      values[model.y_var(d)] = assignment[d] >= 1 ? 1 : 0;
      values[model.z_var(d)] = assignment[d] >= 2 ? 1 : 0;
    }
    for (const auto& row : model.rows) {
      long long sum = 0;
      for (const auto& term : row.terms) sum += term.coefficient * values[term.variable];
      if (row.relation == IlpModel::Relation::LessEqual ? sum > row.rhs : sum < row.rhs)
        return false;
    }
    return true;
  };

  SolveResult result;
  long long checked = 0;
  long long best = -1;
  std::vector<long long> best_assignment;
  while (true) {
    ++checked;
    if (feasible()) {
      long long objective = 0;
      for (int d = 0; d < nd; ++d) objective += assignment[d];
      if (objective > best) {
        best = objective;
        best_assignment = assignment;
      }
    }
    int d = nd - 1;
    while (d >= 0 && assignment[d] == model.upper_bounds[d]) --d;
    if (d < 0) break;
    ++assignment[d];
    for (int j = d + 1; j < nd; ++j) assignment[j] = 0;
  }

  std::vector<Vertex> removed;
  for (int d = 0; d < nd; ++d) {
    const auto& members = model.partition.classes[d].members();
    for (std::size_t i = best_assignment.empty() ? 0 : best_assignment[d];
         i < members.size(); ++i)
      removed.push_back(members[i]);
  }
  result.found = true;
  result.optimal = true;
  result.solution = VertexSet(std::move(removed));
  result.stats["assignments_enumerated"] = checked;
  result.stats["objective"] = best;
  (void)c;
  return result;
}

}  // namespace ccvd
