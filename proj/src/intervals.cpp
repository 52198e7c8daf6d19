#include "ccvd/intervals.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "ccvd/closure.hpp"

namespace ccvd {

IntervalRepresentation::IntervalRepresentation(std::vector<double> starts)
    : starts_(std::move(starts)) {
  for (double s : starts_)
    if (!std::isfinite(s)) throw InputError("interval start must be finite");
  order_.resize(starts_.size());
  std::iota(order_.begin(), order_.end(), 0);
  std::stable_sort(order_.begin(), order_.end(), [&](Vertex a, Vertex b) {
    return starts_[a] < starts_[b];
  });
}

int IntervalRepresentation::depth() const {
  // max coverage is attained at some start point
  const int n = size();
  int best = 0;
  std::size_t lo = 0;
  for (std::size_t i = 0; i < order_.size(); ++i) {
    double point = starts_[order_[i]];
    while (starts_[order_[lo]] + 1.0 < point) ++lo;
    best = std::max(best, static_cast<int>(i - lo + 1));
  }
  return n == 0 ? 0 : best;
}

Graph IntervalRepresentation::induced_graph() const {
  std::vector<Edge> edges;
  const int n = size();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (starts_[order_[j]] > starts_[order_[i]] + 1.0) break;
      edges.push_back(make_edge(order_[i], order_[j]));
    }
  }
  return Graph(n, edges);
}

SolveResult solve_unit_interval(const IntervalRepresentation& rep, int c) {
  if (c < 1) throw InputError("c must be at least 1");
  if (rep.depth() > c + 1)
    throw InputError("interval instance has depth larger than c+1");

  const int n = rep.size();
  const auto& order = rep.order();
  auto left = [&](int pos) { return rep.start(order[pos]); };
  auto right = [&](int pos) { return rep.start(order[pos]) + 1.0; };

  SolveResult result;
  std::vector<Vertex> removed;
  long long windows = 0;
  int i = 0;
  while (i + c + 1 < n) {
    bool fsg = true;
    for (int h = 1; h <= c; ++h) {
      if (!(left(i + h) <= right(i) && right(i + h) >= left(i + c + 1))) {
        fsg = false;
        break;
      }
    }
    if (fsg) {
      removed.push_back(order[i + c + 1]);
      ++windows;
      i += c + 2;
    } else {
      ++i;
    }
  }
  result.found = true;
  result.optimal = true;
  result.solution = VertexSet(std::move(removed));
  result.stats["fsg_windows"] = windows;
  return result;
}

bool verify_fsg_window_structure(const IntervalRepresentation& rep, int c) {
  if (c < 1) throw InputError("c must be at least 1");
  if (rep.depth() > c + 1)
    throw InputError("interval instance has depth larger than c+1");
  Graph g = rep.induced_graph();
  std::vector<int> position(rep.size());
  for (int pos = 0; pos < rep.size(); ++pos) position[rep.order()[pos]] = pos;

  for (const auto& pair : enumerate_bad_pairs(g, c)) {
    const auto& conn = pair.connectors.members();
    const int t = static_cast<int>(conn.size());
    std::vector<int> pick(c);
    std::iota(pick.begin(), pick.end(), 0);
    while (true) {
      std::vector<int> positions = {position[pair.u], position[pair.v]};
      for (int i = 0; i < c; ++i) positions.push_back(position[conn[pick[i]]]);
      std::sort(positions.begin(), positions.end());
      bool consecutive = true;
      for (int i = 1; i < static_cast<int>(positions.size()); ++i)
        if (positions[i] != positions[0] + i) consecutive = false;
      int lo = std::min(position[pair.u], position[pair.v]);
      int hi = std::max(position[pair.u], position[pair.v]);
      if (!consecutive || lo != positions.front() || hi != positions.back())
        return false;

      int i = c - 1;
      while (i >= 0 && pick[i] == t - c + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < c; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return true;
}

}  // namespace ccvd
