#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ccvd {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;  // normalized u < v unless stated otherwise

/// Named integer counters attached to solver results (branch nodes, rule firings, ...).
using Stats = std::map<std::string, long long>;

/// Bad input: out-of-range ids, malformed files, violated preconditions.
struct InputError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A guard against infeasible enumeration sizes was hit.
struct ResourceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Sorted, duplicate-free set of vertex ids.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::vector<Vertex> members);
  VertexSet(std::initializer_list<Vertex> members);

  bool contains(Vertex v) const;
  void insert(Vertex v);
  void erase(Vertex v);

  int size() const { return static_cast<int>(members_.size()); }
  bool empty() const { return members_.empty(); }
  const std::vector<Vertex>& members() const { return members_; }

  std::vector<Vertex>::const_iterator begin() const { return members_.begin(); }
  std::vector<Vertex>::const_iterator end() const { return members_.end(); }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;
  friend auto operator<=>(const VertexSet&, const VertexSet&) = default;

 private:
  std::vector<Vertex> members_;
};

inline Edge make_edge(Vertex u, Vertex v) { return u < v ? Edge{u, v} : Edge{v, u}; }

void merge_stats(Stats& into, const Stats& from);

}  // namespace ccvd
