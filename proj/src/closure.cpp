#include "ccvd/closure.hpp"

#include <algorithm>

namespace ccvd {

bool CriticalEdgeSet::contains(Vertex u, Vertex v) const {
  return std::binary_search(edges.begin(), edges.end(), make_edge(u, v));
}

std::vector<BadPairWitness> enumerate_bad_pairs(const Graph& g, int c) {
  if (c < 1) throw InputError("c must be at least 1");
  const int n = g.vertex_count();
  std::vector<BadPairWitness> result;
  std::vector<int> cnt(n, 0);
  std::vector<Vertex> touched;
  for (Vertex u = 0; u < n; ++u) {
    touched.clear();
    for (Vertex w : g.neighbors(u))
      for (Vertex v : g.neighbors(w)) {
        if (v <= u) continue;
        if (cnt[v]++ == 0) touched.push_back(v);
      }
    std::sort(touched.begin(), touched.end());
    for (Vertex v : touched) {
      if (cnt[v] >= c && !g.adjacent(u, v))
        result.push_back({u, v, common_neighbors(g, u, v)});
      cnt[v] = 0;
    }
  }
  return result;
}

VertexSet bad_pair_vertices(const Graph& g, int c) {
  std::vector<Vertex> members;
  for (const auto& pair : enumerate_bad_pairs(g, c)) {
    members.push_back(pair.u);
    members.push_back(pair.v);
  }
  return VertexSet(std::move(members));
}

FsgEnumeration enumerate_fsgs(const Graph& g, int c, long long cap_per_pair) {
  if (cap_per_pair < 1) throw InputError("cap_per_pair must be at least 1");
  FsgEnumeration out;
  for (const auto& pair : enumerate_bad_pairs(g, c)) {
    const auto& conn = pair.connectors.members();
    const int t = static_cast<int>(conn.size());
    std::vector<int> pick(c);
    for (int i = 0; i < c; ++i) pick[i] = i;
    long long emitted = 0;
    while (true) {
      if (emitted >= cap_per_pair) {
        out.truncated = true;
        break;
      }
      std::vector<Vertex> chosen(c);
      for (int i = 0; i < c; ++i) chosen[i] = conn[pick[i]];
      out.fsgs.push_back({pair.u, pair.v, VertexSet(std::move(chosen))});
      ++emitted;
      int i = c - 1;
      while (i >= 0 && pick[i] == t - c + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < c; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return out;
}

CriticalEdgeSet critical_edges(const Graph& g, int c) {
  CriticalEdgeSet out;
  for (const auto& pair : enumerate_bad_pairs(g, c))
    for (Vertex w : pair.connectors) {
      out.edges.push_back(make_edge(pair.u, w));
      out.edges.push_back(make_edge(pair.v, w));
    }
  std::sort(out.edges.begin(), out.edges.end());
  out.edges.erase(std::unique(out.edges.begin(), out.edges.end()), out.edges.end());
  return out;
}

}  // namespace ccvd
