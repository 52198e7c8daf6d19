#include "oracles.hpp"

#include <algorithm>

#include "ccvd/closure.hpp"

namespace ccvd::testing {

namespace {

bool hits_all(const std::vector<std::vector<int>>& sets, const std::vector<int>& pick) {
  for (const auto& set : sets) {
    bool hit = false;
    for (int e : set)
      if (std::binary_search(pick.begin(), pick.end(), e)) {
        hit = true;
        break;
      }
    if (!hit) return false;
  }
  return true;
}

void for_each_subset(int n, int size, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> pick(size);
  for (int i = 0; i < size; ++i) pick[i] = i;
  if (size > n) return;
  while (true) {
    fn(pick);
    int i = size - 1;
    while (i >= 0 && pick[i] == n - size + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < size; ++j) pick[j] = pick[j - 1] + 1;
  }
}

}  // namespace

int brute_min_hitting_set(const HittingSetInstance& hs) {
  for (int size = 0; size <= hs.universe_size; ++size) {
    bool found = false;
    for_each_subset(hs.universe_size, size, [&](const std::vector<int>& pick) {
      if (!found && hits_all(hs.sets, pick)) found = true;
    });
    if (found) return size;
  }
  return hs.universe_size;
}

bool brute_hitting_set_decision(const HittingSetInstance& hs) {
  return brute_min_hitting_set(hs) <= hs.k;
}

std::vector<std::vector<int>> brute_minimal_hitting_sets(const HittingSetInstance& hs) {
  std::vector<std::vector<int>> out;
  for (int size = 0; size <= std::min(hs.k, hs.universe_size); ++size) {
    for_each_subset(hs.universe_size, size, [&](const std::vector<int>& pick) {
      if (!hits_all(hs.sets, pick)) return;
      for (std::size_t i = 0; i < pick.size(); ++i) {
        std::vector<int> smaller = pick;
        smaller.erase(smaller.begin() + i);
        if (hits_all(hs.sets, smaller)) return;  // not minimal
      }
      out.push_back(pick);
    });
  }
  std::sort(out.begin(), out.end());
  return out;
}

int brute_vertex_cover_optimum(const Graph& g) {
  const auto edges = g.edges();
  const int n = g.vertex_count();
  for (int size = 0; size <= n; ++size) {
    bool found = false;
    for_each_subset(n, size, [&](const std::vector<int>& pick) {
      if (found) return;
      for (const auto& [u, v] : edges)
        if (!std::binary_search(pick.begin(), pick.end(), u) &&
            !std::binary_search(pick.begin(), pick.end(), v))
          return;
      found = true;
    });
    if (found) return size;
  }
  return n;
}

int brute_max_independent_set_size(const Graph& g) {
  const int n = g.vertex_count();
  int best = 0;
  for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
    std::vector<Vertex> pick;
    for (int i = 0; i < n; ++i)
      if (mask & (1ull << i)) pick.push_back(i);
    bool independent = true;
    for (std::size_t i = 0; i < pick.size() && independent; ++i)
      for (std::size_t j = i + 1; j < pick.size(); ++j)
        if (g.adjacent(pick[i], pick[j])) {
          independent = false;
          break;
        }
    if (independent) best = std::max(best, static_cast<int>(pick.size()));
  }
  return best;
}

std::vector<VertexSet> brute_maximal_cliques(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<VertexSet> out;
  for (std::uint64_t mask = 1; mask < (1ull << n); ++mask) {
    std::vector<Vertex> pick;
    for (int i = 0; i < n; ++i)
      if (mask & (1ull << i)) pick.push_back(i);
    bool clique = true;
    for (std::size_t i = 0; i < pick.size() && clique; ++i)
      for (std::size_t j = i + 1; j < pick.size(); ++j)
        if (!g.adjacent(pick[i], pick[j])) {
          clique = false;
          break;
        }
    if (!clique) continue;
    bool maximal = true;
    for (Vertex v = 0; v < n && maximal; ++v) {
      if (mask & (1ull << v)) continue;
      bool extends = true;
      for (Vertex u : pick)
        if (!g.adjacent(u, v)) {
          extends = false;
          break;
        }
      if (extends) maximal = false;
    }
    if (maximal) out.emplace_back(std::move(pick));
  }
  std::sort(out.begin(), out.end());
  return out;
}

int brute_weak_closure(const Graph& g) {
  const int n = g.vertex_count();
  int gamma = 0;
  for (std::uint64_t mask = 1; mask < (1ull << n); ++mask) {
    std::vector<Vertex> pick;
    for (int i = 0; i < n; ++i)
      if (mask & (1ull << i)) pick.push_back(i);
    int best_vertex = INT32_MAX;
    for (Vertex u : pick) {
      int worst = 0;
      for (Vertex v : pick) {
        if (v == u || g.adjacent(u, v)) continue;
        int common = 0;
        for (Vertex w : pick)
          if (w != u && w != v && g.adjacent(u, w) && g.adjacent(v, w)) ++common;
        worst = std::max(worst, common);
      }
      best_vertex = std::min(best_vertex, worst);
    }
    gamma = std::max(gamma, best_vertex);
  }
  return gamma;
}

std::vector<Edge> brute_critical_edges(const Graph& g, int c) {
  std::vector<Edge> out;
  for (const auto& pair : enumerate_bad_pairs(g, c)) {
    const auto& conn = pair.connectors.members();
    const int t = static_cast<int>(conn.size());
    for_each_subset(t, c, [&](const std::vector<int>& pick) {
      for (int idx : pick) {
        out.push_back(make_edge(pair.u, conn[idx]));
        out.push_back(make_edge(pair.v, conn[idx]));
      }
    });
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

int degeneracy(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<bool> alive(n, true);
  std::vector<int> degree(n, 0);
  for (Vertex v = 0; v < n; ++v) degree[v] = g.degree(v);
  int best = 0;
  for (int round = 0; round < n; ++round) {
    Vertex pick = -1;
    for (Vertex v = 0; v < n; ++v)
      if (alive[v] && (pick == -1 || degree[v] < degree[pick])) pick = v;
    best = std::max(best, degree[pick]);
    alive[pick] = false;
    for (Vertex w : g.neighbors(pick))
      if (alive[w]) --degree[w];
  }
  return best;
}

bool is_bipartite(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> color(n, -1);
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < n; ++s) {
    if (color[s] != -1) continue;
    color[s] = 0;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(v)) {
        if (color[w] == -1) {
          color[w] = 1 - color[v];
          stack.push_back(w);
        } else if (color[w] == color[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

bool is_split_with_clique_prefix(const Graph& g, int clique_size) {
  for (Vertex a = 0; a < clique_size; ++a)
    for (Vertex b = a + 1; b < clique_size; ++b)
      if (!g.adjacent(a, b)) return false;
  for (Vertex a = clique_size; a < g.vertex_count(); ++a)
    for (Vertex b = a + 1; b < g.vertex_count(); ++b)
      if (g.adjacent(a, b)) return false;
  return true;
}

Graph random_graph(Rng& rng, int n, double p) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (rng.next_bool(p)) edges.emplace_back(u, v);
  return Graph(n, edges);
}

Graph random_graph_max_degree(Rng& rng, int n, int max_degree, int edge_attempts) {
  std::vector<int> degree(n, 0);
  std::vector<Edge> edges;
  for (int attempt = 0; attempt < edge_attempts; ++attempt) {
    Vertex u = rng.next_int(0, n - 1);
    Vertex v = rng.next_int(0, n - 1);
    if (u == v || degree[u] >= max_degree || degree[v] >= max_degree) continue;
    Edge e = make_edge(u, v);
    if (std::find(edges.begin(), edges.end(), e) != edges.end()) continue;
    edges.push_back(e);
    ++degree[u];
    ++degree[v];
  }
  return Graph(n, edges);
}

HittingSetInstance random_hitting_set(Rng& rng, int max_universe, int d, int k,
                                      int max_sets) {
  int universe = rng.next_int(1, max_universe);
  int count = rng.next_int(0, max_sets);
  std::vector<std::vector<int>> sets;
  for (int i = 0; i < count; ++i) {
    int size = rng.next_int(1, d);
    std::vector<int> set;
    for (int j = 0; j < size; ++j) set.push_back(rng.next_int(0, universe - 1));
    std::sort(set.begin(), set.end());
    set.erase(std::unique(set.begin(), set.end()), set.end());
    sets.push_back(std::move(set));
  }
  return HittingSetInstance(universe, d, k, std::move(sets));
}

}  // namespace ccvd::testing
