#include "ccvd/reductions.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "ccvd/closure.hpp"

namespace ccvd {

namespace {

// Mutable adjacency used while edges are being removed.
struct MutableAdj {
  std::vector<std::vector<Vertex>> adj;

  explicit MutableAdj(const Graph& g) {
    adj.resize(g.vertex_count());
    for (Vertex v = 0; v < g.vertex_count(); ++v) adj[v] = g.neighbors(v);
  }

  bool adjacent(Vertex u, Vertex v) const {
    return std::binary_search(adj[u].begin(), adj[u].end(), v);
  }

  int common(Vertex u, Vertex v) const {
    const auto& a = adj[u];
    const auto& b = adj[v];
    int count = 0;
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
      if (a[i] < b[j]) ++i;
      else if (a[i] > b[j]) ++j;
      else ++count, ++i, ++j;
    }
    return count;
  }

  void remove_edge(Vertex u, Vertex v) {
    auto drop = [](std::vector<Vertex>& list, Vertex x) {
      list.erase(std::lower_bound(list.begin(), list.end(), x));
    };
    drop(adj[u], v);
    drop(adj[v], u);
  }

  // {u,v} is critical iff one endpoint is in a bad pair with the other among
  // its connecting vertices.
  bool edge_critical(Vertex u, Vertex v, int c) const {
    for (Vertex x : adj[v])
      if (x != u && !adjacent(u, x) && common(u, x) >= c) return true;
    for (Vertex y : adj[u])
      if (y != v && !adjacent(v, y) && common(v, y) >= c) return true;
    return false;
  }

  Graph to_graph() const {
    std::vector<Edge> edges;
    for (Vertex v = 0; v < static_cast<Vertex>(adj.size()); ++v)
      for (Vertex u : adj[v])
        if (v < u) edges.emplace_back(v, u);
    return Graph(static_cast<int>(adj.size()), edges);
  }
};

long long pow_saturating(long long base, int exp, long long cap) {
  long long value = 1;
  for (int i = 0; i < exp; ++i) {
    if (value > cap / std::max(1ll, base)) return cap;
    value *= base;
  }
  return std::min(value, cap);
}

}  // namespace

Graph rule1_noncritical_edge(const Graph& g, int c, Stats* stats) {
  if (c < 1) throw InputError("c must be at least 1");
  MutableAdj work(g);
  long long removed = 0;
  bool changed = true;
  while (changed) {
    changed = false;
    for (Vertex u = 0; u < g.vertex_count(); ++u) {
      // snapshot: adj[u] shrinks while iterating
      std::vector<Vertex> snapshot(work.adj[u].begin(), work.adj[u].end());
      for (Vertex v : snapshot) {
        if (v <= u || !work.adjacent(u, v)) continue;
        if (work.common(u, v) < c && !work.edge_critical(u, v, c)) {
          work.remove_edge(u, v);
          ++removed;
          changed = true;
        }
      }
    }
  }
  if (stats) (*stats)["rule1_removed_edges"] += removed;
  return work.to_graph();
}

KernelOutput rule2_x_kernel(const Graph& g, int c, int k) {
  if (c < 1) throw InputError("c must be at least 1");
  if (k < 0) throw InputError("k must be nonnegative");
  KernelOutput out;
  VertexSet deleted;
  std::vector<Edge> heavy_pairs;
  long long rounds = 0;

  while (true) {
    ++rounds;
    InducedSubgraph cur = delete_vertices(g, deleted);
    const Graph& h = cur.graph;
    auto pairs = enumerate_bad_pairs(h, c);

    VertexSet x_set;
    for (const auto& p : pairs) {
      x_set.insert(p.u);
      x_set.insert(p.v);
    }
    std::vector<bool> heavy(pairs.size(), false);
    std::vector<bool> marked(h.vertex_count(), false);
    for (Vertex v : x_set) marked[v] = true;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      int outside = 0;
      for (Vertex w : pairs[i].connectors)
        if (!x_set.contains(w)) ++outside;
      heavy[i] = outside > k + c;
      if (heavy[i])
        heavy_pairs.push_back(make_edge(cur.old_ids[pairs[i].u], cur.old_ids[pairs[i].v]));
      else
        for (Vertex w : pairs[i].connectors) marked[w] = true;
    }

    std::vector<std::vector<int>> pairs_through(h.vertex_count());
    std::vector<int> remaining(pairs.size());
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      remaining[i] = pairs[i].connectors.size();
      for (Vertex w : pairs[i].connectors) pairs_through[w].push_back(static_cast<int>(i));
    }

    // Delete unmarked vertices while every bad pair through them keeps at
    // least k+c connecting vertices; the remaining unmarked ones are handled
    // after re-marking (their pairs turn weak once the count reaches k+c).
    bool any_unmarked = false;
    bool removed_any = false;
    for (Vertex v = 0; v < h.vertex_count(); ++v) {
      if (marked[v]) continue;
      any_unmarked = true;
      bool safe = true;
      for (int p : pairs_through[v])
        if (remaining[p] < k + c + 1) {
          safe = false;
          break;
        }
      if (!safe) continue;
      for (int p : pairs_through[v]) --remaining[p];
      deleted.insert(cur.old_ids[v]);
      removed_any = true;
    }
    if (!any_unmarked) break;
    if (!removed_any)
      throw std::logic_error("rule2 made no progress");  // unreachable: heavy pairs start above k+c
  }

  InducedSubgraph final_cut = delete_vertices(g, deleted);
  out.graph = std::move(final_cut.graph);
  out.old_ids = std::move(final_cut.old_ids);
  out.k = k;
  std::sort(heavy_pairs.begin(), heavy_pairs.end());
  heavy_pairs.erase(std::unique(heavy_pairs.begin(), heavy_pairs.end()), heavy_pairs.end());
  out.forced_pairs = std::move(heavy_pairs);
  out.stats["rule2_rounds"] = rounds;
  out.stats["rule2_removed_vertices"] = deleted.size();
  return out;
}

CcvdInstance reduce_hittingset_to_ccvd(const HittingSetInstance& hs) {
  if (hs.d < 2) throw InputError("reduction requires d >= 2");
  long long padding = 0;
  for (const auto& set : hs.sets) padding += hs.d - static_cast<int>(set.size());
  const int clique_size = hs.universe_size + static_cast<int>(padding);
  const int n = clique_size + 2 * static_cast<int>(hs.sets.size());

  std::vector<Edge> edges;
  for (Vertex a = 0; a < clique_size; ++a)
    for (Vertex b = a + 1; b < clique_size; ++b) edges.emplace_back(a, b);

  int next_pad = hs.universe_size;
  for (std::size_t i = 0; i < hs.sets.size(); ++i) {
    std::vector<int> padded = hs.sets[i];
    while (static_cast<int>(padded.size()) < hs.d) padded.push_back(next_pad++);
    const Vertex va = clique_size + 2 * static_cast<int>(i);
    const Vertex ua = va + 1;
    for (int e : padded) {
      edges.emplace_back(e, va);
      edges.emplace_back(e, ua);
    }
  }
  return {Graph(n, edges), hs.d, hs.k, clique_size};
}

HittingSetInstance reduce_ccvd_to_hittingset(const Graph& g, int c, int k,
                                             long long max_sets) {
  if (c < 1) throw InputError("c must be at least 1");
  if (k < 0) throw InputError("k must be nonnegative");
  std::vector<std::vector<int>> sets;
  for (const auto& pair : enumerate_bad_pairs(g, c)) {
    std::vector<Vertex> pool = pair.connectors.members();
    if (static_cast<int>(pool.size()) >= k + c)
      pool.resize(k + c);  // lexicographically smallest k+c connectors
    const int t = static_cast<int>(pool.size());
    std::vector<int> pick(c);
    std::iota(pick.begin(), pick.end(), 0);
    while (true) {
      if (static_cast<long long>(sets.size()) >= max_sets)
        throw ResourceError("hitting set reduction exceeds set guard");
      std::vector<int> set = {pair.u, pair.v};
      for (int i = 0; i < c; ++i) set.push_back(pool[pick[i]]);
      sets.push_back(std::move(set));
      int i = c - 1;
      while (i >= 0 && pick[i] == t - c + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < c; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return HittingSetInstance(g.vertex_count(), c + 2, k, std::move(sets));
}

HittingSetInstance expressive_hittingset_kernel(const HittingSetInstance& hs) {
  const long long cap = 2'000'000'000'000'000'000ll;
  std::vector<long long> threshold(hs.d + 1);
  for (int j = 0; j <= hs.d; ++j)
    threshold[j] = pow_saturating(hs.k + 1, j, cap);

  std::map<std::vector<int>, long long> count;
  std::vector<std::vector<int>> kept;
  for (const auto& set : hs.sets) {
    const int t = static_cast<int>(set.size());
    bool keep = true;
    for (unsigned mask = 0; mask < (1u << t) && keep; ++mask) {
      std::vector<int> sub;
      for (int i = 0; i < t; ++i)
        if (mask & (1u << i)) sub.push_back(set[i]);
      auto it = count.find(sub);
      long long have = it == count.end() ? 0 : it->second;
      if (have >= threshold[hs.d - static_cast<int>(sub.size())]) keep = false;
    }
    if (!keep) continue;
    for (unsigned mask = 0; mask < (1u << t); ++mask) {
      std::vector<int> sub;
      for (int i = 0; i < t; ++i)
        if (mask & (1u << i)) sub.push_back(set[i]);
      ++count[sub];
    }
    kept.push_back(set);
  }
  return HittingSetInstance(hs.universe_size, hs.d, hs.k, std::move(kept));
}

KernelOutput kernelize_parameter_k(const Graph& g, int c, int k, long long max_sets) {
  if (c < 1) throw InputError("c must be at least 1");
  if (k < 0) throw InputError("k must be nonnegative");
  KernelOutput out;
  out.k = k;

  const long long shortcut = pow_saturating(k, c + 2, 2'000'000'000'000'000'000ll);
  if (g.vertex_count() <= shortcut) {
    out.graph = g;
    out.old_ids.resize(g.vertex_count());
    std::iota(out.old_ids.begin(), out.old_ids.end(), 0);
    out.stats["kernelize_shortcut"] = 1;
    return out;
  }

  out.forced_pairs = forced_pair_rule(g, c, k);
  HittingSetInstance hs = reduce_ccvd_to_hittingset(g, c, k, max_sets);
  HittingSetInstance kernel = expressive_hittingset_kernel(hs);

  VertexSet survivors;
  {
    std::vector<Vertex> members;
    for (const auto& set : kernel.sets) members.insert(members.end(), set.begin(), set.end());
    survivors = VertexSet(std::move(members));
  }
  VertexSet removed;
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (!survivors.contains(v)) removed.insert(v);

  InducedSubgraph cut = delete_vertices(g, removed);
  out.graph = std::move(cut.graph);
  out.old_ids = std::move(cut.old_ids);
  out.stats["kernelize_sets_total"] = static_cast<long long>(hs.sets.size());
  out.stats["kernelize_sets_kept"] = static_cast<long long>(kernel.sets.size());
  return out;
}

std::vector<Edge> forced_pair_rule(const Graph& g, int c, int k) {
  if (c < 1) throw InputError("c must be at least 1");
  if (k < 0) throw InputError("k must be nonnegative");
  std::vector<Edge> out;
  for (const auto& pair : enumerate_bad_pairs(g, c))
    if (pair.connectors.size() >= k + c) out.emplace_back(pair.u, pair.v);
  return out;
}

}  // namespace ccvd
