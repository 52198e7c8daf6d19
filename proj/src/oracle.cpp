#include "ccvd/oracle.hpp"

#include <algorithm>

namespace ccvd {

namespace {

// c-closedness of the subgraph induced by the alive vertices, without
// materializing it.
bool is_c_closed_within(const Graph& g, int c, const std::vector<bool>& alive,
                        std::vector<int>& cnt, std::vector<Vertex>& touched) {
  const int n = g.vertex_count();
  for (Vertex u = 0; u < n; ++u) {
    if (!alive[u]) continue;
    touched.clear();
    bool bad = false;
    for (Vertex w : g.neighbors(u)) {
      if (!alive[w]) continue;
      for (Vertex v : g.neighbors(w)) {
        if (v <= u || !alive[v]) continue;
        if (cnt[v]++ == 0) touched.push_back(v);
        if (cnt[v] >= c && !g.adjacent(u, v)) {
          bad = true;
          break;
        }
      }
      if (bad) break;
    }
    for (Vertex v : touched) cnt[v] = 0;
    if (bad) return false;
  }
  return true;
}

long long subset_count(int n, int k) {
  const long long cap = 200'000'000'000'000ll;
  long long total = 0, binom = 1;
  for (int i = 0; i <= k; ++i) {
    total += binom;
    if (total >= cap || binom >= cap / std::max(1, n)) return cap;  // saturate
    binom = binom * (n - i) / (i + 1);
  }
  return total;
}

}  // namespace

SolveResult brute_force_min_deletion(const Graph& g, int c, int k_max,
                                     long long max_subsets) {
  if (c < 1) throw InputError("c must be at least 1");
  if (k_max < 0) throw InputError("k_max must be nonnegative");
  const int n = g.vertex_count();
  const int limit = std::min(k_max, n);
  if (subset_count(n, limit) > max_subsets)
    throw ResourceError("brute force subset count exceeds guard");

  SolveResult result;
  std::vector<bool> alive(n, true);
  std::vector<int> cnt(n, 0);
  std::vector<Vertex> touched;
  long long checked = 0;

  std::vector<Vertex> pick;
  for (int size = 0; size <= limit; ++size) {
    pick.resize(size);
    for (int i = 0; i < size; ++i) pick[i] = i;
    while (true) {
      for (Vertex v : pick) alive[v] = false;
      ++checked;
      bool ok = is_c_closed_within(g, c, alive, cnt, touched);
      for (Vertex v : pick) alive[v] = true;
      if (ok) {
        result.found = true;
        result.optimal = true;
        result.solution = VertexSet(pick);
        result.stats["subsets_checked"] = checked;
        return result;
      }
      // next k-combination of 0..n-1
      int i = size - 1;
      while (i >= 0 && pick[i] == n - size + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < size; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  result.lower_bound = k_max + 1;
  result.stats["subsets_checked"] = checked;
  return result;
}

int brute_force_optimum(const Graph& g, int c, long long max_subsets) {
  SolveResult r = brute_force_min_deletion(g, c, g.vertex_count(), max_subsets);
  return r.solution.size();
}

}  // namespace ccvd
