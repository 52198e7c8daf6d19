#include "ccvd/solvers.hpp"

#include <algorithm>
#include <climits>
#include <cstring>
#include <numeric>

#include "ccvd/closure.hpp"
#include "ccvd/reductions.hpp"

namespace ccvd {

namespace {

bool neighborhoods_match(const Graph& g, Vertex u, Vertex v,
                         std::vector<std::uint64_t>& a,
                         std::vector<std::uint64_t>& b) {
  if (g.has_bitsets()) {
    auto ru = g.row(u);
    auto rv = g.row(v);
    a.assign(ru.begin(), ru.end());
    b.assign(rv.begin(), rv.end());
    a[v / 64] &= ~(1ull << (v % 64));
    a[u / 64] &= ~(1ull << (u % 64));
    b[u / 64] &= ~(1ull << (u % 64));
    b[v / 64] &= ~(1ull << (v % 64));
    return a == b;
  }
  auto skip = [&](const std::vector<Vertex>& list, std::vector<Vertex>& out, Vertex x,
                  Vertex y) {
    out.clear();
    for (Vertex w : list)
      if (w != x && w != y) out.push_back(w);
  };
  static thread_local std::vector<Vertex> la, lb;
  skip(g.neighbors(u), la, u, v);
  skip(g.neighbors(v), lb, u, v);
  return la == lb;
}

struct BranchContext {
  const Graph& g;
  int c;
  int words;
  std::vector<std::uint64_t> alive;
  std::vector<Vertex> deleted;
  Stats stats;

  BranchContext(const Graph& graph, int closure) : g(graph), c(closure) {
    words = g.has_bitsets() ? g.row_words() : 0;
    alive.assign(std::max(1, words), ~0ull);
    if (words > 0) {
      // clear the tail bits past n-1
      int tail = g.vertex_count() % 64;
      if (tail != 0) alive[words - 1] = (1ull << tail) - 1;
    }
  }

  bool is_alive(Vertex v) const { return (alive[v / 64] >> (v % 64)) & 1; }
  void kill(Vertex v) { alive[v / 64] &= ~(1ull << (v % 64)); }
  void revive(Vertex v) { alive[v / 64] |= 1ull << (v % 64); }

  int common_alive(Vertex u, Vertex v) const {
    auto a = g.row(u);
    auto b = g.row(v);
    int count = 0;
    for (int w = 0; w < words; ++w) count += std::popcount(a[w] & b[w] & alive[w]);
    return count;
  }

  std::vector<Vertex> common_alive_list(Vertex u, Vertex v) const {
    std::vector<Vertex> out;
    for (Vertex w : g.neighbors(u))
      if (is_alive(w) && g.adjacent(v, w)) out.push_back(w);
    return out;
  }
};

struct PairScan {
  bool found = false;
  bool heavy = false;
  Vertex u = -1, v = -1;
  int connectors = INT_MAX;
};

// First heavy pair in (u,v) order if one exists, else the bad pair with the
// fewest connectors (ties to the smallest ids).
PairScan scan_bad_pairs(const BranchContext& ctx, int budget) {
  PairScan best;
  const int n = ctx.g.vertex_count();
  for (Vertex u = 0; u < n; ++u) {
    if (!ctx.is_alive(u)) continue;
    for (Vertex v = u + 1; v < n; ++v) {
      if (!ctx.is_alive(v) || ctx.g.adjacent(u, v)) continue;
      int count = ctx.common_alive(u, v);
      if (count < ctx.c) continue;
      if (count >= budget + ctx.c) {
        PairScan heavy;
        heavy.found = true;
        heavy.heavy = true;
        heavy.u = u;
        heavy.v = v;
        heavy.connectors = count;
        return heavy;
      }
      if (!best.found || count < best.connectors) {
        best.found = true;
        best.u = u;
        best.v = v;
        best.connectors = count;
      }
    }
  }
  return best;
}

bool branch_search(BranchContext& ctx, int budget) {
  ++ctx.stats["branch_nodes"];
  PairScan pair = scan_bad_pairs(ctx, budget);
  if (!pair.found) return true;
  if (budget == 0) return false;

  std::vector<Vertex> candidates;
  if (pair.heavy) {
    ++ctx.stats["forced_pair_branches"];
    candidates = {pair.u, pair.v};
  } else {
    ++ctx.stats["fsg_branches"];
    auto connectors = ctx.common_alive_list(pair.u, pair.v);
    candidates = {pair.u, pair.v};
    for (int i = 0; i < ctx.c; ++i) candidates.push_back(connectors[i]);
    std::sort(candidates.begin(), candidates.end());
  }
  for (Vertex w : candidates) {
    ctx.kill(w);
    ctx.deleted.push_back(w);
    if (branch_search(ctx, budget - 1)) return true;
    ctx.deleted.pop_back();
    ctx.revive(w);
  }
  return false;
}

}  // namespace

SolveResult solve_branching(const Graph& g, int c, int k) {
  if (c < 1) throw InputError("c must be at least 1");
  if (k < 0) throw InputError("k must be nonnegative");
  Stats stats;
  Graph reduced = rule1_noncritical_edge(g, c, &stats);

  SolveResult result;
  BranchContext ctx(reduced, c);
  for (int budget = 0; budget <= k; ++budget) {
    ctx.deleted.clear();
    if (branch_search(ctx, budget)) {
      result.found = true;
      result.optimal = true;
      result.solution = VertexSet(ctx.deleted);
      merge_stats(stats, ctx.stats);
      result.stats = std::move(stats);
      return result;
    }
  }
  merge_stats(stats, ctx.stats);
  result.stats = std::move(stats);
  result.lower_bound = k + 1;
  return result;
}

NeighborhoodPartition neighborhood_partition(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> root(n);
  std::iota(root.begin(), root.end(), 0);
  auto find = [&](Vertex v) {
    while (root[v] != v) v = root[v] = root[root[v]];
    return v;
  };
  std::vector<std::uint64_t> a, b;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) {
      if (find(u) == find(v)) continue;
      if (neighborhoods_match(g, u, v, a, b)) root[find(v)] = find(u);
    }

  NeighborhoodPartition part;
  part.class_of.assign(n, -1);
  std::vector<int> index_of_root(n, -1);
  for (Vertex v = 0; v < n; ++v) {
    Vertex r = find(v);
    if (index_of_root[r] == -1) {
      index_of_root[r] = part.size();
      part.classes.emplace_back();
    }
    part.class_of[v] = index_of_root[r];
    part.classes[index_of_root[r]].insert(v);
  }
  for (const auto& cls : part.classes) {
    bool clique = cls.size() >= 2 &&
                  g.adjacent(cls.members()[0], cls.members()[1]);
    part.is_clique.push_back(clique);
  }
  return part;
}

namespace {

struct NdRow {
  // violated unless gate allows it or the class sum stays below c
  int gate_class;        // pair rows: second gate class; ind rows: -1
  int gate_class2 = -1;  // pair rows use two gates (both retained counts > 0)
  bool ind = false;      // ind rows gate on x[gate_class] >= 2
  std::vector<int> sum_classes;
  int last_class = 0;  // max class index appearing anywhere in the row
};

struct NdSearch {
  const NeighborhoodPartition& part;
  int c;
  std::vector<std::vector<int>> options;  // per class, descending retained counts
  std::vector<std::vector<int>> rows_by_last;
  std::vector<NdRow> rows;
  std::vector<int> assigned;
  long long profiles = 0;
  int best_retained = -1;
  std::vector<int> best_profile;

  bool row_ok(const NdRow& row) const {
    if (row.ind) {
      if (assigned[row.gate_class] <= 1) return true;
    } else {
      if (assigned[row.gate_class] == 0 || assigned[row.gate_class2] == 0) return true;
    }
    long long sum = 0;
    for (int cls : row.sum_classes) sum += assigned[cls];
    return sum <= c - 1;
  }

  void recurse(int depth, int retained) {
    if (depth == static_cast<int>(options.size())) {
      ++profiles;
      if (retained > best_retained) {
        best_retained = retained;
        best_profile = assigned;
      }
      return;
    }
    for (int keep : options[depth]) {
      assigned[depth] = keep;
      bool ok = true;
      for (int r : rows_by_last[depth])
        if (!row_ok(rows[r])) {
          ok = false;
          break;
        }
      if (ok) recurse(depth + 1, retained + keep);
    }
    assigned[depth] = 0;
  }
};

}  // namespace

SolveResult solve_nd_branching(const Graph& g, int c, int k) {
  if (c < 2) throw InputError("solve_nd_branching requires c >= 2");
  if (k < 0) throw InputError("k must be nonnegative");
  const int n = g.vertex_count();
  NeighborhoodPartition part = neighborhood_partition(g);
  const int nd = part.size();

  // quotient adjacency; Q[D][D] records internal adjacency of clique classes
  std::vector<std::vector<bool>> quotient(nd, std::vector<bool>(nd, false));
  for (int a = 0; a < nd; ++a) {
    quotient[a][a] = part.is_clique[a];
    for (int b = a + 1; b < nd; ++b) {
      bool adj = g.adjacent(part.classes[a].members()[0], part.classes[b].members()[0]);
      quotient[a][b] = quotient[b][a] = adj;
    }
  }

  NdSearch search{part, c, {}, {}, {}, {}, 0, -1, {}};
  search.options.resize(nd);
  for (int d = 0; d < nd; ++d) {
    const int size = part.classes[d].size();
    std::vector<int> opts = {size};
    for (int keep = std::min(c - 1, size); keep >= 0; --keep)
      if (keep != size) opts.push_back(keep);
    search.options[d] = std::move(opts);
  }

  for (int a = 0; a < nd; ++a)
    for (int b = a + 1; b < nd; ++b) {
      if (quotient[a][b]) continue;
      NdRow row;
      row.gate_class = a;
      row.gate_class2 = b;
      row.last_class = b;
      for (int cdx = 0; cdx < nd; ++cdx)
        if (quotient[a][cdx] && quotient[b][cdx]) {
          row.sum_classes.push_back(cdx);
          row.last_class = std::max(row.last_class, cdx);
        }
      search.rows.push_back(std::move(row));
    }
  for (int d = 0; d < nd; ++d) {
    if (part.is_clique[d]) continue;
    NdRow row;
    row.ind = true;
    row.gate_class = d;
    row.last_class = d;
    for (int cdx = 0; cdx < nd; ++cdx)
      if (quotient[d][cdx]) {
        row.sum_classes.push_back(cdx);
        row.last_class = std::max(row.last_class, cdx);
      }
    search.rows.push_back(std::move(row));
  }
  search.rows_by_last.resize(std::max(1, nd));
  for (int r = 0; r < static_cast<int>(search.rows.size()); ++r)
    search.rows_by_last[search.rows[r].last_class].push_back(r);

  search.assigned.assign(nd, 0);
  search.recurse(0, 0);

  SolveResult result;
  result.stats["profiles_explored"] = search.profiles;
  result.stats["nd"] = nd;
  const int optimum = n - search.best_retained;
  if (optimum <= k) {
    std::vector<Vertex> removed;
    for (int d = 0; d < nd; ++d) {
      const auto& members = part.classes[d].members();
      for (int i = search.best_profile[d]; i < static_cast<int>(members.size()); ++i)
        removed.push_back(members[i]);  // drop the highest ids
    }
    result.found = true;
    result.optimal = true;
    result.solution = VertexSet(std::move(removed));
  } else {
    result.lower_bound = k + 1;
  }
  return result;
}

SolveResult solve_degree_bounded(const Graph& g, int c) {
  const int delta = g.max_degree();
  if (!((c == 2 && delta <= 2) || (c == 3 && delta <= 3)))
    throw InputError("solve_degree_bounded requires c = 2 with max degree <= 2 "
                     "or c = 3 with max degree <= 3");
  SolveResult result;
  Graph reduced = rule1_noncritical_edge(g, c, &result.stats);

  const int n = reduced.vertex_count();
  const int component_cap = c == 2 ? 4 : 6;
  std::vector<int> component(n, -1);
  std::vector<Vertex> queue;
  std::vector<Vertex> solution;
  int components = 0;
  for (Vertex s = 0; s < n; ++s) {
    if (component[s] != -1) continue;
    queue.assign(1, s);
    component[s] = components;
    std::vector<Vertex> members;
    while (!queue.empty()) {
      Vertex v = queue.back();
      queue.pop_back();
      members.push_back(v);
      for (Vertex w : reduced.neighbors(v))
        if (component[w] == -1) {
          component[w] = components;
          queue.push_back(w);
        }
    }
    ++components;
    if (static_cast<int>(members.size()) > component_cap)
      throw std::logic_error("rule 1 left an oversized component");
    if (members.size() < 2) continue;
    std::sort(members.begin(), members.end());
    VertexSet others;
    for (Vertex v = 0; v < n; ++v)
      if (component[v] != components - 1) others.insert(v);
    // brute force on the constant-size component
    InducedSubgraph local = delete_vertices(reduced, others);
    SolveResult sub = brute_force_min_deletion(local.graph, c, component_cap);
    for (Vertex v : sub.solution) solution.push_back(local.old_ids[v]);
  }
  result.found = true;
  result.optimal = true;
  result.solution = VertexSet(std::move(solution));
  result.stats["components"] = components;
  return result;
}

}  // namespace ccvd
