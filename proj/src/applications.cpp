#include "ccvd/applications.hpp"

#include <algorithm>

namespace ccvd {

namespace {

void bron_kerbosch(const Graph& g, std::vector<Vertex>& r, std::vector<Vertex> p,
                   std::vector<Vertex> x, std::vector<VertexSet>& out) {
  if (p.empty() && x.empty()) {
    out.emplace_back(r);
    return;
  }
  // pivot: the candidate from P union X with most neighbors in P
  Vertex pivot = -1;
  int best = -1;
  for (const auto* side : {&p, &x})
    for (Vertex u : *side) {
      int score = 0;
      for (Vertex w : p)
        if (g.adjacent(u, w)) ++score;
      if (score > best) {
        best = score;
        pivot = u;
      }
    }
  std::vector<Vertex> candidates;
  for (Vertex v : p)
    if (!g.adjacent(pivot, v)) candidates.push_back(v);

  for (Vertex v : candidates) {
    std::vector<Vertex> np, nx;
    for (Vertex w : p)
      if (g.adjacent(v, w)) np.push_back(w);
    for (Vertex w : x)
      if (g.adjacent(v, w)) nx.push_back(w);
    r.push_back(v);
    bron_kerbosch(g, r, std::move(np), std::move(nx), out);
    r.pop_back();
    p.erase(std::find(p.begin(), p.end(), v));
    x.insert(std::lower_bound(x.begin(), x.end(), v), v);
  }
}

bool is_clique(const Graph& g, const std::vector<Vertex>& vs) {
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (!g.adjacent(vs[i], vs[j])) return false;
  return true;
}

bool is_independent(const Graph& g, const std::vector<Vertex>& vs) {
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (g.adjacent(vs[i], vs[j])) return false;
  return true;
}

bool is_maximal_clique(const Graph& g, const std::vector<Vertex>& clique) {
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (std::binary_search(clique.begin(), clique.end(), v)) continue;
    bool extends = true;
    for (Vertex u : clique)
      if (!g.adjacent(u, v)) {
        extends = false;
        break;
      }
    if (extends) return false;
  }
  return true;
}

void check_decomposition(const AlmostClosedDecomposition& dec) {
  for (Vertex v : dec.modulator) dec.graph.check_vertex(v);
  InducedSubgraph rest = delete_vertices(dec.graph, dec.modulator);
  if (!is_c_closed(rest.graph, dec.c))
    throw InputError("modulator does not make the graph c-closed");
}

long long max_is_branch(const Graph& g, std::vector<Vertex> candidates,
                        std::vector<Vertex>& current, std::vector<Vertex>& best) {
  long long nodes = 1;
  if (candidates.empty()) {
    if (current.size() > best.size()) best = current;
    return nodes;
  }
  if (current.size() + candidates.size() <= best.size()) return nodes;  // bound
  // branch on the candidate with most candidate neighbors
  Vertex pick = candidates.front();
  int best_deg = -1;
  for (Vertex v : candidates) {
    int deg = 0;
    for (Vertex w : candidates)
      if (w != v && g.adjacent(v, w)) ++deg;
    if (deg > best_deg) {
      best_deg = deg;
      pick = v;
    }
  }
  // take pick
  std::vector<Vertex> reduced;
  for (Vertex w : candidates)
    if (w != pick && !g.adjacent(pick, w)) reduced.push_back(w);
  current.push_back(pick);
  nodes += max_is_branch(g, std::move(reduced), current, best);
  current.pop_back();
  // skip pick
  std::vector<Vertex> rest;
  for (Vertex w : candidates)
    if (w != pick) rest.push_back(w);
  nodes += max_is_branch(g, std::move(rest), current, best);
  return nodes;
}

}  // namespace

std::vector<VertexSet> bron_kerbosch_maximal_cliques(const Graph& g) {
  std::vector<VertexSet> out;
  std::vector<Vertex> r, p(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) p[v] = v;
  if (g.vertex_count() > 0) bron_kerbosch(g, r, std::move(p), {}, out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

VertexSet max_independent_set_exact(const Graph& g) {
  std::vector<Vertex> candidates(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) candidates[v] = v;
  std::vector<Vertex> current, best;
  max_is_branch(g, std::move(candidates), current, best);
  return VertexSet(std::move(best));
}

std::vector<VertexSet> enumerate_maximal_cliques(const AlmostClosedDecomposition& dec,
                                                 Stats* stats) {
  check_decomposition(dec);
  const Graph& g = dec.graph;
  const auto& mod = dec.modulator.members();
  const int s = static_cast<int>(mod.size());
  if (s > 62) throw ResourceError("modulator too large for subset enumeration");

  std::vector<VertexSet> out;
  long long branches = 0;
  for (std::uint64_t mask = 0; mask < (1ull << s); ++mask) {
    std::vector<Vertex> chosen;
    for (int i = 0; i < s; ++i)
      if (mask & (1ull << i)) chosen.push_back(mod[i]);
    if (!is_clique(g, chosen)) continue;
    ++branches;

    // restrict G - S to common neighbors of S'
    VertexSet removed;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      if (dec.modulator.contains(v)) {
        removed.insert(v);
        continue;
      }
      for (Vertex u : chosen)
        if (!g.adjacent(u, v)) {
          removed.insert(v);
          break;
        }
    }
    InducedSubgraph sub = delete_vertices(g, removed);
    for (const auto& local : bron_kerbosch_maximal_cliques(sub.graph)) {
      std::vector<Vertex> clique = chosen;
      for (Vertex v : local) clique.push_back(sub.old_ids[v]);
      std::sort(clique.begin(), clique.end());
      if (is_maximal_clique(g, clique)) out.emplace_back(std::move(clique));
    }
  }
  if (stats) (*stats)["outer_branches"] += branches;
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::optional<VertexSet> max_independent_set(const AlmostClosedDecomposition& dec,
                                             int target, const MaxIsSolver& solver,
                                             Stats* stats) {
  check_decomposition(dec);
  const Graph& g = dec.graph;
  const auto& mod = dec.modulator.members();
  const int s = static_cast<int>(mod.size());
  if (s > 62) throw ResourceError("modulator too large for subset enumeration");
  const MaxIsSolver& solve = solver ? solver : max_independent_set_exact;

  long long branches = 0;
  std::optional<VertexSet> best;
  for (std::uint64_t mask = 0; mask < (1ull << s); ++mask) {
    std::vector<Vertex> chosen;
    for (int i = 0; i < s; ++i)
      if (mask & (1ull << i)) chosen.push_back(mod[i]);
    if (!is_independent(g, chosen)) continue;
    ++branches;

    VertexSet removed;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      if (dec.modulator.contains(v)) {
        removed.insert(v);
        continue;
      }
      for (Vertex u : chosen)
        if (g.adjacent(u, v)) {
          removed.insert(v);
          break;
        }
    }
    InducedSubgraph sub = delete_vertices(g, removed);
    VertexSet local = solve(sub.graph);
    std::vector<Vertex> candidate = chosen;
    for (Vertex v : local) candidate.push_back(sub.old_ids[v]);
    if (!best || static_cast<int>(candidate.size()) > best->size())
      best = VertexSet(std::move(candidate));
  }
  if (stats) (*stats)["outer_branches"] += branches;
  if (best && best->size() >= target) return best;
  return std::nullopt;
}

}  // namespace ccvd
