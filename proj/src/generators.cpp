#include "ccvd/generators.hpp"

#include <algorithm>
#include <queue>

#include "ccvd/rng.hpp"

namespace ccvd {

Graph generate_fsg(int c, std::uint64_t optional_edges) {
  if (c < 1) throw InputError("c must be at least 1");
  if (c > 10) throw InputError("fsg generator supports c <= 10");
  const int pair_count = c * (c - 1) / 2;
  if (pair_count < 64 && optional_edges >= (1ull << pair_count))
    throw InputError("optional edge mask out of range");
  std::vector<Edge> edges;
  for (int w = 0; w < c; ++w) {
    edges.emplace_back(0, 2 + w);
    edges.emplace_back(1, 2 + w);
  }
  int bit = 0;
  for (int a = 0; a < c; ++a)
    for (int b = a + 1; b < c; ++b, ++bit)
      if (optional_edges & (1ull << bit)) edges.emplace_back(2 + a, 2 + b);
  return Graph(c + 2, edges);
}

Graph generate_clique_pendants(int s) {
  if (s < 1) throw InputError("s must be at least 1");
  std::vector<Edge> edges;
  for (Vertex a = 0; a < 2 * s; ++a)
    for (Vertex b = a + 1; b < 2 * s; ++b) edges.emplace_back(a, b);
  for (Vertex q = 0; q < s; ++q) edges.emplace_back(q, 2 * s);
  for (Vertex q = s; q < 2 * s; ++q) edges.emplace_back(q, 2 * s + 1);
  return Graph(2 * s + 2, edges);
}

Graph generate_indep_components(int s, int c) {
  if (s < 1 || c < 1) throw InputError("s and c must be at least 1");
  std::vector<Edge> edges;
  for (int j = 0; j < s; ++j) {
    const Vertex base = j * (c + 2);
    for (int i = 0; i < c; ++i) {
      edges.emplace_back(base + i, base + c);
      edges.emplace_back(base + i, base + c + 1);
    }
  }
  return Graph(s * (c + 2), edges);
}

Graph generate_random_graph(int n, double p, std::uint64_t seed) {
  if (n < 0) throw InputError("n must be nonnegative");
  if (p < 0.0 || p > 1.0) throw InputError("p must be in [0,1]");
  Rng rng(seed);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (rng.next_bool(p)) edges.emplace_back(u, v);
  return Graph(n, edges);
}

IntervalRepresentation generate_random_intervals(int n, int c, std::uint64_t seed) {
  if (n < 0) throw InputError("n must be nonnegative");
  if (c < 1) throw InputError("c must be at least 1");
  Rng rng(seed);
  std::vector<double> starts(n);
  double cursor = 0.0;
  for (int i = 0; i < n; ++i) {
    if (i > 0) cursor += 0.02 + 0.45 * rng.next_double();
    // depth stays <= c+1 iff every c+2 consecutive starts span more than 1
    if (i > c) {
      double floor = starts[i - c - 1] + 1.0 + 0.01 * (1.0 + rng.next_double());
      cursor = std::max(cursor, floor);
    }
    starts[i] = cursor;
  }
  return IntervalRepresentation(std::move(starts));
}

namespace {

void require_max_degree_3(const Graph& g) {
  if (g.max_degree() > 3)
    throw InputError("vertex cover instance must have max degree 3");
}

}  // namespace

Graph generate_vc_maxdeg6(const Graph& vc, int c) {
  if (c < 2) throw InputError("construction requires c >= 2");
  require_max_degree_3(vc);
  const int n = vc.vertex_count();
  std::vector<Edge> edges;
  int next = n;
  for (const auto& [a, b] : vc.edges()) {
    const Vertex b1 = next, b2 = next + 1;
    next += 2;
    for (Vertex bp : {b1, b2}) {
      edges.emplace_back(a, bp);
      edges.emplace_back(b, bp);
    }
    for (int i = 0; i < c - 2; ++i) {
      const Vertex w = next++;
      edges.emplace_back(b1, w);
      edges.emplace_back(b2, w);
    }
  }
  return Graph(next, edges);
}

Graph generate_vc_maxdeg45(const Graph& vc, int c) {
  if (c != 2 && c != 3) throw InputError("construction requires c in {2,3}");
  require_max_degree_3(vc);
  const int n = vc.vertex_count();

  std::vector<Vertex> degree3;
  for (Vertex v = 0; v < n; ++v)
    if (vc.degree(v) == 3) degree3.push_back(v);
  // degree-3 vertices must be pairwise at distance >= 3
  for (Vertex v : degree3) {
    std::vector<int> dist(n, -1);
    std::queue<Vertex> queue;
    dist[v] = 0;
    queue.push(v);
    while (!queue.empty()) {
      Vertex u = queue.front();
      queue.pop();
      if (dist[u] >= 2) continue;
      for (Vertex w : vc.neighbors(u))
        if (dist[w] == -1) {
          dist[w] = dist[u] + 1;
          queue.push(w);
        }
    }
    for (Vertex u : degree3)
      if (u != v && dist[u] != -1 && dist[u] <= 2)
        throw InputError("degree-3 vertices must be pairwise at distance >= 3");
  }

  std::vector<Edge> edges;
  int next = n;
  for (const auto& [a, b] : vc.edges()) {
    if (vc.degree(a) == 3 || vc.degree(b) == 3) continue;  // handled below
    const Vertex b1 = next, b2 = next + 1;
    next += 2;
    for (Vertex bp : {b1, b2}) {
      edges.emplace_back(a, bp);
      edges.emplace_back(b, bp);
    }
    for (int i = 0; i < c - 2; ++i) {
      const Vertex w = next++;
      edges.emplace_back(b1, w);
      edges.emplace_back(b2, w);
    }
  }
  for (Vertex v : degree3) {
    const auto& us = vc.neighbors(v);  // sorted u1 < u2 < u3
    for (int i = 0; i < 3; ++i) {
      const Vertex si = next++;
      edges.emplace_back(v, si);
      edges.emplace_back(us[i], si);
    }
    const int hubs = c == 2 ? 1 : 2;
    Vertex x1 = next;
    for (int h = 0; h < hubs; ++h) {
      const Vertex x = next++;
      edges.emplace_back(v, x);
      for (Vertex u : us) edges.emplace_back(u, x);
    }
    if (hubs == 2) edges.emplace_back(x1, x1 + 1);
  }
  return Graph(next, edges);
}

CcvdInstance generate_hs_split(const HittingSetInstance& hs) {
  return reduce_hittingset_to_ccvd(hs);
}

GeneratedInstance generate(const GeneratorSpec& spec) {
  GeneratedInstance out;
  out.kind = "graph";
  if (spec.family == "fsg") {
    out.graph = generate_fsg(spec.c, spec.mask);
    out.c = spec.c;
    out.comment = "fsg c=" + std::to_string(spec.c) + " mask=" + std::to_string(spec.mask);
  } else if (spec.family == "clique-pendants") {
    out.graph = generate_clique_pendants(spec.s);
    out.comment = "clique-pendants s=" + std::to_string(spec.s);
  } else if (spec.family == "indep-components") {
    out.graph = generate_indep_components(spec.s, spec.c);
    out.c = spec.c;
    out.comment = "indep-components s=" + std::to_string(spec.s) +
                  " c=" + std::to_string(spec.c);
  } else if (spec.family == "random") {
    out.graph = generate_random_graph(spec.n, spec.p, spec.seed);
    out.comment = "random n=" + std::to_string(spec.n) + " p=" + std::to_string(spec.p) +
                  " seed=" + std::to_string(spec.seed);
  } else if (spec.family == "random-interval") {
    out.kind = "interval";
    out.intervals = generate_random_intervals(spec.n, spec.c, spec.seed);
    out.c = spec.c;
    out.comment = "random-interval n=" + std::to_string(spec.n) +
                  " c=" + std::to_string(spec.c) + " seed=" + std::to_string(spec.seed);
  } else if (spec.family == "vc-maxdeg6") {
    if (!spec.input_graph) throw InputError("vc-maxdeg6 needs a vertex cover input graph");
    out.graph = generate_vc_maxdeg6(*spec.input_graph, spec.c);
    out.c = spec.c;
    out.k = spec.k;
    out.comment = "vc-maxdeg6 c=" + std::to_string(spec.c) + " (budget preserved)";
  } else if (spec.family == "vc-maxdeg45") {
    if (!spec.input_graph) throw InputError("vc-maxdeg45 needs a vertex cover input graph");
    out.graph = generate_vc_maxdeg45(*spec.input_graph, spec.c);
    out.c = spec.c;
    out.k = spec.k;
    out.comment = "vc-maxdeg45 c=" + std::to_string(spec.c) + " (budget preserved)";
  } else if (spec.family == "hs-split") {
    if (!spec.input_hs) throw InputError("hs-split needs a hitting set input");
    CcvdInstance instance = generate_hs_split(*spec.input_hs);
    out.graph = std::move(instance.graph);
    out.c = instance.c;
    out.k = instance.k;
    out.comment = "hs-split c=" + std::to_string(instance.c) +
                  " k=" + std::to_string(instance.k) +
                  " clique_size=" + std::to_string(instance.clique_size);
  } else {
    throw InputError("unknown generator family: " + spec.family);
  }
  return out;
}

}  // namespace ccvd
