#include "ccvd/graph.hpp"

#include <algorithm>
#include <bit>

namespace ccvd {

namespace {
constexpr int kBitsetMaxVertices = 4096;
}

VertexSet::VertexSet(std::vector<Vertex> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

VertexSet::VertexSet(std::initializer_list<Vertex> members)
    : VertexSet(std::vector<Vertex>(members)) {}

bool VertexSet::contains(Vertex v) const {
  return std::binary_search(members_.begin(), members_.end(), v);
}

void VertexSet::insert(Vertex v) {
  auto it = std::lower_bound(members_.begin(), members_.end(), v);
  if (it == members_.end() || *it != v) members_.insert(it, v);
}

void VertexSet::erase(Vertex v) {
  auto it = std::lower_bound(members_.begin(), members_.end(), v);
  if (it != members_.end() && *it == v) members_.erase(it);
}

void merge_stats(Stats& into, const Stats& from) {
  for (const auto& [key, value] : from) into[key] += value;
}

Graph::Graph(int n, const std::vector<Edge>& edges) : n_(n) {
  if (n < 0) throw InputError("vertex count must be nonnegative");
  adj_.resize(n_);
  for (const auto& [a, b] : edges) {
    if (a < 0 || a >= n_ || b < 0 || b >= n_)
      throw InputError("edge endpoint out of range");
    if (a == b) throw InputError("self-loop not allowed");
    adj_[a].push_back(b);
    adj_[b].push_back(a);
  }
  for (auto& list : adj_) {
    std::sort(list.begin(), list.end());
    if (std::adjacent_find(list.begin(), list.end()) != list.end())
      throw InputError("duplicate edge not allowed");
    m_ += static_cast<long long>(list.size());
  }
  m_ /= 2;
  if (n_ > 0 && n_ <= kBitsetMaxVertices) {
    row_words_ = (n_ + 63) / 64;
    bits_.assign(static_cast<std::size_t>(n_) * row_words_, 0);
    for (Vertex v = 0; v < n_; ++v)
      for (Vertex u : adj_[v])
        bits_[static_cast<std::size_t>(v) * row_words_ + u / 64] |= 1ull << (u % 64);
  }
}

void Graph::check_vertex(Vertex v) const {
  if (v < 0 || v >= n_) throw InputError("vertex id out of range");
}

const std::vector<Vertex>& Graph::neighbors(Vertex v) const {
  check_vertex(v);
  return adj_[v];
}

int Graph::degree(Vertex v) const {
  check_vertex(v);
  return static_cast<int>(adj_[v].size());
}

int Graph::max_degree() const {
  int best = 0;
  for (const auto& list : adj_) best = std::max(best, static_cast<int>(list.size()));
  return best;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  if (has_bitsets())
    return (bits_[static_cast<std::size_t>(u) * row_words_ + v / 64] >> (v % 64)) & 1;
  return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> result;
  result.reserve(static_cast<std::size_t>(m_));
  for (Vertex v = 0; v < n_; ++v)
    for (Vertex u : adj_[v])
      if (v < u) result.emplace_back(v, u);
  return result;
}

std::span<const std::uint64_t> Graph::row(Vertex v) const {
  check_vertex(v);
  return {bits_.data() + static_cast<std::size_t>(v) * row_words_,
          static_cast<std::size_t>(row_words_)};
}

int Graph::common_neighbor_count(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  if (has_bitsets()) {
    auto a = row(u), b = row(v);
    int count = 0;
    for (int w = 0; w < row_words_; ++w) count += std::popcount(a[w] & b[w]);
    return count;
  }
  const auto& a = adj_[u];
  const auto& b = adj_[v];
  int count = 0;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] < b[j]) ++i;
    else if (a[i] > b[j]) ++j;
    else ++count, ++i, ++j;
  }
  return count;
}

VertexSet common_neighbors(const Graph& g, Vertex u, Vertex v) {
  g.check_vertex(u);
  g.check_vertex(v);
  if (u == v) throw InputError("common_neighbors requires two distinct vertices");
  std::vector<Vertex> out;
  const auto& a = g.neighbors(u);
  const auto& b = g.neighbors(v);
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return VertexSet(std::move(out));
}

bool is_c_closed(const Graph& g, int c) {
  if (c < 1) throw InputError("c must be at least 1");
  const int n = g.vertex_count();
  std::vector<int> cnt(n, 0);
  std::vector<Vertex> touched;
  for (Vertex u = 0; u < n; ++u) {
    touched.clear();
    for (Vertex w : g.neighbors(u)) {
      for (Vertex v : g.neighbors(w)) {
        if (v <= u) continue;
        if (cnt[v]++ == 0) touched.push_back(v);
        if (cnt[v] >= c && !g.adjacent(u, v)) return false;
      }
    }
    for (Vertex v : touched) cnt[v] = 0;
  }
  return true;
}

int closure_number(const Graph& g) {
  const int n = g.vertex_count();
  int worst = 0;
  std::vector<int> cnt(n, 0);
  std::vector<Vertex> touched;
  for (Vertex u = 0; u < n; ++u) {
    touched.clear();
    for (Vertex w : g.neighbors(u))
      for (Vertex v : g.neighbors(w)) {
        if (v <= u) continue;
        if (cnt[v]++ == 0) touched.push_back(v);
      }
    for (Vertex v : touched) {
      if (cnt[v] > worst && !g.adjacent(u, v)) worst = cnt[v];
      cnt[v] = 0;
    }
  }
  return worst + 1;
}

int weak_closure_number(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<bool> alive(n, true);
  std::vector<int> cnt(n, 0);
  std::vector<Vertex> touched;
  int gamma = 0;
  for (int round = 0; round < n; ++round) {
    Vertex pick = -1;
    int pick_value = 0;
    for (Vertex u = 0; u < n; ++u) {
      if (!alive[u]) continue;
      touched.clear();
      for (Vertex w : g.neighbors(u)) {
        if (!alive[w]) continue;
        for (Vertex v : g.neighbors(w)) {
          if (!alive[v] || v == u) continue;
          if (cnt[v]++ == 0) touched.push_back(v);
        }
      }
      int worst = 0;
      for (Vertex v : touched) {
        if (cnt[v] > worst && !g.adjacent(u, v)) worst = cnt[v];
        cnt[v] = 0;
      }
      if (pick == -1 || worst < pick_value) {
        pick = u;
        pick_value = worst;
      }
    }
    gamma = std::max(gamma, pick_value);
    alive[pick] = false;
  }
  return gamma;
}

InducedSubgraph delete_vertices(const Graph& g, const VertexSet& s) {
  const int n = g.vertex_count();
  for (Vertex v : s) g.check_vertex(v);
  InducedSubgraph out;
  out.new_ids.assign(n, -1);
  for (Vertex v = 0; v < n; ++v) {
    if (!s.contains(v)) {
      out.new_ids[v] = static_cast<int>(out.old_ids.size());
      out.old_ids.push_back(v);
    }
  }
  std::vector<Edge> edges;
  for (Vertex v : out.old_ids)
    for (Vertex u : g.neighbors(v))
      if (v < u && out.new_ids[u] >= 0)
        edges.emplace_back(out.new_ids[v], out.new_ids[u]);
  out.graph = Graph(static_cast<int>(out.old_ids.size()), edges);
  return out;
}

}  // namespace ccvd
