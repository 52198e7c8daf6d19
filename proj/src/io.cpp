#include "ccvd/io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace ccvd {

namespace {

struct LineReader {
  std::istringstream stream;
  int line_number = 0;

  explicit LineReader(const std::string& text) : stream(text) {}

  // next non-comment, non-blank line
  bool next(std::string& line) {
    while (std::getline(stream, line)) {
      ++line_number;
      std::size_t pos = line.find_first_not_of(" \t\r");
      if (pos == std::string::npos) continue;
      if (line[pos] == '#') continue;
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& message) const {
    throw InputError("line " + std::to_string(line_number) + ": " + message);
  }
};

std::vector<long long> parse_ints(LineReader& reader, const std::string& line) {
  std::istringstream tokens(line);
  std::vector<long long> out;
  std::string token;
  while (tokens >> token) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(token, &used));
      if (used != token.size()) reader.fail("malformed integer '" + token + "'");
    } catch (const InputError&) {
      throw;
    } catch (const std::exception&) {
      reader.fail("malformed integer '" + token + "'");
    }
  }
  return out;
}

}  // namespace

Graph parse_graph(const std::string& text) {
  LineReader reader(text);
  std::string line;
  if (!reader.next(line)) throw InputError("missing graph header line");
  auto header = parse_ints(reader, line);
  if (header.size() != 2) reader.fail("expected header 'n m'");
  long long n = header[0], m = header[1];
  if (n < 0 || m < 0) reader.fail("negative count in header");

  std::vector<Edge> edges;
  for (long long i = 0; i < m; ++i) {
    if (!reader.next(line)) throw InputError("fewer edge lines than declared");
    auto pair = parse_ints(reader, line);
    if (pair.size() != 2) reader.fail("expected edge 'u v'");
    long long u = pair[0], v = pair[1];
    if (u < 0 || u >= n || v < 0 || v >= n) reader.fail("vertex id out of range");
    if (u == v) reader.fail("self-loop");
    edges.push_back(make_edge(static_cast<Vertex>(u), static_cast<Vertex>(v)));
  }
  if (reader.next(line)) reader.fail("trailing content after edge list");
  std::vector<Edge> sorted = edges;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw InputError("duplicate edge");
  return Graph(static_cast<int>(n), edges);
}

std::string serialize_graph(const Graph& g) {
  std::ostringstream out;
  out << g.vertex_count() << " " << g.edge_count() << "\n";
  for (const auto& [u, v] : g.edges()) out << u << " " << v << "\n";
  return out.str();
}

IntervalRepresentation parse_intervals(const std::string& text) {
  LineReader reader(text);
  std::string line;
  if (!reader.next(line)) throw InputError("missing interval header line");
  auto header = parse_ints(reader, line);
  if (header.size() != 1 || header[0] < 0) reader.fail("expected header 'n'");
  const long long n = header[0];

  std::vector<double> starts(n, 0.0);
  std::vector<bool> seen(n, false);
  for (long long i = 0; i < n; ++i) {
    if (!reader.next(line)) throw InputError("fewer interval lines than declared");
    std::istringstream tokens(line);
    long long id;
    double start;
    std::string extra;
    if (!(tokens >> id >> start)) reader.fail("expected 'id start'");
    if (tokens >> extra) reader.fail("trailing tokens");
    if (id < 0 || id >= n) reader.fail("interval id out of range");
    if (seen[id]) reader.fail("duplicate interval id");
    seen[id] = true;
    starts[id] = start;
  }
  if (reader.next(line)) reader.fail("trailing content after interval list");
  return IntervalRepresentation(std::move(starts));
}

std::string serialize_intervals(const IntervalRepresentation& rep) {
  std::ostringstream out;
  out << rep.size() << "\n";
  char buffer[64];
  for (Vertex v = 0; v < rep.size(); ++v) {
    std::snprintf(buffer, sizeof buffer, "%.17g", rep.start(v));
    out << v << " " << buffer << "\n";
  }
  return out.str();
}

HittingSetInstance parse_hitting_set(const std::string& text) {
  LineReader reader(text);
  std::string line;
  if (!reader.next(line)) throw InputError("missing hitting set header line");
  auto header = parse_ints(reader, line);
  if (header.size() != 4) reader.fail("expected header 'universe sets d k'");
  long long u = header[0], s = header[1], d = header[2], k = header[3];
  if (u < 0 || s < 0) reader.fail("negative count in header");

  std::vector<std::vector<int>> sets;
  for (long long i = 0; i < s; ++i) {
    if (!reader.next(line)) throw InputError("fewer set lines than declared");
    auto ids = parse_ints(reader, line);
    if (ids.empty()) reader.fail("empty set");
    std::vector<int> set;
    for (long long e : ids) {
      if (e < 0 || e >= u) reader.fail("element id out of range");
      set.push_back(static_cast<int>(e));
    }
    sets.push_back(std::move(set));
  }
  if (reader.next(line)) reader.fail("trailing content after set list");
  try {
    return HittingSetInstance(static_cast<int>(u), static_cast<int>(d),
                              static_cast<int>(k), std::move(sets));
  } catch (const InputError& e) {
    throw InputError(std::string("hitting set instance: ") + e.what());
  }
}

std::string serialize_hitting_set(const HittingSetInstance& hs) {
  std::ostringstream out;
  out << hs.universe_size << " " << hs.sets.size() << " " << hs.d << " " << hs.k
      << "\n";
  for (const auto& set : hs.sets) {
    for (std::size_t i = 0; i < set.size(); ++i)
      out << set[i] << (i + 1 == set.size() ? "" : " ");
    out << "\n";
  }
  return out.str();
}

VertexSet parse_vertex_set(const std::string& text) {
  LineReader reader(text);
  std::string line;
  std::vector<Vertex> members;
  while (reader.next(line)) {
    for (long long v : parse_ints(reader, line)) {
      if (v < 0) reader.fail("negative vertex id");
      members.push_back(static_cast<Vertex>(v));
    }
  }
  return VertexSet(std::move(members));
}

std::string serialize_vertex_set(const VertexSet& s) {
  std::ostringstream out;
  const auto& members = s.members();
  for (std::size_t i = 0; i < members.size(); ++i)
    out << members[i] << (i + 1 == members.size() ? "" : " ");
  out << "\n";
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write file: " + path);
  out << content;
}

}  // namespace ccvd
