#pragma once

#include <string>

#include "ccvd/graph.hpp"
#include "ccvd/hitting_set.hpp"
#include "ccvd/intervals.hpp"
#include "ccvd/types.hpp"

namespace ccvd {

// Graph text format: '#' comment lines, a header line "n m", then m lines
// "u v" with 0-based ids (serialized canonically with u < v, sorted).
Graph parse_graph(const std::string& text);
std::string serialize_graph(const Graph& g);

// Interval text format: header "n", then n lines "id start"; intervals have
// unit length.
IntervalRepresentation parse_intervals(const std::string& text);
std::string serialize_intervals(const IntervalRepresentation& rep);

// Hitting set text format: header "universe_size set_count d k", then one
// line of element ids per set.
HittingSetInstance parse_hitting_set(const std::string& text);
std::string serialize_hitting_set(const HittingSetInstance& hs);

// Vertex set: whitespace-separated ids, '#' comments.
VertexSet parse_vertex_set(const std::string& text);
std::string serialize_vertex_set(const VertexSet& s);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace ccvd
