#pragma once

#include <string>

#include "graph.hpp"

namespace azi {

// Short-form graph6 (n <= 62), bit-exact with the de-facto standard: byte
// n+63, then the upper-triangle bits in column order (pairs (i,j), i < j,
// sorted by j then i), packed big-endian six at a time, each group +63.
std::string to_graph6(const Graph& g);
Graph from_graph6(const std::string& s);

// Plain text interchange: first line "n m", then m lines "u v", 0-based.
std::string to_edge_list_text(const Graph& g);
Graph from_edge_list_text(const std::string& text);

}  // namespace azi
