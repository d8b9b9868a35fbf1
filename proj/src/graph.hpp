#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"

namespace azi {

// Undirected simple graph on vertices 0..n-1. Adjacency is one 64-bit row
// per vertex, which caps the order at 64; everything in this project runs
// at desk scale (enumeration n <= 16, graph6 n <= 62), so a row per machine
// word keeps the enumeration hot loops branch-free.
class Graph {
 public:
  static constexpr int kMaxOrder = 64;

  static Graph empty(int n);
  static Graph from_edges(int n, std::span<const std::pair<int, int>> edges);
  static Graph from_edges(int n, std::initializer_list<std::pair<int, int>> edges);

  int order() const { return n_; }
  int size() const;  // edge count m

  bool has_edge(int u, int v) const { return (adj_[u] >> v) & 1u; }
  std::uint64_t neighbors(int u) const { return adj_[u]; }
  int degree(int u) const;

  std::vector<std::pair<int, int>> edges() const;  // (u, v) with u < v, sorted

  Graph complement() const;
  bool is_connected() const;
  bool is_chemical() const;       // connected and max degree <= 4
  int cyclomatic() const;         // m - n + 1; error on disconnected input
  Graph relabeled(std::span<const int> perm) const;  // vertex u -> perm[u]

  // Mutators used by constructions and transforms; inputs are validated.
  void add_edge(int u, int v);
  void remove_edge(int u, int v);

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.adj_ == b.adj_;
  }

 private:
  explicit Graph(int n);

  int n_ = 0;
  std::vector<std::uint64_t> adj_;
};

// The statistics vector every degree-based formula consumes.
struct DegreeProfile {
  std::vector<int> degrees;
  int max_degree = 0;                        // Delta
  int min_degree = 0;                        // delta
  std::optional<int> min_nonpendant_degree;  // delta_1; empty when every vertex is pendant
  int pendant_count = 0;                     // p = n_1
  std::vector<int> degree_counts;            // n_i for i = 0..Delta
  std::map<std::pair<int, int>, int> edge_class_counts;  // x_{i,j}, keyed i <= j
};

DegreeProfile degree_profile(const Graph& g);

// Degree-3 vertices adjacent to at least two vertices of degree > 2.
int n3_prime(const Graph& g);

// Canonical-form based; defined in canonical.cpp. Requires order <= 16.
bool isomorphic(const Graph& a, const Graph& b);

// Named small graphs used throughout the tests and verifiers.
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph star_graph(int leaves);
Graph circulant_graph(int n, std::span<const int> offsets);

}  // namespace azi
