#include "graph.hpp"

#include <bit>

namespace azi {

Graph::Graph(int n) : n_(n), adj_(static_cast<size_t>(n), 0) {}

Graph Graph::empty(int n) {
  if (n < 1 || n > kMaxOrder) {
    throw_error(ErrorCode::unsupported,
                "graph order must be in [1, 64], got " + std::to_string(n));
  }
  return Graph(n);
}

Graph Graph::from_edges(int n, std::span<const std::pair<int, int>> edges) {
  Graph g = empty(n);
  for (const auto& [u, v] : edges) g.add_edge(u, v);
  return g;
}

Graph Graph::from_edges(int n, std::initializer_list<std::pair<int, int>> edges) {
  return from_edges(n, std::span<const std::pair<int, int>>(edges.begin(), edges.size()));
}

void Graph::add_edge(int u, int v) {
  if (u < 0 || u >= n_ || v < 0 || v >= n_) {
    throw_error(ErrorCode::invalid_argument,
                "edge endpoint out of range: (" + std::to_string(u) + ", " +
                    std::to_string(v) + ") with n=" + std::to_string(n_));
  }
  if (u == v) {
    throw_error(ErrorCode::invalid_argument, "self-loop at vertex " + std::to_string(u));
  }
  if (has_edge(u, v)) {
    throw_error(ErrorCode::invalid_argument,
                "duplicate edge (" + std::to_string(u) + ", " + std::to_string(v) + ")");
  }
  adj_[u] |= std::uint64_t{1} << v;
  adj_[v] |= std::uint64_t{1} << u;
}

void Graph::remove_edge(int u, int v) {
  if (u < 0 || u >= n_ || v < 0 || v >= n_ || !has_edge(u, v)) {
    throw_error(ErrorCode::invalid_argument,
                "no edge (" + std::to_string(u) + ", " + std::to_string(v) + ") to remove");
  }
  adj_[u] &= ~(std::uint64_t{1} << v);
  adj_[v] &= ~(std::uint64_t{1} << u);
}

int Graph::size() const {
  int twice = 0;
  for (int u = 0; u < n_; ++u) twice += std::popcount(adj_[u]);
  return twice / 2;
}

int Graph::degree(int u) const { return std::popcount(adj_[u]); }

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u) {
    std::uint64_t higher = adj_[u] >> (u + 1);
    while (higher) {
      int v = u + 1 + std::countr_zero(higher);
      out.emplace_back(u, v);
      higher &= higher - 1;
    }
  }
  return out;
}

Graph Graph::complement() const {
  Graph g(n_);
  const std::uint64_t all = (n_ == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << n_) - 1);
  for (int u = 0; u < n_; ++u) {
    g.adj_[u] = (~adj_[u] & all) & ~(std::uint64_t{1} << u);
  }
  return g;
}

bool Graph::is_connected() const {
  std::uint64_t seen = 1;  // start at vertex 0
  std::uint64_t frontier = 1;
  while (frontier) {
    std::uint64_t next = 0;
    while (frontier) {
      int u = std::countr_zero(frontier);
      frontier &= frontier - 1;
      next |= adj_[u];
    }
    frontier = next & ~seen;
    seen |= next;
  }
  const std::uint64_t all = (n_ == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << n_) - 1);
  return seen == all;
}

bool Graph::is_chemical() const {
  for (int u = 0; u < n_; ++u) {
    if (degree(u) > 4) return false;
  }
  return is_connected();
}

int Graph::cyclomatic() const {
  if (!is_connected()) {
    throw_error(ErrorCode::invalid_argument, "cyclomatic number needs a connected graph");
  }
  return size() - n_ + 1;
}

Graph Graph::relabeled(std::span<const int> perm) const {
  if (static_cast<int>(perm.size()) != n_) {
    throw_error(ErrorCode::invalid_argument, "relabeling permutation has wrong length");
  }
  Graph g(n_);
  for (int u = 0; u < n_; ++u) {
    std::uint64_t row = adj_[u];
    while (row) {
      int v = std::countr_zero(row);
      row &= row - 1;
      g.adj_[perm[u]] |= std::uint64_t{1} << perm[v];
    }
  }
  return g;
}

DegreeProfile degree_profile(const Graph& g) {
  DegreeProfile p;
  const int n = g.order();
  p.degrees.resize(n);
  for (int u = 0; u < n; ++u) p.degrees[u] = g.degree(u);

  p.max_degree = 0;
  p.min_degree = n;  // degrees are < n, so this is a safe sentinel
  for (int d : p.degrees) {
    p.max_degree = std::max(p.max_degree, d);
    p.min_degree = std::min(p.min_degree, d);
  }

  p.degree_counts.assign(p.max_degree + 1, 0);
  for (int d : p.degrees) ++p.degree_counts[d];
  p.pendant_count = (p.max_degree >= 1) ? p.degree_counts[1] : 0;

  for (int d : p.degrees) {
    if (d >= 2 && (!p.min_nonpendant_degree || d < *p.min_nonpendant_degree)) {
      p.min_nonpendant_degree = d;
    }
  }

  for (const auto& [u, v] : g.edges()) {
    int a = p.degrees[u], b = p.degrees[v];
    if (a > b) std::swap(a, b);
    ++p.edge_class_counts[{a, b}];
  }
  return p;
}

int n3_prime(const Graph& g) {
  int count = 0;
  for (int u = 0; u < g.order(); ++u) {
    if (g.degree(u) != 3) continue;
    int big = 0;
    std::uint64_t row = g.neighbors(u);
    while (row) {
      int v = std::countr_zero(row);
      row &= row - 1;
      if (g.degree(v) > 2) ++big;
    }
    if (big >= 2) ++count;
  }
  return count;
}

Graph path_graph(int n) {
  Graph g = Graph::empty(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph cycle_graph(int n) {
  if (n < 3) throw_error(ErrorCode::invalid_argument, "cycle needs at least 3 vertices");
  Graph g = path_graph(n);
  g.add_edge(n - 1, 0);
  return g;
}

Graph complete_graph(int n) {
  Graph g = Graph::empty(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph star_graph(int leaves) {
  Graph g = Graph::empty(leaves + 1);
  for (int v = 1; v <= leaves; ++v) g.add_edge(0, v);
  return g;
}

Graph circulant_graph(int n, std::span<const int> offsets) {
  Graph g = Graph::empty(n);
  for (int off : offsets) {
    if (off <= 0 || off > n / 2) {
      throw_error(ErrorCode::invalid_argument, "circulant offset out of range");
    }
    for (int u = 0; u < n; ++u) {
      int v = (u + off) % n;
      if (!g.has_edge(u, v)) g.add_edge(u, v);
    }
  }
  return g;
}

}  // namespace azi
