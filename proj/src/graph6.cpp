#include "graph6.hpp"

#include <sstream>

namespace azi {

namespace {
constexpr int kBias = 63;
constexpr int kMaxGraph6Order = 62;

[[noreturn]] void parse_fail(size_t offset, const std::string& what) {
  throw_error(ErrorCode::parse, "graph6 byte " + std::to_string(offset) + ": " + what);
}
}  // namespace

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  if (n > kMaxGraph6Order) {
    throw_error(ErrorCode::unsupported,
                "short-form graph6 handles n <= 62, got n=" + std::to_string(n));
  }
  std::string out;
  out.push_back(static_cast<char>(n + kBias));
  int group = 0, used = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      group = (group << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++used == 6) {
        out.push_back(static_cast<char>(group + kBias));
        group = 0;
        used = 0;
      }
    }
  }
  if (used > 0) out.push_back(static_cast<char>((group << (6 - used)) + kBias));
  return out;
}

Graph from_graph6(const std::string& s) {
  if (s.empty()) parse_fail(0, "empty string");
  const int n = static_cast<unsigned char>(s[0]) - kBias;
  if (static_cast<unsigned char>(s[0]) == 126) parse_fail(0, "long-form order not supported");
  if (n < 1 || n > kMaxGraph6Order) parse_fail(0, "order byte out of range");

  const int nbits = n * (n - 1) / 2;
  const size_t expect = 1 + static_cast<size_t>((nbits + 5) / 6);
  if (s.size() != expect) {
    parse_fail(s.size() < expect ? s.size() : expect,
               "expected " + std::to_string(expect) + " bytes, got " + std::to_string(s.size()));
  }

  Graph g = Graph::empty(n);
  int bit = 0;
  for (size_t pos = 1; pos < s.size(); ++pos) {
    const int c = static_cast<unsigned char>(s[pos]);
    if (c < kBias || c > 126) parse_fail(pos, "byte outside graph6 alphabet");
    const int group = c - kBias;
    for (int k = 5; k >= 0; --k, ++bit) {
      const bool set = (group >> k) & 1;
      if (bit >= nbits) {
        if (set) parse_fail(pos, "nonzero padding bits");
        continue;
      }
      if (set) {
        // Invert the column-major position index. Column j holds bits
        // [j(j-1)/2, j(j+1)/2); recover j, then i.
        int j = 1;
        while ((j + 1) * j / 2 <= bit) ++j;
        int i = bit - j * (j - 1) / 2;
        g.add_edge(i, j);
      }
    }
  }
  return g;
}

std::string to_edge_list_text(const Graph& g) {
  std::ostringstream out;
  const auto edges = g.edges();
  out << g.order() << " " << edges.size() << "\n";
  for (const auto& [u, v] : edges) out << u << " " << v << "\n";
  return out.str();
}

Graph from_edge_list_text(const std::string& text) {
  std::istringstream in(text);
  long long n = -1, m = -1;
  if (!(in >> n >> m)) throw_error(ErrorCode::parse, "edge list: missing 'n m' header");
  if (n < 1 || n > Graph::kMaxOrder || m < 0) {
    throw_error(ErrorCode::parse, "edge list: bad header n=" + std::to_string(n) +
                                      " m=" + std::to_string(m));
  }
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<size_t>(m));
  for (long long k = 0; k < m; ++k) {
    long long u, v;
    if (!(in >> u >> v)) {
      throw_error(ErrorCode::parse, "edge list: expected " + std::to_string(m) +
                                        " edges, got " + std::to_string(k));
    }
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
  try {
    return Graph::from_edges(static_cast<int>(n), edges);
  } catch (const Error& e) {
    throw_error(ErrorCode::parse, std::string("edge list: ") + e.what());
  }
}

}  // namespace azi
