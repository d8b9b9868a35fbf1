#include "indices.hpp"

#include <cmath>
#include <mutex>
#include <vector>

namespace azi {

namespace {

constexpr int kThetaMax = Graph::kMaxOrder;

struct ThetaTable {
  // Row-major (i-1, j-1); the (1,1) slot stays unset.
  std::vector<Rational> values;
  std::vector<bool> defined;

  ThetaTable() : values(kThetaMax * kThetaMax), defined(kThetaMax * kThetaMax, false) {
    for (int i = 1; i <= kThetaMax; ++i) {
      for (int j = i; j <= kThetaMax; ++j) {
        if (i == 1 && j == 1) continue;
        Rational w = Rational(BigInt(i) * j, BigInt(i) + j - 2).pow(3);
        at(i, j) = w;
        at(j, i) = w;
        defined[idx(i, j)] = defined[idx(j, i)] = true;
      }
    }
  }

  static size_t idx(int i, int j) {
    return static_cast<size_t>(i - 1) * kThetaMax + static_cast<size_t>(j - 1);
  }
  Rational& at(int i, int j) { return values[idx(i, j)]; }
};

const ThetaTable& theta_table() {
  static const ThetaTable table;  // immutable after construction; thread-safe init
  return table;
}

}  // namespace

const Rational& theta(int i, int j) {
  if (i < 1 || j < 1 || i > kThetaMax || j > kThetaMax) {
    throw_error(ErrorCode::invalid_argument,
                "theta degree pair out of range (" + std::to_string(i) + ", " +
                    std::to_string(j) + ")");
  }
  if (i == 1 && j == 1) {
    throw_error(ErrorCode::degenerate_edge, "theta(1,1) is undefined (zero denominator)");
  }
  return theta_table().values[ThetaTable::idx(i, j)];
}

Rational theta_tilde(int i, int j) { return Rational(8) - theta(i, j); }

Rational azi_index(const Graph& g) {
  const auto edge_list = g.edges();
  if (edge_list.empty()) {
    throw_error(ErrorCode::invalid_argument, "AZI needs at least one edge");
  }
  Rational sum;
  for (const auto& [u, v] : edge_list) {
    const int du = g.degree(u), dv = g.degree(v);
    if (du == 1 && dv == 1) {
      throw_error(ErrorCode::degenerate_edge,
                  "AZI undefined: edge (" + std::to_string(u) + ", " + std::to_string(v) +
                      ") joins two degree-1 vertices");
    }
    sum += theta(du, dv);
  }
  return sum;
}

Rational azi_from_edge_classes(const DegreeProfile& p) {
  Rational sum;
  for (const auto& [pair, count] : p.edge_class_counts) {
    sum += Rational(count) * theta(pair.first, pair.second);
  }
  return sum;
}

double abc_index(const Graph& g) {
  const auto edge_list = g.edges();
  if (edge_list.empty()) {
    throw_error(ErrorCode::invalid_argument, "ABC needs at least one edge");
  }
  double sum = 0.0;
  for (const auto& [u, v] : edge_list) {
    const double du = g.degree(u), dv = g.degree(v);
    sum += std::sqrt((du + dv - 2.0) / (du * dv));
  }
  return sum;
}

Rational f_bicyclic(const Graph& g) {
  if (!g.is_connected() || g.cyclomatic() != 2) {
    throw_error(ErrorCode::invalid_argument, "F is defined for connected bicyclic graphs");
  }
  Rational f;
  for (const auto& [u, v] : g.edges()) f += theta_tilde(g.degree(u), g.degree(v));
  const Rational check = Rational(8) * Rational(g.order() + 1) - azi_index(g);
  if (f != check) {
    // Both routes are exact; a mismatch can only mean a programming error.
    throw_error(ErrorCode::domain, "F edge sum disagrees with 8(n+1) - AZI");
  }
  return f;
}

Rational wang_lower_bound(int n, int m, int max_degree) {
  if (max_degree < 2) {
    throw_error(ErrorCode::domain, "lower bound needs max degree >= 2");
  }
  if (n < 3 || max_degree > n - 1) {
    throw_error(ErrorCode::domain, "lower bound needs n >= 3 and max degree <= n-1");
  }
  const Rational d(max_degree);
  const Rational ratio = (d / (d - 1)).pow(3);
  const Rational two_m_over_d = Rational(2 * m) / d;
  return ratio * (Rational(2 * n - m) - two_m_over_d) +
         Rational(8) * (Rational(2 * m - 2 * n) + two_m_over_d);
}

Rational huang_upper_bound(int m, int max_degree) {
  if (max_degree <= 1) {
    throw_error(ErrorCode::domain, "upper bound needs max degree >= 2");
  }
  if (m < 2) {
    throw_error(ErrorCode::domain, "upper bound needs m >= 2");
  }
  const Rational d(max_degree);
  return Rational(m) * d.pow(6) / (Rational(8) * (d - 1).pow(3));
}

Rational wang_pendant_lower_bound(int m, int p, int max_degree,
                                  std::optional<int> min_nonpendant_degree) {
  if (m < p || p < 0) throw_error(ErrorCode::domain, "need m >= p >= 0");
  if (max_degree < 2) throw_error(ErrorCode::domain, "pendant bound needs max degree >= 2");
  if (!min_nonpendant_degree) {
    throw_error(ErrorCode::domain, "pendant bound needs a defined min non-pendant degree");
  }
  const int d1 = *min_nonpendant_degree;
  if (d1 < 2) throw_error(ErrorCode::domain, "min non-pendant degree must be >= 2");
  const Rational d(max_degree);
  return Rational(p) * (d / (d - 1)).pow(3) +
         Rational(m - p) * (Rational(d1 * d1) / Rational(2 * d1 - 2)).pow(3);
}

std::pair<Rational, Rational> ng_bounds(const NgInputs& in) {
  if (in.n <= 3) {
    throw_error(ErrorCode::domain, "Nordhaus-Gaddum bounds need n >= 4");
  }
  if (in.alpha < 2 || in.beta < 2) {
    throw_error(ErrorCode::domain, "Nordhaus-Gaddum bounds need alpha, beta >= 2");
  }
  const Rational n(in.n);
  const Rational pairs = Rational(BigInt(in.n) * (in.n - 1), 2);
  const Rational a(in.alpha), b(in.beta);
  const Rational lower =
      Rational(in.pendants + in.complement_pendants) * ((n - 2) / (n - 3)).pow(3) *
          (Rational(1) - ((n - 2) / 2).pow(3)) +
      pairs * (a * a / (2 * a - 2)).pow(3);
  const Rational upper = pairs * (b * b / (2 * b - 2)).pow(3);
  return {lower, upper};
}

std::pair<Rational, Rational> bicyclic_bounds(int n) {
  if (n < 4) throw_error(ErrorCode::domain, "bicyclic graphs need n >= 4");
  Rational lower = wang_lower_bound(n, n + 1, 4);
  if (n >= 5) lower = std::min(lower, wang_lower_bound(n, n + 1, 3));
  const Rational upper = Rational(1376, 135) * Rational(n) + Rational(416, 15);
  return {lower, upper};
}

std::pair<Rational, Rational> unicyclic_bounds(int n) {
  if (n < 3) throw_error(ErrorCode::domain, "unicyclic graphs need n >= 3");
  Rational lower = wang_lower_bound(n, n, 4);
  if (n >= 4) lower = std::min(lower, wang_lower_bound(n, n, 3));
  const Rational upper = Rational(1376, 135) * Rational(n);
  return {lower, upper};
}

Rational wang_lower_bound_for(const Graph& g) {
  const auto p = degree_profile(g);
  return wang_lower_bound(g.order(), g.size(), p.max_degree);
}

Rational huang_upper_bound_for(const Graph& g) {
  return huang_upper_bound(g.size(), degree_profile(g).max_degree);
}

PendantBound wang_pendant_lower_bound_for(const Graph& g) {
  const auto p = degree_profile(g);
  const int m = g.size();
  PendantBound out;
  if (m == p.pendant_count) {
    // Every edge pendant (stars): the (m-p) term vanishes regardless of
    // the undefined delta_1.
    const Rational d(p.max_degree);
    out.value = Rational(p.pendant_count) * (d / (d - 1)).pow(3);
    out.all_edges_pendant = true;
    return out;
  }
  out.value = wang_pendant_lower_bound(m, p.pendant_count, p.max_degree,
                                       p.min_nonpendant_degree);
  return out;
}

}  // namespace azi
