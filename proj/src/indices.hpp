#pragma once

#include <optional>
#include <utility>

#include "graph.hpp"
#include "rational.hpp"

namespace azi {

// Per-edge AZI weight for a degree pair: theta(i,j) = (ij/(i+j-2))^3.
// Undefined at (1,1); memoized over [1,64]^2.
const Rational& theta(int i, int j);
Rational theta_tilde(int i, int j);  // 8 - theta(i,j)

// AZI(G) = sum over edges of theta(d_u, d_v), exact.
Rational azi_index(const Graph& g);

// Same value through the edge-class route: sum of x_{i,j} * theta(i,j).
Rational azi_from_edge_classes(const DegreeProfile& p);

// ABC(G) = sum over edges of sqrt((d_u+d_v-2)/(d_u d_v)). Floating; the
// only index here whose values are irrational.
double abc_index(const Graph& g);

// F = sum of theta_tilde over edges = 8(n+1) - AZI, for connected bicyclic
// input. Both routes are computed and must agree.
Rational f_bicyclic(const Graph& g);

// Closed-form bounds. All take scalar statistics so the same formulas
// serve both direct evaluation and the enumeration verifier.
Rational wang_lower_bound(int n, int m, int max_degree);
Rational huang_upper_bound(int m, int max_degree);
Rational wang_pendant_lower_bound(int m, int p, int max_degree,
                                  std::optional<int> min_nonpendant_degree);

struct NgInputs {
  int n = 0;
  int pendants = 0;             // p
  int complement_pendants = 0;  // p of the complement
  int alpha = 0;                // min of the two delta_1 values
  int beta = 0;                 // max of the two max degrees
};

// Two-sided bound on AZI(G) + AZI(complement of G); (lower, upper).
std::pair<Rational, Rational> ng_bounds(const NgInputs& in);

// Chemical-class bounds by order; lower sides take the true minimum over
// the admissible max-degree branches {3, 4}.
std::pair<Rational, Rational> bicyclic_bounds(int n);
std::pair<Rational, Rational> unicyclic_bounds(int n);

// Graph-level conveniences deriving the statistics via degree_profile.
Rational wang_lower_bound_for(const Graph& g);
Rational huang_upper_bound_for(const Graph& g);

struct PendantBound {
  Rational value;
  bool all_edges_pendant = false;  // m == p: the (m-p) term read as zero
};
// When every edge is pendant (stars), delta_1 is undefined and the second
// term is taken as zero; the flag records that convention was used.
PendantBound wang_pendant_lower_bound_for(const Graph& g);

}  // namespace azi
