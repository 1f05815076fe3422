#pragma once

// Brute-force reference implementations. Each one deliberately avoids the
// code path it is used to check.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <set>
#include <tuple>
#include <vector>

#include "med/graph_model.hpp"

namespace med::oracle {

/// Cubic Bezier coordinate in Bernstein form.
inline double bernstein(double c1, double c2, double p) {
  const double q = 1.0 - p;
  return 3.0 * q * q * p * c1 + 3.0 * q * p * p * c2 + p * p * p;
}

/// eta(rho_t) by plain bisection on the Bernstein x-coordinate.
inline double bezier_eval_bisect(double x1, double y1, double x2, double y2, double rho_t) {
  double lo = 0.0;
  double hi = 1.0;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    (bernstein(x1, x2, mid) < rho_t ? lo : hi) = mid;
  }
  return bernstein(y1, y2, 0.5 * (lo + hi));
}

/// A crossing found by the exhaustive checker, keyed by edge ids.
struct RefCrossing {
  EdgeSpec e1;
  EdgeSpec e2;
  double x, y, r1, r2;
};

/// O(m^2) scan using implicit line equations a*x + b*y = c and Cramer's rule.
inline std::vector<RefCrossing> brute_force_crossings(const GraphLayout& layout, double delta0) {
  std::vector<RefCrossing> out;
  const auto& edges = layout.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = 0; j < edges.size(); ++j) {
      if (!(edges[i] < edges[j])) continue;
      const EdgeSpec& e = edges[i];
      const EdgeSpec& f = edges[j];
      if (e.source == f.source || e.source == f.target || e.target == f.source || e.target == f.target) continue;
      const Point p = layout.node(e.source).position;
      const Point q = layout.node(e.target).position;
      const Point r = layout.node(f.source).position;
      const Point s = layout.node(f.target).position;
      const double a1 = q.y - p.y, b1 = p.x - q.x, c1 = a1 * p.x + b1 * p.y;
      const double a2 = s.y - r.y, b2 = r.x - s.x, c2 = a2 * r.x + b2 * r.y;
      const double det = a1 * b2 - a2 * b1;
      if (std::abs(det) < 1e-12) continue;
      const double x = (c1 * b2 - c2 * b1) / det;
      const double y = (a1 * c2 - a2 * c1) / det;
      auto param = [](Point a, Point b, double x, double y) {
        return std::abs(b.x - a.x) > std::abs(b.y - a.y) ? (x - a.x) / (b.x - a.x) : (y - a.y) / (b.y - a.y);
      };
      const double t1 = param(p, q, x, y);
      const double t2 = param(r, s, x, y);
      if (!(t1 > 0.0 && t1 < 1.0 && t2 > 0.0 && t2 < 1.0)) continue;
      if (std::min(t1, 1.0 - t1) <= delta0 || std::min(t2, 1.0 - t2) <= delta0) continue;
      out.push_back({e, f, x, y, t1, t2});
    }
  }
  std::sort(out.begin(), out.end(), [](const RefCrossing& a, const RefCrossing& b) {
    return std::tie(a.e1, a.e2) < std::tie(b.e1, b.e2);
  });
  return out;
}

/// Dense adjacency matrix built straight from the edge list.
inline std::vector<std::vector<bool>> adjacency_matrix(const GraphLayout& layout) {
  const std::size_t n = layout.node_count();
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (const EdgeSpec& e : layout.edges()) {
    const std::size_t a = layout.node_index(e.source);
    const std::size_t b = layout.node_index(e.target);
    adj[a][b] = adj[b][a] = true;
  }
  return adj;
}

/// Floyd-Warshall hop distances; -1 when unreachable.
inline std::vector<std::vector<int>> all_pairs_hops(const GraphLayout& layout) {
  const auto adj = adjacency_matrix(layout);
  const std::size_t n = adj.size();
  constexpr int kInf = std::numeric_limits<int>::max() / 4;
  std::vector<std::vector<int>> d(n, std::vector<int>(n, kInf));
  for (std::size_t i = 0; i < n; ++i) {
    d[i][i] = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (adj[i][j]) d[i][j] = 1;
    }
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  for (auto& row : d)
    for (int& v : row)
      if (v >= kInf) v = -1;
  return d;
}

}  // namespace med::oracle
