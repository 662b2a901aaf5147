#pragma once

// Test-only reference computations. Nothing here calls into the library's
// graph indexing, predicates, or QUBO expansion, so the suites can compare
// the two routes.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "qwass/diagram.hpp"

namespace qwass::testing {

/// Endpoint slots of one edge, derived from first principles: U slots are
/// x_0..x_{n-1}, diag(y_0)..; V slots are y_0..y_{m-1}, diag(x_0)...
struct RefEdge {
  std::size_t u = 0;
  std::size_t v = 0;
  double weight = 0.0;
};

inline double ref_pow_dist(const DiagramPoint& a, const DiagramPoint& b, double p) {
  // q = 2 only.
  const double d = std::sqrt((a.birth - b.birth) * (a.birth - b.birth) +
                             (a.death - b.death) * (a.death - b.death));
  return std::pow(d, p);
}

inline double ref_diag(const DiagramPoint& a, double p) {
  const double mid = 0.5 * (a.birth + a.death);
  return ref_pow_dist(a, DiagramPoint{mid, mid}, p);
}

/// Edges of the reduced graph listed in the canonical order, q = 2.
inline std::vector<RefEdge> ref_edges(const std::vector<DiagramPoint>& x,
                                      const std::vector<DiagramPoint>& y, double p) {
  const std::size_t n = x.size(), m = y.size();
  std::vector<RefEdge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) edges.push_back({i, j, ref_pow_dist(x[i], y[j], p)});
    edges.push_back({i, m + i, ref_diag(x[i], p)});
  }
  for (std::size_t j = 0; j < m; ++j) edges.push_back({n + j, j, ref_diag(y[j], p)});
  return edges;
}

struct RefDegrees {
  std::vector<int> u, v;
};

inline RefDegrees ref_degrees(const std::vector<RefEdge>& edges, std::size_t sides,
                              std::uint64_t mask) {
  RefDegrees d{std::vector<int>(sides, 0), std::vector<int>(sides, 0)};
  for (std::size_t e = 0; e < edges.size(); ++e) {
    if ((mask >> e) & 1U) {
      ++d.u[edges[e].u];
      ++d.v[edges[e].v];
    }
  }
  return d;
}

inline bool ref_is_matching(const RefDegrees& d) {
  return std::all_of(d.u.begin(), d.u.end(), [](int k) { return k <= 1; }) &&
         std::all_of(d.v.begin(), d.v.end(), [](int k) { return k <= 1; });
}

inline bool ref_is_maximal(const std::vector<RefEdge>& edges, const RefDegrees& d) {
  if (!ref_is_matching(d)) return false;
  for (const auto& e : edges) {
    if (d.u[e.u] == 0 && d.v[e.v] == 0) return false;
  }
  return true;
}

/// H evaluated straight from the definition: sum of selected weights plus
/// B (1 - deg)^2 over every off-diagonal vertex.
inline double ref_energy(const std::vector<RefEdge>& edges, std::size_t n, std::size_t m,
                         double penalty, std::uint64_t mask) {
  const auto d = ref_degrees(edges, n + m, mask);
  double h = 0.0;
  for (std::size_t e = 0; e < edges.size(); ++e) {
    if ((mask >> e) & 1U) h += edges[e].weight;
  }
  for (std::size_t i = 0; i < n; ++i) h += penalty * (1.0 - d.u[i]) * (1.0 - d.u[i]);
  for (std::size_t j = 0; j < m; ++j) h += penalty * (1.0 - d.v[j]) * (1.0 - d.v[j]);
  return h;
}

/// All maximal matchings (as bit masks) by exhaustive subset enumeration.
inline std::vector<std::uint64_t> ref_maximal_matchings(const std::vector<RefEdge>& edges,
                                                        std::size_t sides) {
  std::vector<std::uint64_t> out;
  const std::uint64_t count = std::uint64_t{1} << edges.size();
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    if (ref_is_maximal(edges, ref_degrees(edges, sides, mask))) out.push_back(mask);
  }
  return out;
}

inline double ref_mask_cost(const std::vector<RefEdge>& edges, std::uint64_t mask) {
  double c = 0.0;
  for (std::size_t e = 0; e < edges.size(); ++e) {
    if ((mask >> e) & 1U) c += edges[e].weight;
  }
  return c;
}

/// Minimum-cost perfect assignment by trying every permutation.
inline double ref_assignment_cost(const std::vector<std::vector<double>>& cost) {
  std::vector<std::size_t> perm(cost.size());
  std::iota(perm.begin(), perm.end(), 0);
  double best = INFINITY;
  do {
    double total = 0.0;
    for (std::size_t i = 0; i < perm.size(); ++i) total += cost[i][perm[i]];
    best = std::min(best, total);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return cost.empty() ? 0.0 : best;
}

/// Wasserstein power cost (q = 2) via the dense (n+m) x (n+m) matrix and
/// permutation search; only for n + m <= 9.
inline double ref_power_cost(const std::vector<DiagramPoint>& x, const std::vector<DiagramPoint>& y,
                             double p) {
  const std::size_t n = x.size(), m = y.size(), s = n + m;
  std::vector<std::vector<double>> c(s, std::vector<double>(s, 0.0));
  for (std::size_t i = 0; i < s; ++i) {
    for (std::size_t j = 0; j < s; ++j) {
      if (i < n && j < m)
        c[i][j] = ref_pow_dist(x[i], y[j], p);
      else if (i < n)
        c[i][j] = ref_diag(x[i], p);
      else if (j < m)
        c[i][j] = ref_diag(y[j], p);
    }
  }
  return ref_assignment_cost(c);
}

/// Diagram with `count` points, births in [0, 2), persistence in (0.05, 2].
inline std::vector<DiagramPoint> random_points(std::mt19937_64& rng, std::size_t count) {
  std::uniform_real_distribution<double> birth(0.0, 2.0);
  std::uniform_real_distribution<double> life(0.05, 2.0);
  std::vector<DiagramPoint> pts;
  for (std::size_t k = 0; k < count; ++k) {
    const double b = birth(rng);
    pts.push_back({b, b + life(rng)});
  }
  return pts;
}

inline std::size_t random_size(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

inline bool rel_close(double a, double b, double rel) {
  return std::abs(a - b) <= rel * std::max({1.0, std::abs(a), std::abs(b)});
}

}  // namespace qwass::testing
