#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qwass/diagram.hpp"

namespace qwass {

enum class Side : std::uint8_t { U, V };
enum class VertexKind : std::uint8_t { OffDiagonal, Diagonal };

/// A vertex of the reduced graph. On the U side, off-diagonal vertices are
/// points of X and diagonal vertices are projections of Y's points; the V
/// side mirrors this.
struct VertexId {
  Side side = Side::U;
  VertexKind kind = VertexKind::OffDiagonal;
  std::size_t index = 0;

  friend bool operator==(const VertexId&, const VertexId&) = default;
};

struct Edge {
  VertexId u;
  VertexId v;
  double weight = 0.0;
};

/// Element of {0,1}^M aligned with a graph's canonical edge order.
struct BitAssignment {
  std::vector<std::uint8_t> bits;

  BitAssignment() = default;
  explicit BitAssignment(std::size_t size) : bits(size, 0) {}
  explicit BitAssignment(std::vector<std::uint8_t> b) : bits(std::move(b)) {}

  std::size_t size() const noexcept { return bits.size(); }
  bool operator[](std::size_t i) const { return bits[i] != 0; }
  void set(std::size_t i, bool value) { bits[i] = value ? 1 : 0; }
  void flip(std::size_t i) { bits[i] ^= 1; }

  /// "0"/"1" characters in variable order.
  std::string to_string() const;
  static BitAssignment from_string(std::string_view text);

  friend bool operator==(const BitAssignment&, const BitAssignment&) = default;
  friend auto operator<=>(const BitAssignment& a, const BitAssignment& b) {
    return a.bits <=> b.bits;
  }
};

/// Sorted, duplicate-free list of edge indices.
using EdgeSubset = std::vector<std::size_t>;

/// Topology of the reduced graph for diagrams of sizes n and m. Edge order:
/// for each x_i, (x_i, y_0) ... (x_i, y_{m-1}), (x_i, diag_i); then
/// (diag_j, y_j) for each j.
///
/// Vertices are numbered per side in [0, n+m): U slots are x_0..x_{n-1}
/// followed by diag(y_0)..diag(y_{m-1}); V slots are y_0..y_{m-1} followed by
/// diag(x_0)..diag(x_{n-1}).
class GraphShape {
 public:
  GraphShape() = default;
  GraphShape(std::size_t n, std::size_t m) : n_(n), m_(m) {}

  std::size_t n() const noexcept { return n_; }
  std::size_t m() const noexcept { return m_; }
  std::size_t num_edges() const noexcept { return n_ * m_ + n_ + m_; }
  std::size_t vertices_per_side() const noexcept { return n_ + m_; }

  std::size_t point_edge(std::size_t i, std::size_t j) const noexcept { return i * (m_ + 1) + j; }
  std::size_t x_diagonal_edge(std::size_t i) const noexcept { return i * (m_ + 1) + m_; }
  std::size_t y_diagonal_edge(std::size_t j) const noexcept { return n_ * (m_ + 1) + j; }

  VertexId u_vertex(std::size_t edge) const;
  VertexId v_vertex(std::size_t edge) const;
  std::size_t u_slot(std::size_t edge) const;
  std::size_t v_slot(std::size_t edge) const;
  /// Off-diagonal endpoints carry the one-edge constraint.
  bool u_constrained(std::size_t edge) const { return u_slot(edge) < n_; }
  bool v_constrained(std::size_t edge) const { return v_slot(edge) < m_; }

  /// e.g. "(x0,y1)", "(x0,dx0)", "(dy1,y1)".
  std::string edge_label(std::size_t edge) const;
  std::vector<std::string> edge_labels() const;

  friend bool operator==(const GraphShape&, const GraphShape&) = default;

 private:
  std::size_t n_ = 0;
  std::size_t m_ = 0;
};

/// The reduced bipartite graph: complete between off-diagonal points, plus
/// one edge from every point to its own diagonal projection.
class ReducedBipartiteGraph {
 public:
  ReducedBipartiteGraph(PersistenceDiagram x, PersistenceDiagram y, double p, Norm q);

  const PersistenceDiagram& x() const noexcept { return x_; }
  const PersistenceDiagram& y() const noexcept { return y_; }
  double p() const noexcept { return p_; }
  const Norm& q() const noexcept { return q_; }
  const GraphShape& shape() const noexcept { return shape_; }
  std::size_t n() const noexcept { return shape_.n(); }
  std::size_t m() const noexcept { return shape_.m(); }

  std::span<const Edge> edges() const noexcept { return edges_; }
  std::size_t num_edges() const noexcept { return edges_.size(); }
  double weight(std::size_t edge) const { return edges_[edge].weight; }

 private:
  PersistenceDiagram x_;
  PersistenceDiagram y_;
  double p_;
  Norm q_;
  GraphShape shape_;
  std::vector<Edge> edges_;
};

ReducedBipartiteGraph build_reduced_graph(const PersistenceDiagram& x, const PersistenceDiagram& y,
                                          double p, const Norm& q);

/// Throws std::invalid_argument on length mismatch.
EdgeSubset decode(const BitAssignment& assignment, const GraphShape& shape);
BitAssignment encode(const EdgeSubset& subset, const GraphShape& shape);

bool is_matching(const EdgeSubset& subset, const GraphShape& shape);
bool is_maximal_matching(const EdgeSubset& subset, const GraphShape& shape);
double matching_cost(const EdgeSubset& subset, const ReducedBipartiteGraph& graph);

/// Number of selected edges at every U and V slot.
struct VertexDegrees {
  std::vector<std::size_t> u;
  std::vector<std::size_t> v;
};
VertexDegrees vertex_degrees(const EdgeSubset& subset, const GraphShape& shape);

}  // namespace qwass
