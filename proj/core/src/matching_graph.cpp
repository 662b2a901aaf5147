#include "qwass/matching_graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace qwass {

std::string BitAssignment::to_string() const {
  std::string s(bits.size(), '0');
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i]) s[i] = '1';
  }
  return s;
}

BitAssignment BitAssignment::from_string(std::string_view text) {
  BitAssignment a(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '1') {
      a.bits[i] = 1;
    } else if (text[i] != '0') {
      throw std::invalid_argument("bit string may contain only '0' and '1'");
    }
  }
  return a;
}

VertexId GraphShape::u_vertex(std::size_t edge) const {
  const std::size_t slot = u_slot(edge);
  if (slot < n_) return {Side::U, VertexKind::OffDiagonal, slot};
  return {Side::U, VertexKind::Diagonal, slot - n_};
}

VertexId GraphShape::v_vertex(std::size_t edge) const {
  const std::size_t slot = v_slot(edge);
  if (slot < m_) return {Side::V, VertexKind::OffDiagonal, slot};
  return {Side::V, VertexKind::Diagonal, slot - m_};
}

std::size_t GraphShape::u_slot(std::size_t edge) const {
  if (edge >= num_edges()) throw std::out_of_range("edge index out of range");
  const std::size_t block = n_ * (m_ + 1);
  if (edge < block) return edge / (m_ + 1);
  return n_ + (edge - block);
}

std::size_t GraphShape::v_slot(std::size_t edge) const {
  if (edge >= num_edges()) throw std::out_of_range("edge index out of range");
  const std::size_t block = n_ * (m_ + 1);
  if (edge < block) {
    const std::size_t i = edge / (m_ + 1);
    const std::size_t j = edge % (m_ + 1);
    return j < m_ ? j : m_ + i;
  }
  return edge - block;
}

std::string GraphShape::edge_label(std::size_t edge) const {
  const VertexId u = u_vertex(edge);
  const VertexId v = v_vertex(edge);
  std::string label = "(";
  label += (u.kind == VertexKind::OffDiagonal ? "x" : "dy") + std::to_string(u.index);
  label += ",";
  label += (v.kind == VertexKind::OffDiagonal ? "y" : "dx") + std::to_string(v.index);
  label += ")";
  return label;
}

std::vector<std::string> GraphShape::edge_labels() const {
  std::vector<std::string> labels;
  labels.reserve(num_edges());
  for (std::size_t e = 0; e < num_edges(); ++e) labels.push_back(edge_label(e));
  return labels;
}

ReducedBipartiteGraph::ReducedBipartiteGraph(PersistenceDiagram x, PersistenceDiagram y, double p,
                                             Norm q)
    : x_(std::move(x)), y_(std::move(y)), p_(p), q_(q), shape_(x_.size(), y_.size()) {
  if (!(p_ >= 1.0)) throw std::invalid_argument("Wasserstein exponent p must be >= 1");
  const std::size_t n = x_.size();
  const std::size_t m = y_.size();
  edges_.reserve(shape_.num_edges());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      edges_.push_back({{Side::U, VertexKind::OffDiagonal, i},
                        {Side::V, VertexKind::OffDiagonal, j},
                        point_edge_weight(x_[i], y_[j], p_, q_)});
    }
    edges_.push_back({{Side::U, VertexKind::OffDiagonal, i},
                      {Side::V, VertexKind::Diagonal, i},
                      diagonal_edge_weight(x_[i], p_, q_)});
  }
  for (std::size_t j = 0; j < m; ++j) {
    edges_.push_back({{Side::U, VertexKind::Diagonal, j},
                      {Side::V, VertexKind::OffDiagonal, j},
                      diagonal_edge_weight(y_[j], p_, q_)});
  }
}

ReducedBipartiteGraph build_reduced_graph(const PersistenceDiagram& x, const PersistenceDiagram& y,
                                          double p, const Norm& q) {
  return ReducedBipartiteGraph(x, y, p, q);
}

EdgeSubset decode(const BitAssignment& assignment, const GraphShape& shape) {
  if (assignment.size() != shape.num_edges()) {
    throw std::invalid_argument("assignment length " + std::to_string(assignment.size()) +
                                " does not match edge count " + std::to_string(shape.num_edges()));
  }
  EdgeSubset subset;
  for (std::size_t e = 0; e < assignment.size(); ++e) {
    if (assignment[e]) subset.push_back(e);
  }
  return subset;
}

BitAssignment encode(const EdgeSubset& subset, const GraphShape& shape) {
  BitAssignment a(shape.num_edges());
  for (std::size_t e : subset) {
    if (e >= a.size()) throw std::out_of_range("edge index out of range");
    a.set(e, true);
  }
  return a;
}

VertexDegrees vertex_degrees(const EdgeSubset& subset, const GraphShape& shape) {
  VertexDegrees deg{std::vector<std::size_t>(shape.vertices_per_side(), 0),
                    std::vector<std::size_t>(shape.vertices_per_side(), 0)};
  for (std::size_t e : subset) {
    ++deg.u[shape.u_slot(e)];
    ++deg.v[shape.v_slot(e)];
  }
  return deg;
}

bool is_matching(const EdgeSubset& subset, const GraphShape& shape) {
  const auto deg = vertex_degrees(subset, shape);
  auto at_most_one = [](std::size_t d) { return d <= 1; };
  return std::all_of(deg.u.begin(), deg.u.end(), at_most_one) &&
         std::all_of(deg.v.begin(), deg.v.end(), at_most_one);
}

bool is_maximal_matching(const EdgeSubset& subset, const GraphShape& shape) {
  const auto deg = vertex_degrees(subset, shape);
  for (std::size_t d : deg.u) {
    if (d > 1) return false;
  }
  for (std::size_t d : deg.v) {
    if (d > 1) return false;
  }
  for (std::size_t e = 0; e < shape.num_edges(); ++e) {
    if (deg.u[shape.u_slot(e)] == 0 && deg.v[shape.v_slot(e)] == 0) return false;
  }
  return true;
}

double matching_cost(const EdgeSubset& subset, const ReducedBipartiteGraph& graph) {
  double total = 0.0;
  for (std::size_t e : subset) total += graph.weight(e);
  return total;
}

}  // namespace qwass
