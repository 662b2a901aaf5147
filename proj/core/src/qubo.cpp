#include "qwass/qubo.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace qwass {

double compute_B_star(const ReducedBipartiteGraph& graph) {
  const auto edges = graph.edges();
  if (edges.empty()) throw std::invalid_argument("B* is undefined for a graph with no edges");
  double best = 0.0;
  for (const auto& e : edges) best = std::max(best, e.weight);
  return best;
}

double resolve_penalty(const PenaltyConfig& config, double b_star) {
  switch (config.mode) {
    case PenaltyMode::Explicit:
      if (!(config.value >= 0.0) || !std::isfinite(config.value)) {
        throw std::invalid_argument("penalty B must be a finite value >= 0");
      }
      return config.value;
    case PenaltyMode::Unit:
      return 1.0;
    case PenaltyMode::Auto:
      if (!(config.margin > 0.0)) throw std::invalid_argument("auto margin must be > 0");
      if (b_star == 0.0) return 1.0;
      return b_star * (1.0 + config.margin);
  }
  throw std::invalid_argument("unknown penalty mode");
}

Qubo::Qubo(std::size_t num_vars, std::vector<double> linear, std::vector<QuadraticTerm> quadratic,
           double offset, double penalty, double b_star, std::vector<std::string> edge_labels,
           std::optional<GraphShape> shape)
    : num_vars_(num_vars),
      linear_(std::move(linear)),
      offset_(offset),
      penalty_(penalty),
      b_star_(b_star),
      edge_labels_(std::move(edge_labels)),
      shape_(shape) {
  if (linear_.size() != num_vars_) {
    throw std::invalid_argument("linear coefficient count does not match num_vars");
  }
  if (!edge_labels_.empty() && edge_labels_.size() != num_vars_) {
    throw std::invalid_argument("edge label count does not match num_vars");
  }
  if (shape_ && shape_->num_edges() != num_vars_) {
    throw std::invalid_argument("graph shape does not match num_vars");
  }
  for (auto& t : quadratic) {
    if (t.i > t.j) std::swap(t.i, t.j);
    if (t.i == t.j || t.j >= num_vars_) {
      throw std::invalid_argument("quadratic term (" + std::to_string(t.i) + ", " +
                                  std::to_string(t.j) + ") is not a valid pair");
    }
  }
  std::sort(quadratic.begin(), quadratic.end(),
            [](const auto& a, const auto& b) { return a.i != b.i ? a.i < b.i : a.j < b.j; });
  for (const auto& t : quadratic) {
    if (!quadratic_.empty() && quadratic_.back().i == t.i && quadratic_.back().j == t.j) {
      throw std::invalid_argument("duplicate quadratic term (" + std::to_string(t.i) + ", " +
                                  std::to_string(t.j) + ")");
    }
    if (t.value != 0.0) quadratic_.push_back(t);
  }

  row_start_.assign(num_vars_ + 1, 0);
  for (const auto& t : quadratic_) {
    ++row_start_[t.i + 1];
    ++row_start_[t.j + 1];
  }
  for (std::size_t i = 0; i < num_vars_; ++i) row_start_[i + 1] += row_start_[i];
  adjacency_.resize(row_start_[num_vars_]);
  std::vector<std::size_t> fill(row_start_.begin(), row_start_.end() - 1);
  for (const auto& t : quadratic_) {
    adjacency_[fill[t.i]++] = {t.j, t.value};
    adjacency_[fill[t.j]++] = {t.i, t.value};
  }
}

double Qubo::coupling(std::size_t i, std::size_t j) const {
  if (i > j) std::swap(i, j);
  auto it =
      std::lower_bound(quadratic_.begin(), quadratic_.end(), std::pair{i, j},
                       [](const QuadraticTerm& t, const std::pair<std::size_t, std::size_t>& key) {
                         return t.i != key.first ? t.i < key.first : t.j < key.second;
                       });
  if (it != quadratic_.end() && it->i == i && it->j == j) return it->value;
  return 0.0;
}

void Qubo::check_length(const BitAssignment& assignment) const {
  if (assignment.size() != num_vars_) {
    throw std::invalid_argument("assignment length " + std::to_string(assignment.size()) +
                                " does not match QUBO size " + std::to_string(num_vars_));
  }
}

double Qubo::energy(const BitAssignment& assignment) const {
  check_length(assignment);
  double h = offset_;
  for (std::size_t i = 0; i < num_vars_; ++i) {
    if (assignment[i]) h += linear_[i];
  }
  for (const auto& t : quadratic_) {
    if (assignment[t.i] && assignment[t.j]) h += t.value;
  }
  return h;
}

double Qubo::flip_delta(const BitAssignment& assignment, std::size_t i) const {
  check_length(assignment);
  double field = linear_[i];
  for (const auto& c : neighbors(i)) {
    if (assignment[c.other]) field += c.value;
  }
  return assignment[i] ? -field : field;
}

double Qubo::min_nonzero_abs_coefficient() const noexcept {
  double best = std::numeric_limits<double>::infinity();
  for (double c : linear_) {
    if (c != 0.0) best = std::min(best, std::abs(c));
  }
  for (const auto& t : quadratic_) best = std::min(best, std::abs(t.value));
  return std::isinf(best) ? 0.0 : best;
}

double Qubo::max_abs_coefficient() const noexcept {
  double best = 0.0;
  for (double c : linear_) best = std::max(best, std::abs(c));
  for (const auto& t : quadratic_) best = std::max(best, std::abs(t.value));
  return best;
}

Qubo build_qubo(const ReducedBipartiteGraph& graph, const PenaltyConfig& config) {
  const double b_star = graph.num_edges() == 0 ? 0.0 : compute_B_star(graph);
  return build_qubo(graph, resolve_penalty(config, b_star));
}

Qubo build_qubo(const ReducedBipartiteGraph& graph, double penalty) {
  if (!(penalty >= 0.0) || !std::isfinite(penalty)) {
    throw std::invalid_argument("penalty B must be a finite value >= 0");
  }
  const GraphShape& shape = graph.shape();
  const std::size_t n = shape.n();
  const std::size_t m = shape.m();
  const std::size_t num_vars = shape.num_edges();
  const double b_star = num_vars == 0 ? 0.0 : compute_B_star(graph);

  std::vector<double> linear(num_vars);
  for (std::size_t e = 0; e < num_vars; ++e) {
    const int constrained = int(shape.u_constrained(e)) + int(shape.v_constrained(e));
    linear[e] = graph.weight(e) - penalty * constrained;
  }

  // (1 - sum x)^2 = 1 - sum x + 2 sum_{e<f} x_e x_f over the edges at each
  // off-diagonal vertex.
  std::vector<QuadraticTerm> quadratic;
  if (penalty != 0.0) {
    auto add_clique = [&](const std::vector<std::size_t>& incident) {
      for (std::size_t a = 0; a < incident.size(); ++a) {
        for (std::size_t b = a + 1; b < incident.size(); ++b) {
          quadratic.push_back({incident[a], incident[b], 2.0 * penalty});
        }
      }
    };
    std::vector<std::size_t> incident;
    for (std::size_t i = 0; i < n; ++i) {
      incident.clear();
      for (std::size_t j = 0; j < m; ++j) incident.push_back(shape.point_edge(i, j));
      incident.push_back(shape.x_diagonal_edge(i));
      add_clique(incident);
    }
    for (std::size_t j = 0; j < m; ++j) {
      incident.clear();
      for (std::size_t i = 0; i < n; ++i) incident.push_back(shape.point_edge(i, j));
      incident.push_back(shape.y_diagonal_edge(j));
      add_clique(incident);
    }
  }

  return Qubo(num_vars, std::move(linear), std::move(quadratic), penalty * double(n + m), penalty,
              b_star, shape.edge_labels(), shape);
}

PenaltyTerms penalty_terms(const ReducedBipartiteGraph& graph, const BitAssignment& assignment,
                           double penalty) {
  const auto subset = decode(assignment, graph.shape());
  const auto deg = vertex_degrees(subset, graph.shape());
  PenaltyTerms terms;
  terms.cost = matching_cost(subset, graph);
  for (std::size_t i = 0; i < graph.n(); ++i) {
    const double r = 1.0 - double(deg.u[i]);
    terms.u_penalty += penalty * r * r;
  }
  for (std::size_t j = 0; j < graph.m(); ++j) {
    const double r = 1.0 - double(deg.v[j]);
    terms.v_penalty += penalty * r * r;
  }
  return terms;
}

bool nearly_equal(double a, double b, double rel) noexcept {
  const double scale = std::max({1.0, std::abs(a), std::abs(b)});
  return std::abs(a - b) <= rel * scale;
}

}  // namespace qwass
