#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qwass/matching_graph.hpp"

namespace qwass {

/// How the penalty weight B is chosen.
enum class PenaltyMode {
  Explicit,  ///< B = value (any B >= 0; B <= B* is allowed but outside the exactness regime)
  Auto,      ///< B = B* (1 + margin), or 1 when B* == 0
  Unit,      ///< B = 1
};

struct PenaltyConfig {
  PenaltyMode mode = PenaltyMode::Auto;
  double value = 0.0;
  double margin = 0.1;

  static PenaltyConfig explicit_value(double b) { return {PenaltyMode::Explicit, b, 0.1}; }
  static PenaltyConfig automatic(double margin = 0.1) { return {PenaltyMode::Auto, 0.0, margin}; }
  static PenaltyConfig unit() { return {PenaltyMode::Unit, 1.0, 0.1}; }
};

/// Largest edge weight. Throws std::invalid_argument for an edgeless graph.
double compute_B_star(const ReducedBipartiteGraph& graph);

/// Resolves the configured B given B*. Throws for a negative explicit value
/// or a non-positive auto margin.
double resolve_penalty(const PenaltyConfig& config, double b_star);

struct QuadraticTerm {
  std::size_t i = 0;  ///< i < j
  std::size_t j = 0;
  double value = 0.0;

  friend bool operator==(const QuadraticTerm&, const QuadraticTerm&) = default;
};

struct Coupling {
  std::size_t other = 0;
  double value = 0.0;
};

/// Sparse QUBO: offset + sum_i linear[i] x_i + sum_{i<j} Q_ij x_i x_j.
///
/// Quadratic terms are kept sorted by (i, j) with no zero entries. Besides
/// the coefficients it carries the penalty B and B*. QUBOs compiled from a
/// graph also carry the graph shape and the edge labels.
class Qubo {
 public:
  Qubo(std::size_t num_vars, std::vector<double> linear, std::vector<QuadraticTerm> quadratic,
       double offset, double penalty, double b_star, std::vector<std::string> edge_labels = {},
       std::optional<GraphShape> shape = std::nullopt);

  std::size_t num_vars() const noexcept { return num_vars_; }
  std::span<const double> linear() const noexcept { return linear_; }
  double linear(std::size_t i) const { return linear_[i]; }
  std::span<const QuadraticTerm> quadratic() const noexcept { return quadratic_; }
  /// Q_ij for i != j in either order; 0 when absent.
  double coupling(std::size_t i, std::size_t j) const;
  std::span<const Coupling> neighbors(std::size_t i) const noexcept {
    return {adjacency_.data() + row_start_[i], adjacency_.data() + row_start_[i + 1]};
  }
  double offset() const noexcept { return offset_; }
  double penalty() const noexcept { return penalty_; }
  double b_star() const noexcept { return b_star_; }
  const std::vector<std::string>& edge_labels() const noexcept { return edge_labels_; }
  const std::optional<GraphShape>& shape() const noexcept { return shape_; }

  /// Throws std::invalid_argument on length mismatch.
  double energy(const BitAssignment& assignment) const;
  /// H(x with bit i flipped) - H(x).
  double flip_delta(const BitAssignment& assignment, std::size_t i) const;

  /// Smallest nonzero |coefficient| among linear and quadratic terms; 0 if all vanish.
  double min_nonzero_abs_coefficient() const noexcept;
  double max_abs_coefficient() const noexcept;

 private:
  void check_length(const BitAssignment& assignment) const;

  std::size_t num_vars_;
  std::vector<double> linear_;
  std::vector<QuadraticTerm> quadratic_;
  double offset_;
  double penalty_;
  double b_star_;
  std::vector<std::string> edge_labels_;
  std::optional<GraphShape> shape_;
  std::vector<std::size_t> row_start_;
  std::vector<Coupling> adjacency_;
};

/// Expands H = F_c + F_U + F_V over binary variables (x^2 = x).
Qubo build_qubo(const ReducedBipartiteGraph& graph, const PenaltyConfig& config);
Qubo build_qubo(const ReducedBipartiteGraph& graph, double penalty);

struct PenaltyTerms {
  double cost = 0.0;       ///< F_c
  double u_penalty = 0.0;  ///< F_U
  double v_penalty = 0.0;  ///< F_V
  double total() const noexcept { return cost + u_penalty + v_penalty; }
};

/// Direct evaluation of the three terms from vertex degrees, without the
/// expanded coefficients.
PenaltyTerms penalty_terms(const ReducedBipartiteGraph& graph, const BitAssignment& assignment,
                           double penalty);

/// |a - b| <= rel * max(1, |a|, |b|).
bool nearly_equal(double a, double b, double rel = 1e-9) noexcept;

}  // namespace qwass
