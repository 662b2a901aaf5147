#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qwass/diagram.hpp"

namespace qwass {

/// Dense square cost matrix for the complete diagram matching problem.
/// Rows are X's points followed by m diagonal slots; columns are Y's points
/// followed by n diagonal slots.
class CostMatrix {
 public:
  CostMatrix(std::size_t size, std::size_t n, std::size_t m);

  std::size_t size() const noexcept { return size_; }
  std::size_t n() const noexcept { return n_; }
  std::size_t m() const noexcept { return m_; }
  double& operator()(std::size_t row, std::size_t col) { return data_[row * size_ + col]; }
  double operator()(std::size_t row, std::size_t col) const { return data_[row * size_ + col]; }
  bool row_is_diagonal(std::size_t row) const noexcept { return row >= n_; }
  bool col_is_diagonal(std::size_t col) const noexcept { return col >= m_; }
  std::string row_label(std::size_t row) const;
  std::string col_label(std::size_t col) const;

  /// An arbitrary square matrix with no diagram labels (n = size, m = size).
  static CostMatrix from_rows(const std::vector<std::vector<double>>& rows);

 private:
  std::size_t size_;
  std::size_t n_;
  std::size_t m_;
  std::vector<double> data_;
};

/// Points may lie on the diagonal (birth == death); such points contribute
/// only zero-cost entries.
CostMatrix build_cost_matrix(std::span<const DiagramPoint> x, std::span<const DiagramPoint> y,
                             double p, const Norm& q);
inline CostMatrix build_cost_matrix(const PersistenceDiagram& x, const PersistenceDiagram& y,
                                    double p, const Norm& q) {
  return build_cost_matrix(x.points(), y.points(), p, q);
}

struct OptimalMatching {
  /// (row, column) for every row, in row order.
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  double total_cost = 0.0;
};

/// Exact min-cost perfect assignment (shortest augmenting path Hungarian
/// method, O(N^3)). Entries must be finite.
OptimalMatching min_cost_assignment(const CostMatrix& matrix);

struct WassersteinResult {
  double distance = 0.0;
  double power_cost = 0.0;  ///< distance^p
  OptimalMatching matching;
};

WassersteinResult wasserstein_distance(std::span<const DiagramPoint> x,
                                       std::span<const DiagramPoint> y, double p, const Norm& q);
inline WassersteinResult wasserstein_distance(const PersistenceDiagram& x,
                                              const PersistenceDiagram& y, double p,
                                              const Norm& q) {
  return wasserstein_distance(x.points(), y.points(), p, q);
}

}  // namespace qwass
