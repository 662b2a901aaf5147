#include "qwass/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace qwass {

CostMatrix::CostMatrix(std::size_t size, std::size_t n, std::size_t m)
    : size_(size), n_(n), m_(m), data_(size * size, 0.0) {}

std::string CostMatrix::row_label(std::size_t row) const {
  return row < n_ ? "x" + std::to_string(row) : "diag" + std::to_string(row - n_);
}

std::string CostMatrix::col_label(std::size_t col) const {
  return col < m_ ? "y" + std::to_string(col) : "diag" + std::to_string(col - m_);
}

CostMatrix CostMatrix::from_rows(const std::vector<std::vector<double>>& rows) {
  CostMatrix c(rows.size(), rows.size(), rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size()) throw std::invalid_argument("cost matrix must be square");
    for (std::size_t j = 0; j < rows.size(); ++j) c(i, j) = rows[i][j];
  }
  return c;
}

CostMatrix build_cost_matrix(std::span<const DiagramPoint> x, std::span<const DiagramPoint> y,
                             double p, const Norm& q) {
  if (!(p >= 1.0)) throw std::invalid_argument("Wasserstein exponent p must be >= 1");
  const std::size_t n = x.size();
  const std::size_t m = y.size();
  CostMatrix c(n + m, n, m);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) c(i, j) = point_edge_weight(x[i], y[j], p, q);
    const double to_diag = diagonal_edge_weight(x[i], p, q);
    for (std::size_t j = m; j < n + m; ++j) c(i, j) = to_diag;
  }
  for (std::size_t j = 0; j < m; ++j) {
    const double to_diag = diagonal_edge_weight(y[j], p, q);
    for (std::size_t i = n; i < n + m; ++i) c(i, j) = to_diag;
  }
  return c;
}

OptimalMatching min_cost_assignment(const CostMatrix& matrix) {
  const std::size_t size = matrix.size();
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t j = 0; j < size; ++j) {
      if (!std::isfinite(matrix(i, j))) throw std::invalid_argument("cost entries must be finite");
    }
  }
  // Potentials u (rows), v (columns); column 0 is a sentinel and col_match[j]
  // is the 1-based row assigned to column j.
  constexpr double kInf = std::numeric_limits<double>::infinity();
  std::vector<double> u(size + 1, 0.0), v(size + 1, 0.0);
  std::vector<std::size_t> col_match(size + 1, 0), way(size + 1, 0);
  for (std::size_t row = 1; row <= size; ++row) {
    col_match[0] = row;
    std::size_t col0 = 0;
    std::vector<double> min_slack(size + 1, kInf);
    std::vector<char> used(size + 1, 0);
    do {
      used[col0] = 1;
      const std::size_t r0 = col_match[col0];
      double delta = kInf;
      std::size_t col1 = 0;
      for (std::size_t j = 1; j <= size; ++j) {
        if (used[j]) continue;
        const double slack = matrix(r0 - 1, j - 1) - u[r0] - v[j];
        if (slack < min_slack[j]) {
          min_slack[j] = slack;
          way[j] = col0;
        }
        if (min_slack[j] < delta) {
          delta = min_slack[j];
          col1 = j;
        }
      }
      for (std::size_t j = 0; j <= size; ++j) {
        if (used[j]) {
          u[col_match[j]] += delta;
          v[j] -= delta;
        } else {
          min_slack[j] -= delta;
        }
      }
      col0 = col1;
    } while (col_match[col0] != 0);
    do {
      const std::size_t col1 = way[col0];
      col_match[col0] = col_match[col1];
      col0 = col1;
    } while (col0 != 0);
  }

  OptimalMatching result;
  std::vector<std::size_t> row_to_col(size, 0);
  for (std::size_t j = 1; j <= size; ++j) row_to_col[col_match[j] - 1] = j - 1;
  result.pairs.reserve(size);
  std::vector<double> matched;
  matched.reserve(size);
  for (std::size_t i = 0; i < size; ++i) {
    result.pairs.emplace_back(i, row_to_col[i]);
    matched.push_back(matrix(i, row_to_col[i]));
  }
  std::sort(matched.begin(), matched.end());
  for (double c : matched) result.total_cost += c;
  return result;
}

WassersteinResult wasserstein_distance(std::span<const DiagramPoint> x,
                                       std::span<const DiagramPoint> y, double p, const Norm& q) {
  WassersteinResult r;
  r.matching = min_cost_assignment(build_cost_matrix(x, y, p, q));
  r.power_cost = r.matching.total_cost;
  r.distance = std::pow(r.power_cost, 1.0 / p);
  return r;
}

}  // namespace qwass
