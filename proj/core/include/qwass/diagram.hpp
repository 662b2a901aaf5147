#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qwass {

/// A birth-death pair. Diagram membership requires death > birth; the
/// geometric helpers below also accept points on the diagonal.
struct DiagramPoint {
  double birth = 0.0;
  double death = 0.0;

  friend bool operator==(const DiagramPoint&, const DiagramPoint&) = default;
};

/// A point in the plane (used for diagonal projections).
struct PlanePoint {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const PlanePoint&, const PlanePoint&) = default;
};

inline PlanePoint as_plane_point(const DiagramPoint& a) { return {a.birth, a.death}; }

/// Inner norm exponent q: a real q >= 1, or infinity.
class Norm {
 public:
  explicit Norm(double q);
  static Norm infinity() noexcept;

  bool is_infinite() const noexcept { return infinite_; }
  /// Exponent value; +inf for the max norm.
  double exponent() const noexcept;
  std::string to_string() const;

  friend bool operator==(const Norm&, const Norm&) = default;

 private:
  Norm() = default;
  double q_ = 2.0;
  bool infinite_ = false;
};

/// Parses "inf"/"infinity" or a real >= 1.
Norm parse_norm(std::string_view text);

/// Raised for malformed numbers in diagram text.
class DiagramParseError : public std::runtime_error {
 public:
  DiagramParseError(std::size_t line, const std::string& what);
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Raised for points that are not strictly above the diagonal or not finite.
class DiagramValidationError : public std::runtime_error {
 public:
  DiagramValidationError(std::size_t line, const std::string& what);
  /// 1-based source line, or 0 when the point did not come from text.
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Ordered multiset of off-diagonal points. Indices are stable.
class PersistenceDiagram {
 public:
  PersistenceDiagram() = default;
  explicit PersistenceDiagram(std::vector<DiagramPoint> points);

  std::size_t size() const noexcept { return points_.size(); }
  bool empty() const noexcept { return points_.empty(); }
  const DiagramPoint& operator[](std::size_t i) const { return points_[i]; }
  std::span<const DiagramPoint> points() const noexcept { return points_; }

  auto begin() const noexcept { return points_.begin(); }
  auto end() const noexcept { return points_.end(); }

  friend bool operator==(const PersistenceDiagram&, const PersistenceDiagram&) = default;

 private:
  std::vector<DiagramPoint> points_;
};

PersistenceDiagram parse_diagram(std::istream& in);
PersistenceDiagram parse_diagram(std::string_view text);
/// Reads a diagram file. Errors are rethrown with the path prepended.
PersistenceDiagram read_diagram_file(const std::string& path);

/// One "birth death" line per point, printed with round-trip precision.
std::string format_diagram(const PersistenceDiagram& diagram);

/// Orthogonal projection onto the diagonal: ((b+d)/2, (b+d)/2).
PlanePoint diagonal_projection(const DiagramPoint& a) noexcept;

double point_distance(const PlanePoint& u, const PlanePoint& v, const Norm& q) noexcept;

/// ((death - birth) / 2^{1-1/q})^p, i.e. the p-th power of the q-distance
/// from `a` to its diagonal projection.
double diagonal_edge_weight(const DiagramPoint& a, double p, const Norm& q) noexcept;

/// p-th power of the q-distance between two diagram points.
double point_edge_weight(const DiagramPoint& a, const DiagramPoint& b, double p,
                         const Norm& q) noexcept;

}  // namespace qwass
