#include "qwass/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <limits>
#include <sstream>

namespace qwass {

namespace {

std::string with_line(std::size_t line, const std::string& what) {
  if (line == 0) return what;
  return "line " + std::to_string(line) + ": " + what;
}

void validate_point(const DiagramPoint& a, std::size_t line) {
  if (!std::isfinite(a.birth) || !std::isfinite(a.death)) {
    throw DiagramValidationError(line, "point coordinates must be finite");
  }
  if (!(a.death > a.birth)) {
    char buf[128];
    std::snprintf(buf, sizeof buf, "point (%.17g, %.17g) is not above the diagonal", a.birth,
                  a.death);
    throw DiagramValidationError(line, buf);
  }
}

bool is_blank(char c) { return c == ' ' || c == '\t' || c == '\r'; }

double parse_number(std::string_view token, std::size_t line) {
  if (token.empty()) throw DiagramParseError(line, "missing number");
  if (token.front() == '+') token.remove_prefix(1);
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw DiagramParseError(line, "malformed number '" + std::string(token) + "'");
  }
  return value;
}

// Splits a data line into fields: runs of spaces/tabs, or a single comma
// optionally surrounded by blanks.
std::vector<std::string_view> split_fields(std::string_view s, std::size_t line) {
  std::vector<std::string_view> fields;
  std::size_t i = 0;
  while (i < s.size() && is_blank(s[i])) ++i;
  while (i < s.size()) {
    std::size_t start = i;
    while (i < s.size() && !is_blank(s[i]) && s[i] != ',') ++i;
    fields.push_back(s.substr(start, i - start));
    std::size_t commas = 0;
    while (i < s.size() && (is_blank(s[i]) || s[i] == ',')) {
      if (s[i] == ',') ++commas;
      ++i;
    }
    if (commas > 1) throw DiagramParseError(line, "empty field between separators");
    if (commas == 1 && i == s.size()) throw DiagramParseError(line, "trailing separator");
  }
  return fields;
}

}  // namespace

Norm::Norm(double q) : q_(q) {
  if (std::isinf(q) && q > 0) {
    infinite_ = true;
    q_ = std::numeric_limits<double>::infinity();
    return;
  }
  if (!(q >= 1.0) || !std::isfinite(q)) {
    throw std::invalid_argument("norm exponent q must be >= 1 or infinity");
  }
}

Norm Norm::infinity() noexcept {
  Norm n;
  n.infinite_ = true;
  n.q_ = std::numeric_limits<double>::infinity();
  return n;
}

double Norm::exponent() const noexcept { return q_; }

std::string Norm::to_string() const {
  if (infinite_) return "inf";
  std::ostringstream os;
  os.precision(17);
  os << q_;
  return os.str();
}

Norm parse_norm(std::string_view text) {
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "inf" || lower == "infinity") return Norm::infinity();
  double q = 0.0;
  auto [ptr, ec] = std::from_chars(lower.data(), lower.data() + lower.size(), q);
  if (ec != std::errc{} || ptr != lower.data() + lower.size()) {
    throw std::invalid_argument("invalid norm '" + std::string(text) + "'");
  }
  return Norm(q);
}

DiagramParseError::DiagramParseError(std::size_t line, const std::string& what)
    : std::runtime_error(with_line(line, what)), line_(line) {}

DiagramValidationError::DiagramValidationError(std::size_t line, const std::string& what)
    : std::runtime_error(with_line(line, what)), line_(line) {}

PersistenceDiagram::PersistenceDiagram(std::vector<DiagramPoint> points)
    : points_(std::move(points)) {
  for (const auto& a : points_) validate_point(a, 0);
}

PersistenceDiagram parse_diagram(std::istream& in) {
  std::vector<DiagramPoint> points;
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::string_view s(raw);
    if (auto hash = s.find('#'); hash != std::string_view::npos) s = s.substr(0, hash);
    if (std::all_of(s.begin(), s.end(), [](char c) { return is_blank(c); })) continue;

    auto fields = split_fields(s, line);
    if (fields.size() != 2) {
      throw DiagramParseError(line, "expected 2 fields, found " + std::to_string(fields.size()));
    }
    DiagramPoint a{parse_number(fields[0], line), parse_number(fields[1], line)};
    validate_point(a, line);
    points.push_back(a);
  }
  return PersistenceDiagram(std::move(points));
}

PersistenceDiagram parse_diagram(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_diagram(in);
}

PersistenceDiagram read_diagram_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error(path + ": cannot open file");
  try {
    return parse_diagram(in);
  } catch (const DiagramParseError& e) {
    throw DiagramParseError(e.line(), path + ": " + e.what());
  } catch (const DiagramValidationError& e) {
    throw DiagramValidationError(e.line(), path + ": " + e.what());
  }
}

std::string format_diagram(const PersistenceDiagram& diagram) {
  std::string out;
  char buf[80];
  for (const auto& a : diagram) {
    std::snprintf(buf, sizeof buf, "%.17g %.17g\n", a.birth, a.death);
    out += buf;
  }
  return out;
}

PlanePoint diagonal_projection(const DiagramPoint& a) noexcept {
  const double mid = (a.birth + a.death) / 2.0;
  return {mid, mid};
}

double point_distance(const PlanePoint& u, const PlanePoint& v, const Norm& q) noexcept {
  const double dx = std::abs(u.x - v.x);
  const double dy = std::abs(u.y - v.y);
  if (q.is_infinite()) return std::max(dx, dy);
  const double e = q.exponent();
  if (e == 1.0) return dx + dy;
  if (e == 2.0) return std::hypot(dx, dy);
  const double big = std::max(dx, dy);
  if (big == 0.0) return 0.0;
  // Scale by the larger component to keep pow() in range.
  return big * std::pow(std::pow(dx / big, e) + std::pow(dy / big, e), 1.0 / e);
}

double diagonal_edge_weight(const DiagramPoint& a, double p, const Norm& q) noexcept {
  const double span = a.death - a.birth;
  // (span / 2^{1-1/q})^p, with the power of two folded into one exponent.
  const double halving = q.is_infinite() ? p : p * (1.0 - 1.0 / q.exponent());
  return std::pow(span, p) / std::pow(2.0, halving);
}

double point_edge_weight(const DiagramPoint& a, const DiagramPoint& b, double p,
                         const Norm& q) noexcept {
  if (!q.is_infinite() && q.exponent() == p) {
    return std::pow(std::abs(a.birth - b.birth), p) + std::pow(std::abs(a.death - b.death), p);
  }
  return std::pow(point_distance(as_plane_point(a), as_plane_point(b), q), p);
}

}  // namespace qwass
