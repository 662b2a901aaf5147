#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include "qwass/qubo.hpp"

namespace qwass {

class QuboFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// qbsolv-style text:
///
///   c offset <value>
///   c B <value>
///   c B_star <value>
///   c shape <n> <m>          (only for graph-derived QUBOs)
///   c edge <index> <label>   (one per variable, when labels exist)
///   p qubo 0 <maxNode> <nNodes> <nCouplers>
///   <i> <i> <linear>         (nNodes lines)
///   <i> <j> <quadratic>      (nCouplers lines, i < j)
///
/// Values are written with 17 significant digits.
std::string to_qubo_text(const Qubo& qubo);
Qubo parse_qubo_text(std::istream& in);
Qubo parse_qubo_text(std::string_view text);

/// JSON with num_vars, offset, B, B_star, linear (index -> value),
/// quadratic ([i, j, value] triples), edge_labels, and n/m when known.
std::string to_qubo_json(const Qubo& qubo);
Qubo parse_qubo_json(std::string_view text);

/// Chooses the parser from the first non-blank character ('{' means JSON).
Qubo read_qubo_file(const std::string& path);

}  // namespace qwass
