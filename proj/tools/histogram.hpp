#pragma once

#include <optional>
#include <string>

#include "qwass/solvers.hpp"

namespace qwass::cli {

/// (max - min) / 50, or 1 when every sample has the same energy.
double auto_bin_width(const SampleSet& samples);

/// Vertical bar chart (energy left to right, counts as bar heights) followed
/// by a per-bin table with matching/maximal counts and a ground marker.
std::string render_histogram(const SampleSet& samples, double bin_width,
                             const std::optional<GraphShape>& shape,
                             std::optional<double> ground_energy);

}  // namespace qwass::cli
