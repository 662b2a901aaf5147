#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qwass/solvers.hpp"

namespace qwass {

/// Sample set JSON: total_reads, seed, schedule {beta_initial, beta_final,
/// sweeps}, and samples [{bits, energy, occurrences, is_matching,
/// is_maximal}]. Matching flags are null when no graph shape is known.
std::string to_sample_set_json(const SampleSet& samples, const std::optional<GraphShape>& shape);

struct StoredSample {
  Sample sample;
  std::optional<bool> is_matching;
  std::optional<bool> is_maximal;
};

struct StoredSampleSet {
  std::size_t total_reads = 0;
  std::uint64_t seed = 0;
  AnnealSchedule schedule;
  std::vector<StoredSample> samples;
};

/// Throws std::runtime_error on malformed input.
StoredSampleSet parse_sample_set_json(std::string_view text);

}  // namespace qwass
