#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "qwass/matching_graph.hpp"
#include "qwass/qubo.hpp"

namespace qwass {

/// Largest QUBO the exhaustive search accepts.
inline constexpr std::size_t kMaxBruteForceVars = 26;

struct ExactResult {
  double minimum = 0.0;
  /// Every assignment within 1e-9 (relative) of the minimum, sorted lexicographically.
  std::vector<BitAssignment> minimizers;
};

/// Exhaustive scan of all 2^M assignments. `threads` == 0 picks the hardware
/// concurrency; the result does not depend on it. Throws std::invalid_argument
/// when M exceeds kMaxBruteForceVars.
ExactResult brute_force_minimize(const Qubo& qubo, unsigned threads = 0);

/// Inverse-temperature ramp for the Metropolis sampler.
struct AnnealSchedule {
  double beta_initial = 0.1;
  double beta_final = 10.0;
  std::size_t sweeps = 1000;

  /// beta_initial = 0.1 / B*, beta_final = 10 / (smallest nonzero |coefficient|),
  /// 1000 sweeps. Falls back to coefficient magnitudes when B* == 0.
  static AnnealSchedule defaults_for(const Qubo& qubo);
  /// Inverse temperature at sweep k (geometric interpolation).
  double beta_at(std::size_t sweep) const;
  void validate() const;

  friend bool operator==(const AnnealSchedule&, const AnnealSchedule&) = default;
};

struct Sample {
  BitAssignment assignment;
  double energy = 0.0;
  std::size_t occurrences = 0;

  friend bool operator==(const Sample&, const Sample&) = default;
};

/// Distinct assignments sorted by (energy, assignment).
struct SampleSet {
  std::vector<Sample> samples;
  std::size_t total_reads = 0;
  std::uint64_t seed = 0;
  AnnealSchedule schedule;

  friend bool operator==(const SampleSet&, const SampleSet&) = default;
};

/// Runs `num_reads` independent single-flip Metropolis chains, each from a
/// uniformly random start. Chain r draws from a generator seeded by
/// (seed, r), so the result is identical for any `threads` value.
SampleSet simulated_anneal(const Qubo& qubo, const AnnealSchedule& schedule, std::size_t num_reads,
                           std::uint64_t seed, unsigned threads = 0);

/// Groups raw reads by assignment and orders them by (energy, assignment).
SampleSet aggregate_reads(const Qubo& qubo, const std::vector<BitAssignment>& reads,
                          std::uint64_t seed, const AnnealSchedule& schedule);

struct SampleClassification {
  bool is_matching = false;
  bool is_maximal = false;
  bool is_ground = false;

  friend bool operator==(const SampleClassification&, const SampleClassification&) = default;
};

SampleClassification classify(const Sample& sample, const GraphShape& shape,
                              std::optional<double> known_minimum);

struct HistogramBin {
  double lower = 0.0;
  std::size_t occurrences = 0;

  friend bool operator==(const HistogramBin&, const HistogramBin&) = default;
};

/// Occurrence counts in half-open bins [k w, (k+1) w); empty bins omitted.
std::vector<HistogramBin> energy_histogram(const SampleSet& samples, double bin_width);

/// Ground-state tolerance: 1e-9 * max(1, |minimum|).
bool at_ground(double energy, double minimum) noexcept;

}  // namespace qwass
