#pragma once

#include <optional>
#include <string>

#include "qwass/matching_graph.hpp"
#include "qwass/solvers.hpp"

namespace qwass::cli {

/// Aggregate statistics of one sampler run.
struct SolverSummary {
  std::string method;
  std::size_t total_reads = 0;
  double min_energy = 0.0;
  std::optional<double> ground_energy;
  std::optional<double> fraction_matching;
  std::optional<double> fraction_maximal;
  std::optional<double> fraction_ground;
};

SolverSummary summarize(const SampleSet& samples, const std::optional<GraphShape>& shape,
                        std::optional<double> ground_energy);

struct OracleSummary {
  double power_cost = 0.0;
  double distance = 0.0;
};

struct RunReport {
  std::optional<std::string> x_path;
  std::optional<std::string> y_path;
  std::optional<std::string> qubo_path;
  std::optional<std::size_t> n;
  std::optional<std::size_t> m;
  double p = 2.0;
  std::string q = "2";
  std::optional<double> penalty;
  std::optional<double> b_star;
  std::optional<std::size_t> num_vars;
  std::optional<OracleSummary> oracle;
  std::optional<SolverSummary> solver;
  double oracle_seconds = 0.0;
  double solver_seconds = 0.0;
  double ground_seconds = 0.0;
};

std::string to_json(const RunReport& report);

}  // namespace qwass::cli
