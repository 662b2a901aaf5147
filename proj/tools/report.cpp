#include "report.hpp"

#include <json.hpp>

namespace qwass::cli {

namespace {

template <typename T>
nlohmann::ordered_json or_null(const std::optional<T>& v) {
  if (v) return *v;
  return nullptr;
}

}  // namespace

SolverSummary summarize(const SampleSet& samples, const std::optional<GraphShape>& shape,
                        std::optional<double> ground_energy) {
  SolverSummary s;
  s.method = "simulated_annealing";
  s.total_reads = samples.total_reads;
  s.ground_energy = ground_energy;
  s.min_energy = samples.samples.empty() ? 0.0 : samples.samples.front().energy;
  std::size_t matching = 0, maximal = 0, ground = 0;
  for (const auto& sample : samples.samples) {
    if (shape) {
      const auto c = classify(sample, *shape, ground_energy);
      if (c.is_matching) matching += sample.occurrences;
      if (c.is_maximal) maximal += sample.occurrences;
    }
    if (ground_energy && at_ground(sample.energy, *ground_energy)) ground += sample.occurrences;
  }
  const double reads = samples.total_reads == 0 ? 1.0 : double(samples.total_reads);
  if (shape) {
    s.fraction_matching = double(matching) / reads;
    s.fraction_maximal = double(maximal) / reads;
  }
  if (ground_energy) s.fraction_ground = double(ground) / reads;
  return s;
}

std::string to_json(const RunReport& r) {
  nlohmann::ordered_json j;
  j["inputs"] = {{"x", or_null(r.x_path)},
                 {"y", or_null(r.y_path)},
                 {"qubo", or_null(r.qubo_path)},
                 {"n", or_null(r.n)},
                 {"m", or_null(r.m)},
                 {"p", r.p},
                 {"q", r.q}};
  j["B"] = or_null(r.penalty);
  j["B_star"] = or_null(r.b_star);
  if (r.penalty && r.b_star) {
    j["B_at_most_B_star"] = *r.penalty <= *r.b_star;
  } else {
    j["B_at_most_B_star"] = nullptr;
  }
  j["M"] = or_null(r.num_vars);
  if (r.oracle) {
    j["oracle"] = {{"power_cost", r.oracle->power_cost}, {"distance", r.oracle->distance}};
  } else {
    j["oracle"] = nullptr;
  }
  if (r.solver) {
    const auto& s = *r.solver;
    j["solver"] = {{"method", s.method},
                   {"total_reads", s.total_reads},
                   {"min_energy", s.min_energy},
                   {"ground_energy", or_null(s.ground_energy)},
                   {"fraction_matching", or_null(s.fraction_matching)},
                   {"fraction_maximal", or_null(s.fraction_maximal)},
                   {"fraction_ground", or_null(s.fraction_ground)}};
  } else {
    j["solver"] = nullptr;
  }
  j["timing"] = {{"oracle_seconds", r.oracle_seconds},
                 {"solver_seconds", r.solver_seconds},
                 {"ground_seconds", r.ground_seconds}};
  return j.dump(2) + "\n";
}

}  // namespace qwass::cli
