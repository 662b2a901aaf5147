#include "qwass/sample_io.hpp"

#include <json.hpp>
#include <stdexcept>

namespace qwass {

std::string to_sample_set_json(const SampleSet& samples, const std::optional<GraphShape>& shape) {
  nlohmann::ordered_json j;
  j["total_reads"] = samples.total_reads;
  j["seed"] = samples.seed;
  j["schedule"] = {{"beta_initial", samples.schedule.beta_initial},
                   {"beta_final", samples.schedule.beta_final},
                   {"sweeps", samples.schedule.sweeps}};
  auto& arr = j["samples"] = nlohmann::ordered_json::array();
  for (const auto& s : samples.samples) {
    nlohmann::ordered_json entry;
    entry["bits"] = s.assignment.to_string();
    entry["energy"] = s.energy;
    entry["occurrences"] = s.occurrences;
    if (shape) {
      const auto c = classify(s, *shape, std::nullopt);
      entry["is_matching"] = c.is_matching;
      entry["is_maximal"] = c.is_maximal;
    } else {
      entry["is_matching"] = nullptr;
      entry["is_maximal"] = nullptr;
    }
    arr.push_back(std::move(entry));
  }
  return j.dump(2) + "\n";
}

StoredSampleSet parse_sample_set_json(std::string_view text) {
  try {
    const auto j = nlohmann::json::parse(text);
    StoredSampleSet out;
    out.total_reads = j.at("total_reads").get<std::size_t>();
    out.seed = j.at("seed").get<std::uint64_t>();
    const auto& sch = j.at("schedule");
    out.schedule = {sch.at("beta_initial").get<double>(), sch.at("beta_final").get<double>(),
                    sch.at("sweeps").get<std::size_t>()};
    for (const auto& s : j.at("samples")) {
      StoredSample stored;
      stored.sample.assignment = BitAssignment::from_string(s.at("bits").get<std::string>());
      stored.sample.energy = s.at("energy").get<double>();
      stored.sample.occurrences = s.at("occurrences").get<std::size_t>();
      if (s.contains("is_matching") && !s["is_matching"].is_null()) {
        stored.is_matching = s["is_matching"].get<bool>();
      }
      if (s.contains("is_maximal") && !s["is_maximal"].is_null()) {
        stored.is_maximal = s["is_maximal"].get<bool>();
      }
      out.samples.push_back(std::move(stored));
    }
    return out;
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(std::string("sample json: ") + e.what());
  }
}

}  // namespace qwass
