#include "histogram.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>

namespace qwass::cli {

namespace {

constexpr std::size_t kChartHeight = 12;
constexpr std::size_t kMaxChartWidth = 200;

struct BinDetail {
  std::size_t count = 0;
  std::size_t matching = 0;
  std::size_t maximal = 0;
  bool ground = false;
};

std::string fmt(const char* pattern, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, pattern, v);
  return buf;
}

}  // namespace

double auto_bin_width(const SampleSet& samples) {
  if (samples.samples.empty()) return 1.0;
  const double lo = samples.samples.front().energy;
  const double hi = samples.samples.back().energy;
  const double w = (hi - lo) / 50.0;
  return w > 0.0 ? w : 1.0;
}

std::string render_histogram(const SampleSet& samples, double bin_width,
                             const std::optional<GraphShape>& shape,
                             std::optional<double> ground_energy) {
  const auto bins = energy_histogram(samples, bin_width);
  std::string out;
  if (bins.empty()) return "(no samples)\n";

  std::map<long long, BinDetail> details;
  for (const auto& s : samples.samples) {
    auto& d = details[static_cast<long long>(std::floor(s.energy / bin_width))];
    d.count += s.occurrences;
    if (shape) {
      const auto c = classify(s, *shape, ground_energy);
      if (c.is_matching) d.matching += s.occurrences;
      if (c.is_maximal) d.maximal += s.occurrences;
    }
    if (ground_energy && at_ground(s.energy, *ground_energy)) d.ground = true;
  }

  // One column per bin between the lowest and highest occupied bins.
  const long long first = details.begin()->first;
  const long long last = details.rbegin()->first;
  const std::size_t width = static_cast<std::size_t>(last - first + 1);
  std::size_t peak = 0;
  for (const auto& [k, d] : details) peak = std::max(peak, d.count);

  out += "energy histogram: " + std::to_string(samples.total_reads) + " reads, bin width " +
         fmt("%.6g", bin_width) + "\n";
  if (width > kMaxChartWidth) {
    out += "(chart omitted: " + std::to_string(width) + " bins exceed the display width)\n";
  } else {
    for (std::size_t row = kChartHeight; row >= 1; --row) {
      const double threshold = double(peak) * (double(row) - 0.5) / double(kChartHeight);
      std::string label = row == kChartHeight ? std::to_string(peak) : "";
      char buf[16];
      std::snprintf(buf, sizeof buf, "%8s |", label.c_str());
      out += buf;
      for (std::size_t c = 0; c < width; ++c) {
        auto it = details.find(first + static_cast<long long>(c));
        const bool filled = it != details.end() && double(it->second.count) >= threshold;
        out += filled ? (it->second.ground ? '@' : '#') : ' ';
      }
      out += "\n";
    }
    out += "       0 +" + std::string(width, '-') + "\n";
    out += "          " + fmt("%-.6g", double(first) * bin_width) + " .. " +
           fmt("%.6g", double(last + 1) * bin_width) + " (energy)\n";
    out += ground_energy ? "          '@' marks the ground-energy bin (" +
                               fmt("%.10g", *ground_energy) + ")\n"
                         : "          ground energy unknown\n";
  }

  out += "\n     bin_lower      count   matching    maximal  ground\n";
  for (const auto& [k, d] : details) {
    char buf[128];
    const std::string matching = shape ? std::to_string(d.matching) : "-";
    const std::string maximal = shape ? std::to_string(d.maximal) : "-";
    const char* ground = !ground_energy ? "unknown" : (d.ground ? "*" : "");
    std::snprintf(buf, sizeof buf, "%14.6f %10zu %10s %10s  %s\n", double(k) * bin_width, d.count,
                  matching.c_str(), maximal.c_str(), ground);
    out += buf;
  }
  return out;
}

}  // namespace qwass::cli
