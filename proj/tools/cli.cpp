#include "cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <json.hpp>
#include <optional>
#include <sstream>

#include "histogram.hpp"
#include "qwass/diagram.hpp"
#include "qwass/matching_graph.hpp"
#include "qwass/oracle.hpp"
#include "qwass/qubo.hpp"
#include "qwass/qubo_io.hpp"
#include "qwass/sample_io.hpp"
#include "qwass/solvers.hpp"
#include "report.hpp"

namespace qwass::cli {

namespace {

/// Unreadable or malformed input file.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError(path + ": cannot open file");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error(path + ": cannot write file");
  os << content;
}

PersistenceDiagram load_diagram(const std::string& path) {
  try {
    return read_diagram_file(path);
  } catch (const DiagramParseError&) {
    throw;
  } catch (const DiagramValidationError&) {
    throw;
  } catch (const std::exception& e) {
    throw InputError(e.what());
  }
}

Qubo load_qubo(const std::string& path) {
  try {
    return read_qubo_file(path);
  } catch (const std::exception& e) {
    throw InputError(e.what());
  }
}

Norm parse_q(const std::string& text) {
  try {
    return parse_norm(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--q: ") + e.what());
  }
}

void check_p(double p) {
  if (!(p >= 1.0) || !std::isfinite(p)) throw UsageError("--p must be a finite value >= 1");
}

std::string qubo_export(const Qubo& qubo, const std::string& format) {
  if (format == "json") return to_qubo_json(qubo);
  if (format == "qubo") return to_qubo_text(qubo);
  throw UsageError("--format must be 'qubo' or 'json'");
}

std::string format_for_path(const std::string& path) {
  return path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0 ? "json" : "qubo";
}

struct DiagramInputs {
  std::string x_path;
  std::string y_path;
  double p = 2.0;
  std::string q = "2";
};

struct SamplerFlags {
  std::size_t reads = 1000;
  std::uint64_t seed = 0;
  std::optional<std::size_t> sweeps;
  std::optional<double> beta0;
  std::optional<double> beta1;
  std::optional<double> bin_width;
  unsigned threads = 0;
};

void add_sampler_flags(CLI::App* cmd, SamplerFlags& f) {
  cmd->add_option("--reads", f.reads, "Number of annealing reads")->check(CLI::PositiveNumber);
  cmd->add_option("--seed", f.seed, "64-bit RNG seed");
  cmd->add_option("--sweeps", f.sweeps, "Sweeps per read (default 1000)");
  cmd->add_option("--beta0", f.beta0, "Initial inverse temperature (default 0.1/B*)");
  cmd->add_option("--beta1", f.beta1,
                  "Final inverse temperature (default 10/smallest |coefficient|)");
  cmd->add_option("--bins", f.bin_width, "Histogram bin width (default (max-min)/50)");
  cmd->add_option("--threads", f.threads, "Worker threads, 0 = hardware concurrency");
}

AnnealSchedule schedule_for(const Qubo& qubo, const SamplerFlags& f) {
  AnnealSchedule s = AnnealSchedule::defaults_for(qubo);
  if (f.sweeps) s.sweeps = *f.sweeps;
  if (f.beta0) s.beta_initial = *f.beta0;
  if (f.beta1) s.beta_final = *f.beta1;
  if (f.beta0 && !f.beta1) s.beta_final = std::max(s.beta_final, s.beta_initial);
  try {
    s.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  return s;
}

std::optional<double> ground_energy_of(const Qubo& qubo, unsigned threads) {
  if (qubo.num_vars() > kMaxBruteForceVars) return std::nullopt;
  return brute_force_minimize(qubo, threads).minimum;
}

// ---------------------------------------------------------------- distance

int cmd_distance(const DiagramInputs& in, bool json, std::ostream& out) {
  check_p(in.p);
  const Norm q = parse_q(in.q);
  const auto x = load_diagram(in.x_path);
  const auto y = load_diagram(in.y_path);
  const auto start = Clock::now();
  const auto result = wasserstein_distance(x, y, in.p, q);
  const double elapsed = seconds_since(start);

  if (json) {
    RunReport report;
    report.x_path = in.x_path;
    report.y_path = in.y_path;
    report.n = x.size();
    report.m = y.size();
    report.p = in.p;
    report.q = q.to_string();
    report.num_vars = x.size() * y.size() + x.size() + y.size();
    report.oracle = OracleSummary{result.power_cost, result.distance};
    report.oracle_seconds = elapsed;
    out << to_json(report);
    return kOk;
  }
  out << "n " << x.size() << "  m " << y.size() << "  p " << num(in.p) << "  q " << q.to_string()
      << "\n";
  out << "power_cost " << num(result.power_cost) << "\n";
  out << "distance " << num(result.distance) << "\n";
  const auto matrix = build_cost_matrix(x, y, in.p, q);
  for (const auto& [row, col] : result.matching.pairs) {
    if (matrix.row_is_diagonal(row) && matrix.col_is_diagonal(col)) continue;
    out << "  " << matrix.row_label(row) << " -> " << matrix.col_label(col) << "  "
        << num(matrix(row, col)) << "\n";
  }
  return kOk;
}

// ---------------------------------------------------------------- qubo

int cmd_qubo(const DiagramInputs& in, const std::string& b_token, double margin,
             const std::string& format, const std::string& output, std::ostream& out) {
  check_p(in.p);
  const Norm q = parse_q(in.q);
  const PenaltySpec spec = parse_penalty_spec(b_token);
  if (!(margin > 0.0)) throw UsageError("--margin must be > 0");
  if (format != "qubo" && format != "json") throw UsageError("--format must be 'qubo' or 'json'");
  const auto graph = build_reduced_graph(load_diagram(in.x_path), load_diagram(in.y_path), in.p, q);
  const double b_star = graph.num_edges() == 0 ? 0.0 : compute_B_star(graph);
  const Qubo qubo = build_qubo(graph, spec.resolve(b_star, margin));
  const std::string text = qubo_export(qubo, format);
  if (output.empty() || output == "-") {
    out << text;
  } else {
    write_text_file(output, text);
    out << "wrote " << qubo.num_vars() << "-variable QUBO (B " << num(qubo.penalty()) << ", B* "
        << num(qubo.b_star()) << ") to " << output << "\n";
  }
  return kOk;
}

// ---------------------------------------------------------------- sample

struct SampleArgs {
  DiagramInputs diagrams;
  std::string qubo_path;
  std::string b_token = "auto";
  double margin = 0.1;
  SamplerFlags sampler;
  bool json = false;
  std::string samples_out;
  std::string qubo_out;
  std::string report_out;
};

int cmd_sample(const SampleArgs& a, std::ostream& out) {
  RunReport report;
  std::optional<Qubo> qubo;
  const bool from_diagrams = !a.diagrams.x_path.empty();
  if (from_diagrams == !a.qubo_path.empty()) {
    throw UsageError("sample needs either two diagram files or --qubo <file>");
  }
  if (from_diagrams) {
    if (a.diagrams.y_path.empty()) throw UsageError("sample needs two diagram files");
    check_p(a.diagrams.p);
    const Norm q = parse_q(a.diagrams.q);
    const PenaltySpec spec = parse_penalty_spec(a.b_token);
    if (!(a.margin > 0.0)) throw UsageError("--margin must be > 0");
    const auto x = load_diagram(a.diagrams.x_path);
    const auto y = load_diagram(a.diagrams.y_path);
    const auto graph = build_reduced_graph(x, y, a.diagrams.p, q);
    const double b_star = graph.num_edges() == 0 ? 0.0 : compute_B_star(graph);
    qubo.emplace(build_qubo(graph, spec.resolve(b_star, a.margin)));
    report.x_path = a.diagrams.x_path;
    report.y_path = a.diagrams.y_path;
    report.n = x.size();
    report.m = y.size();
    report.p = a.diagrams.p;
    report.q = q.to_string();
    const auto start = Clock::now();
    const auto w = wasserstein_distance(x, y, a.diagrams.p, q);
    report.oracle_seconds = seconds_since(start);
    report.oracle = OracleSummary{w.power_cost, w.distance};
  } else {
    qubo.emplace(load_qubo(a.qubo_path));
    report.qubo_path = a.qubo_path;
    if (qubo->shape()) {
      report.n = qubo->shape()->n();
      report.m = qubo->shape()->m();
    }
  }
  report.penalty = qubo->penalty();
  report.b_star = qubo->b_star();
  report.num_vars = qubo->num_vars();

  const AnnealSchedule schedule = schedule_for(*qubo, a.sampler);
  auto start = Clock::now();
  const SampleSet samples =
      simulated_anneal(*qubo, schedule, a.sampler.reads, a.sampler.seed, a.sampler.threads);
  report.solver_seconds = seconds_since(start);
  start = Clock::now();
  const auto ground = ground_energy_of(*qubo, a.sampler.threads);
  report.ground_seconds = seconds_since(start);
  report.solver = summarize(samples, qubo->shape(), ground);

  const std::string samples_json = to_sample_set_json(samples, qubo->shape());
  if (!a.samples_out.empty()) write_text_file(a.samples_out, samples_json);
  if (!a.qubo_out.empty()) {
    write_text_file(a.qubo_out, qubo_export(*qubo, format_for_path(a.qubo_out)));
  }
  if (!a.report_out.empty()) write_text_file(a.report_out, to_json(report));

  if (a.json) {
    out << samples_json;
    return kOk;
  }
  const auto& s = *report.solver;
  out << "M " << qubo->num_vars() << "  B " << num(qubo->penalty()) << "  B* "
      << num(qubo->b_star())
      << (qubo->penalty() > qubo->b_star() ? "  (B > B*)\n"
                                           : "  (B <= B*: minimizers need not be matchings)\n");
  if (report.oracle) {
    out << "oracle power_cost " << num(report.oracle->power_cost) << "  distance "
        << num(report.oracle->distance) << "\n";
  }
  out << "ground energy "
      << (ground ? num(*ground) + " (exhaustive search)" : std::string("unknown (M > 26)")) << "\n";
  out << "reads " << samples.total_reads << "  seed " << samples.seed << "  sweeps "
      << schedule.sweeps << "  beta " << num(schedule.beta_initial) << " -> "
      << num(schedule.beta_final) << "\n";
  out << "min energy " << num(s.min_energy);
  if (s.fraction_matching) out << "  matching " << num(*s.fraction_matching);
  if (s.fraction_maximal) out << "  maximal " << num(*s.fraction_maximal);
  out << "  ground " << (s.fraction_ground ? num(*s.fraction_ground) : std::string("unknown"))
      << "\n\n";
  const double width = a.sampler.bin_width ? *a.sampler.bin_width : auto_bin_width(samples);
  if (!(width > 0.0)) throw UsageError("--bins must be > 0");
  out << render_histogram(samples, width, qubo->shape(), ground);
  return kOk;
}

// ---------------------------------------------------------------- sweep

struct SweepArgs {
  DiagramInputs diagrams;
  std::string b_list = "presets";
  double margin = 0.1;
  SamplerFlags sampler;
  bool json = false;
};

int cmd_sweep(const SweepArgs& a, std::ostream& out) {
  check_p(a.diagrams.p);
  const Norm q = parse_q(a.diagrams.q);
  const auto specs = parse_penalty_list(a.b_list);
  if (!(a.margin > 0.0)) throw UsageError("--margin must be > 0");
  const auto x = load_diagram(a.diagrams.x_path);
  const auto y = load_diagram(a.diagrams.y_path);
  const auto graph = build_reduced_graph(x, y, a.diagrams.p, q);
  const double b_star = graph.num_edges() == 0 ? 0.0 : compute_B_star(graph);
  const auto oracle = wasserstein_distance(x, y, a.diagrams.p, q);

  nlohmann::ordered_json runs = nlohmann::ordered_json::array();
  std::ostringstream table;
  table << "   B_label              B  regime        matching   maximal    ground   min_energy"
           "   ground_energy\n";
  for (const auto& spec : specs) {
    const Qubo qubo = build_qubo(graph, spec.resolve(b_star, a.margin));
    const AnnealSchedule schedule = schedule_for(qubo, a.sampler);
    const SampleSet samples =
        simulated_anneal(qubo, schedule, a.sampler.reads, a.sampler.seed, a.sampler.threads);
    const auto ground = ground_energy_of(qubo, a.sampler.threads);
    const auto s = summarize(samples, qubo.shape(), ground);
    const bool outside = qubo.penalty() <= b_star;

    nlohmann::ordered_json row;
    row["label"] = spec.label;
    row["B"] = qubo.penalty();
    row["outside_exact_regime"] = outside;
    row["fraction_matching"] = *s.fraction_matching;
    row["fraction_maximal"] = *s.fraction_maximal;
    row["fraction_ground"] =
        s.fraction_ground ? nlohmann::ordered_json(*s.fraction_ground) : nullptr;
    row["min_energy"] = s.min_energy;
    row["ground_energy"] = ground ? nlohmann::ordered_json(*ground) : nullptr;
    row["schedule"] = {{"beta_initial", schedule.beta_initial},
                       {"beta_final", schedule.beta_final},
                       {"sweeps", schedule.sweeps}};
    runs.push_back(row);

    char buf[256];
    std::snprintf(buf, sizeof buf, "%10s %14.6g  %-10s %9.4f %9.4f %9s %12.6g %15s\n",
                  spec.label.c_str(), qubo.penalty(), outside ? "B<=B*" : "B>B*",
                  *s.fraction_matching, *s.fraction_maximal,
                  s.fraction_ground ? num(*s.fraction_ground).c_str() : "unknown", s.min_energy,
                  ground ? num(*ground).c_str() : "unknown");
    table << buf;
  }

  if (a.json) {
    nlohmann::ordered_json j;
    j["inputs"] = {{"x", a.diagrams.x_path}, {"y", a.diagrams.y_path}, {"n", x.size()},
                   {"m", y.size()},          {"p", a.diagrams.p},      {"q", q.to_string()}};
    j["M"] = graph.num_edges();
    j["B_star"] = b_star;
    j["oracle"] = {{"power_cost", oracle.power_cost}, {"distance", oracle.distance}};
    j["reads"] = a.sampler.reads;
    j["seed"] = a.sampler.seed;
    j["runs"] = runs;
    out << j.dump(2) << "\n";
    return kOk;
  }
  out << "n " << x.size() << "  m " << y.size() << "  M " << graph.num_edges() << "  B* "
      << num(b_star) << "  oracle power_cost " << num(oracle.power_cost) << "\n";
  out << "reads " << a.sampler.reads << "  seed " << a.sampler.seed << "\n\n";
  out << table.str();
  out << "\nrows marked B<=B* are outside the regime where minimizers are guaranteed to be\n"
         "minimum-cost maximal matchings\n";
  return kOk;
}

// ---------------------------------------------------------------- verify

struct VerifyArgs {
  std::string qubo_path;
  std::string samples_path;
  std::string report_path;
  unsigned threads = 0;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
  const Qubo qubo = load_qubo(a.qubo_path);
  StoredSampleSet stored;
  try {
    stored = parse_sample_set_json(read_text_file(a.samples_path));
  } catch (const InputError&) {
    throw;
  } catch (const std::exception& e) {
    throw InputError(a.samples_path + ": " + e.what());
  }

  std::size_t checks = 0;
  std::vector<std::string> failures;
  auto expect = [&](bool ok, const std::string& what) {
    ++checks;
    if (!ok) failures.push_back(what);
  };

  SampleSet samples;
  samples.total_reads = stored.total_reads;
  samples.seed = stored.seed;
  samples.schedule = stored.schedule;
  std::size_t occurrences = 0;
  for (std::size_t k = 0; k < stored.samples.size(); ++k) {
    const auto& s = stored.samples[k];
    const std::string where = "sample " + std::to_string(k) + ": ";
    occurrences += s.sample.occurrences;
    expect(s.sample.occurrences > 0, where + "occurrence count must be positive");
    if (s.sample.assignment.size() != qubo.num_vars()) {
      expect(false, where + "bit string length " + std::to_string(s.sample.assignment.size()) +
                        " != " + std::to_string(qubo.num_vars()));
      continue;
    }
    const double e = qubo.energy(s.sample.assignment);
    expect(nearly_equal(e, s.sample.energy),
           where + "stored energy " + num(s.sample.energy) + " but QUBO gives " + num(e));
    if (k > 0) {
      const auto& prev = stored.samples[k - 1].sample;
      const bool ordered = prev.energy < s.sample.energy || (prev.energy == s.sample.energy &&
                                                             prev.assignment < s.sample.assignment);
      expect(ordered, where + "samples not sorted by (energy, bits)");
    }
    if (qubo.shape()) {
      const auto c = classify(s.sample, *qubo.shape(), std::nullopt);
      if (s.is_matching) expect(*s.is_matching == c.is_matching, where + "is_matching flag wrong");
      if (s.is_maximal) expect(*s.is_maximal == c.is_maximal, where + "is_maximal flag wrong");
    }
    samples.samples.push_back(s.sample);
  }
  expect(occurrences == stored.total_reads, "occurrences sum to " + std::to_string(occurrences) +
                                                " but total_reads is " +
                                                std::to_string(stored.total_reads));

  if (!a.report_path.empty()) {
    nlohmann::json r;
    try {
      r = nlohmann::json::parse(read_text_file(a.report_path));
    } catch (const nlohmann::json::exception& e) {
      throw InputError(a.report_path + ": " + e.what());
    }
    auto same = [&](const nlohmann::json& v, double expected, const std::string& what) {
      expect(v.is_number() && nearly_equal(v.get<double>(), expected),
             "report " + what + " does not match (expected " + num(expected) + ")");
    };
    same(r.value("M", nlohmann::json()), double(qubo.num_vars()), "M");
    same(r.value("B", nlohmann::json()), qubo.penalty(), "B");
    same(r.value("B_star", nlohmann::json()), qubo.b_star(), "B_star");
    const auto& solver = r.value("solver", nlohmann::json());
    if (solver.is_object()) {
      std::optional<double> ground;
      if (!solver.value("ground_energy", nlohmann::json()).is_null()) {
        ground = ground_energy_of(qubo, a.threads);
        if (ground) same(solver["ground_energy"], *ground, "solver.ground_energy");
      }
      const auto recomputed = summarize(samples, qubo.shape(), ground);
      same(solver.value("total_reads", nlohmann::json()), double(stored.total_reads),
           "solver.total_reads");
      same(solver.value("min_energy", nlohmann::json()), recomputed.min_energy,
           "solver.min_energy");
      if (recomputed.fraction_matching) {
        same(solver.value("fraction_matching", nlohmann::json()), *recomputed.fraction_matching,
             "solver.fraction_matching");
        same(solver.value("fraction_maximal", nlohmann::json()), *recomputed.fraction_maximal,
             "solver.fraction_maximal");
      }
      if (recomputed.fraction_ground) {
        same(solver.value("fraction_ground", nlohmann::json()), *recomputed.fraction_ground,
             "solver.fraction_ground");
      }
    }
  }

  for (const auto& f : failures) out << "MISMATCH " << f << "\n";
  out << "verified " << stored.samples.size() << " samples, " << checks << " checks, "
      << failures.size() << " failures\n";
  return failures.empty() ? kOk : kVerificationFailed;
}

void add_diagram_inputs(CLI::App* cmd, DiagramInputs& in, bool required) {
  auto* x = cmd->add_option("x", in.x_path, "Diagram file X (birth death per line)");
  auto* y = cmd->add_option("y", in.y_path, "Diagram file Y");
  if (required) {
    x->required();
    y->required();
  }
  cmd->add_option("--p", in.p, "Wasserstein exponent p >= 1")->capture_default_str();
  cmd->add_option("--q", in.q, "Inner norm q >= 1 or 'inf'")->capture_default_str();
}

}  // namespace

double PenaltySpec::resolve(double b_star, double margin) const {
  switch (kind) {
    case Kind::Value:
      return value;
    case Kind::BStar:
      return b_star;
    case Kind::BStarPlusMargin:
      return resolve_penalty(PenaltyConfig::automatic(margin), b_star);
  }
  return value;
}

PenaltySpec parse_penalty_spec(std::string_view token) {
  std::string t(token);
  t.erase(0, t.find_first_not_of(" \t"));
  t.erase(t.find_last_not_of(" \t") + 1);
  if (t == "auto" || t == "Bstar+eps" || t == "B*+eps") {
    return {PenaltySpec::Kind::BStarPlusMargin, 0.0, t};
  }
  if (t == "Bstar" || t == "B*") return {PenaltySpec::Kind::BStar, 0.0, t};
  double v = 0.0;
  std::size_t used = 0;
  try {
    v = std::stod(t, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (t.empty() || used != t.size()) {
    throw UsageError("invalid B '" + t + "': expected a number, 'auto', 'Bstar' or 'Bstar+eps'");
  }
  if (!(v >= 0.0) || !std::isfinite(v)) throw UsageError("B must be a finite value >= 0");
  return {PenaltySpec::Kind::Value, v, t};
}

std::vector<PenaltySpec> parse_penalty_list(std::string_view text) {
  std::vector<PenaltySpec> specs;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = std::min(text.find(',', start), text.size());
    std::string_view token = text.substr(start, comma - start);
    const auto first = token.find_first_not_of(" \t");
    if (first != std::string_view::npos) {
      token = token.substr(first);
      token = token.substr(0, token.find_last_not_of(" \t") + 1);
      if (token == "presets") {
        for (const char* preset : {"1", "Bstar", "Bstar+eps"}) {
          specs.push_back(parse_penalty_spec(preset));
        }
      } else {
        specs.push_back(parse_penalty_spec(token));
      }
    }
    start = comma + 1;
  }
  if (specs.empty()) throw UsageError("--B-list is empty");
  return specs;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Wasserstein distance between persistence diagrams via a QUBO formulation", "qwass"};
  app.require_subcommand(1);

  DiagramInputs distance_in;
  bool distance_json = false;
  auto* distance = app.add_subcommand("distance", "Exact distance by min-cost assignment");
  add_diagram_inputs(distance, distance_in, true);
  distance->add_flag("--json", distance_json, "Print a JSON run report");

  DiagramInputs qubo_in;
  std::string qubo_b = "auto", qubo_format = "qubo", qubo_output;
  double qubo_margin = 0.1;
  auto* qubo = app.add_subcommand("qubo", "Export the matching QUBO");
  add_diagram_inputs(qubo, qubo_in, true);
  qubo->add_option("--B", qubo_b, "Penalty: number, 'auto' (B*(1+margin)), or 'Bstar'")
      ->capture_default_str();
  qubo->add_option("--margin", qubo_margin, "Relative margin for --B auto")->capture_default_str();
  qubo->add_option("--format", qubo_format, "Export format: qubo or json")->capture_default_str();
  qubo->add_option("-o,--output", qubo_output, "Output file (default stdout)");

  SampleArgs sample_args;
  auto* sample = app.add_subcommand("sample", "Sample the QUBO by simulated annealing");
  add_diagram_inputs(sample, sample_args.diagrams, false);
  sample->add_option("--qubo", sample_args.qubo_path, "Read the QUBO from a .qubo or .json file");
  sample->add_option("--B", sample_args.b_token, "Penalty when building from diagrams")
      ->capture_default_str();
  sample->add_option("--margin", sample_args.margin, "Relative margin for --B auto")
      ->capture_default_str();
  add_sampler_flags(sample, sample_args.sampler);
  sample->add_flag("--json", sample_args.json, "Print the sample set JSON instead of a histogram");
  sample->add_option("--samples-out", sample_args.samples_out, "Write the sample set JSON here");
  sample->add_option("--qubo-out", sample_args.qubo_out,
                     "Write the sampled QUBO here (.json selects JSON)");
  sample->add_option("--report", sample_args.report_out, "Write the JSON run report here");

  SweepArgs sweep_args;
  auto* sweep = app.add_subcommand("sweep", "Sample at several penalty values");
  add_diagram_inputs(sweep, sweep_args.diagrams, true);
  sweep
      ->add_option("--B-list", sweep_args.b_list,
                   "Comma list of numbers, 'Bstar', 'Bstar+eps'; 'presets' = 1,Bstar,Bstar+eps")
      ->capture_default_str();
  sweep->add_option("--margin", sweep_args.margin, "Relative margin for Bstar+eps")
      ->capture_default_str();
  add_sampler_flags(sweep, sweep_args.sampler);
  sweep->add_flag("--json", sweep_args.json, "Print JSON");

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "Recheck a sample set (and report) against a QUBO");
  verify->add_option("--qubo", verify_args.qubo_path, "QUBO file")->required();
  verify->add_option("--samples", verify_args.samples_path, "Sample set JSON")->required();
  verify->add_option("--report", verify_args.report_path, "Run report JSON");
  verify->add_option("--threads", verify_args.threads, "Worker threads for the ground search");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsageError;
  }

  try {
    if (distance->parsed()) return cmd_distance(distance_in, distance_json, out);
    if (qubo->parsed()) {
      return cmd_qubo(qubo_in, qubo_b, qubo_margin, qubo_format, qubo_output, out);
    }
    if (sample->parsed()) return cmd_sample(sample_args, out);
    if (sweep->parsed()) return cmd_sweep(sweep_args, out);
    if (verify->parsed()) return cmd_verify(verify_args, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsageError;
  } catch (const DiagramParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kInputParseError;
  } catch (const DiagramValidationError& e) {
    err << "invalid diagram: " << e.what() << "\n";
    return kInputValidationError;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return kInputParseError;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kFailure;
  }
  return kUsageError;
}

}  // namespace qwass::cli
