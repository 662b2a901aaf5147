#include "qwass/solvers.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <map>
#include <random>
#include <stdexcept>
#include <thread>

namespace qwass {

namespace {

unsigned resolve_threads(unsigned requested, std::size_t work_items) {
  unsigned t = requested == 0 ? std::max(1u, std::thread::hardware_concurrency()) : requested;
  return static_cast<unsigned>(std::min<std::size_t>(t, std::max<std::size_t>(1, work_items)));
}

// Runs body(k) for k in [0, count) on `threads` workers.
template <typename Body>
void parallel_for(std::size_t count, unsigned threads, Body&& body) {
  if (threads <= 1) {
    for (std::size_t k = 0; k < count; ++k) body(k);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  pool.reserve(threads);
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (std::size_t k = next++; k < count; k = next++) body(k);
    });
  }
}

// Local fields h_i = linear_i + sum_j Q_ij x_j, so that flipping bit i
// changes the energy by (x_i ? -h_i : h_i).
class FieldState {
 public:
  FieldState(const Qubo& qubo, BitAssignment start) : qubo_(qubo), x_(std::move(start)) {
    field_.assign(qubo.linear().begin(), qubo.linear().end());
    for (std::size_t i = 0; i < x_.size(); ++i) {
      if (!x_[i]) continue;
      for (const auto& c : qubo.neighbors(i)) field_[c.other] += c.value;
    }
  }

  double delta(std::size_t i) const { return x_[i] ? -field_[i] : field_[i]; }

  void flip(std::size_t i) {
    const double sign = x_[i] ? -1.0 : 1.0;
    x_.flip(i);
    for (const auto& c : qubo_.neighbors(i)) field_[c.other] += sign * c.value;
  }

  const BitAssignment& assignment() const { return x_; }

 private:
  const Qubo& qubo_;
  BitAssignment x_;
  std::vector<double> field_;
};

struct Candidate {
  BitAssignment assignment;
  double approx = 0.0;
};

// Tracks assignments whose (incrementally accumulated) energy is within a
// loose band of the running best; exact energies are recomputed at the end.
class CandidatePool {
 public:
  void offer(const BitAssignment& x, double e) {
    if (e < best_) {
      best_ = e;
      std::erase_if(pool_, [&](const Candidate& c) { return c.approx > best_ + band(); });
    }
    if (e <= best_ + band()) pool_.push_back({x, e});
  }
  double best() const { return best_; }
  std::vector<Candidate>& items() { return pool_; }

 private:
  double band() const { return 1e-7 * std::max(1.0, std::abs(best_)); }

  double best_ = std::numeric_limits<double>::infinity();
  std::vector<Candidate> pool_;
};

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t chain_seed(std::uint64_t seed, std::uint64_t chain) {
  return splitmix64(splitmix64(seed) ^ splitmix64(chain + 0x632be59bd9b4e019ULL));
}

}  // namespace

bool at_ground(double energy, double minimum) noexcept {
  return std::abs(energy - minimum) <= 1e-9 * std::max(1.0, std::abs(minimum));
}

ExactResult brute_force_minimize(const Qubo& qubo, unsigned threads) {
  const std::size_t m = qubo.num_vars();
  if (m > kMaxBruteForceVars) {
    throw std::invalid_argument("brute force refused: " + std::to_string(m) +
                                " variables exceeds the limit of " +
                                std::to_string(kMaxBruteForceVars) + " (2^" +
                                std::to_string(kMaxBruteForceVars) + " evaluations)");
  }
  // Low bits are enumerated in Gray-code order inside a block; high bits
  // select the block. Each block starts from an exact energy evaluation.
  const std::size_t low_bits = std::min<std::size_t>(m, 12);
  const std::size_t high_bits = m - low_bits;
  const std::size_t blocks = std::size_t{1} << high_bits;
  const std::size_t block_size = std::size_t{1} << low_bits;
  // Chunk blocks so each worker owns a contiguous range.
  const unsigned workers = resolve_threads(threads, blocks);
  const std::size_t chunks = std::min<std::size_t>(blocks, std::size_t{workers} * 8);
  std::vector<CandidatePool> pools(chunks);

  parallel_for(chunks, workers, [&](std::size_t chunk) {
    const std::size_t first = blocks * chunk / chunks;
    const std::size_t last = blocks * (chunk + 1) / chunks;
    CandidatePool& pool = pools[chunk];
    for (std::size_t block = first; block < last; ++block) {
      BitAssignment x(m);
      for (std::size_t b = 0; b < high_bits; ++b) x.set(low_bits + b, (block >> b) & 1U);
      double e = qubo.energy(x);
      FieldState state(qubo, x);
      pool.offer(state.assignment(), e);
      for (std::size_t k = 1; k < block_size; ++k) {
        const auto bit = static_cast<std::size_t>(std::countr_zero(k));
        e += state.delta(bit);
        state.flip(bit);
        if (e <= pool.best() + 1e-7 * std::max(1.0, std::abs(pool.best()))) {
          pool.offer(state.assignment(), e);
        }
      }
    }
  });

  std::vector<std::pair<BitAssignment, double>> exact;
  for (auto& pool : pools) {
    for (auto& c : pool.items()) {
      const double e = qubo.energy(c.assignment);
      exact.emplace_back(std::move(c.assignment), e);
    }
  }
  ExactResult result;
  result.minimum = std::numeric_limits<double>::infinity();
  for (const auto& [x, e] : exact) result.minimum = std::min(result.minimum, e);
  for (auto& [x, e] : exact) {
    if (at_ground(e, result.minimum)) result.minimizers.push_back(std::move(x));
  }
  std::sort(result.minimizers.begin(), result.minimizers.end());
  result.minimizers.erase(std::unique(result.minimizers.begin(), result.minimizers.end()),
                          result.minimizers.end());
  return result;
}

AnnealSchedule AnnealSchedule::defaults_for(const Qubo& qubo) {
  AnnealSchedule s;
  const double max_coef = qubo.max_abs_coefficient();
  const double hot_scale = qubo.b_star() > 0.0 ? qubo.b_star() : std::max(1.0, max_coef);
  s.beta_initial = 0.1 / hot_scale;
  s.beta_final = 10.0 / std::max(1e-12, qubo.min_nonzero_abs_coefficient());
  s.beta_final = std::max(s.beta_final, s.beta_initial);
  s.sweeps = 1000;
  return s;
}

double AnnealSchedule::beta_at(std::size_t sweep) const {
  if (sweeps <= 1) return beta_final;
  const double t = double(sweep) / double(sweeps - 1);
  return beta_initial * std::pow(beta_final / beta_initial, t);
}

void AnnealSchedule::validate() const {
  if (!(beta_initial > 0.0) || !(beta_final > 0.0)) {
    throw std::invalid_argument("anneal schedule betas must be positive");
  }
  if (!(beta_final >= beta_initial)) {
    throw std::invalid_argument("anneal schedule requires beta_final >= beta_initial");
  }
  if (sweeps == 0) throw std::invalid_argument("anneal schedule needs at least one sweep");
}

SampleSet aggregate_reads(const Qubo& qubo, const std::vector<BitAssignment>& reads,
                          std::uint64_t seed, const AnnealSchedule& schedule) {
  std::map<BitAssignment, std::size_t> counts;
  for (const auto& r : reads) ++counts[r];
  SampleSet set;
  set.total_reads = reads.size();
  set.seed = seed;
  set.schedule = schedule;
  set.samples.reserve(counts.size());
  for (const auto& [x, count] : counts) set.samples.push_back({x, qubo.energy(x), count});
  std::stable_sort(set.samples.begin(), set.samples.end(),
                   [](const Sample& a, const Sample& b) { return a.energy < b.energy; });
  return set;
}

SampleSet simulated_anneal(const Qubo& qubo, const AnnealSchedule& schedule, std::size_t num_reads,
                           std::uint64_t seed, unsigned threads) {
  if (num_reads == 0) throw std::invalid_argument("num_reads must be >= 1");
  schedule.validate();
  const std::size_t m = qubo.num_vars();
  std::vector<double> betas(schedule.sweeps);
  for (std::size_t k = 0; k < schedule.sweeps; ++k) betas[k] = schedule.beta_at(k);

  std::vector<BitAssignment> reads(num_reads);
  parallel_for(num_reads, resolve_threads(threads, num_reads), [&](std::size_t r) {
    std::mt19937_64 rng(chain_seed(seed, r));
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    BitAssignment start(m);
    for (std::size_t i = 0; i < m; ++i) start.set(i, (rng() >> 63) != 0);
    FieldState state(qubo, std::move(start));
    std::vector<std::size_t> order(m);
    for (std::size_t i = 0; i < m; ++i) order[i] = i;
    for (double beta : betas) {
      std::shuffle(order.begin(), order.end(), rng);
      for (std::size_t i : order) {
        const double d = state.delta(i);
        if (d <= 0.0 || unit(rng) < std::exp(-beta * d)) state.flip(i);
      }
    }
    reads[r] = state.assignment();
  });
  return aggregate_reads(qubo, reads, seed, schedule);
}

SampleClassification classify(const Sample& sample, const GraphShape& shape,
                              std::optional<double> known_minimum) {
  const auto subset = decode(sample.assignment, shape);
  SampleClassification c;
  c.is_matching = is_matching(subset, shape);
  c.is_maximal = c.is_matching && is_maximal_matching(subset, shape);
  c.is_ground = known_minimum.has_value() && at_ground(sample.energy, *known_minimum);
  return c;
}

std::vector<HistogramBin> energy_histogram(const SampleSet& samples, double bin_width) {
  if (!(bin_width > 0.0)) throw std::invalid_argument("bin width must be > 0");
  std::map<long long, std::size_t> bins;
  for (const auto& s : samples.samples) {
    bins[static_cast<long long>(std::floor(s.energy / bin_width))] += s.occurrences;
  }
  std::vector<HistogramBin> out;
  out.reserve(bins.size());
  for (const auto& [k, count] : bins) out.push_back({double(k) * bin_width, count});
  return out;
}

}  // namespace qwass
