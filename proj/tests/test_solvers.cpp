#include <doctest.h>

#include <random>

#include "qwass/oracle.hpp"
#include "qwass/qubo.hpp"
#include "qwass/sample_io.hpp"
#include "qwass/solvers.hpp"
#include "support/instances.hpp"
#include "support/oracles.hpp"

using namespace qwass;
using namespace qwass::testing;

namespace {

ReducedBipartiteGraph one_by_one() {
  return build_reduced_graph(PersistenceDiagram({{0, 2}}), PersistenceDiagram({{0, 4}}), 2,
                             Norm(2));
}

}  // namespace

TEST_CASE("brute force on the 1x1 graph at B = 9") {
  const Qubo q = build_qubo(one_by_one(), 9.0);
  const auto r = brute_force_minimize(q);
  CHECK(r.minimum == doctest::Approx(4.0).epsilon(1e-15));
  REQUIRE(r.minimizers.size() == 1);
  CHECK(r.minimizers[0].to_string() == "100");
}

TEST_CASE("brute force at B = 0 returns the empty assignment") {
  std::mt19937_64 rng(30);
  for (int trial = 0; trial < 10; ++trial) {
    const auto g = random_instance(rng, 4, 4, 20).graph();
    const auto r = brute_force_minimize(build_qubo(g, 0.0));
    CHECK(r.minimum == 0.0);
    REQUIRE(r.minimizers.size() == 1);
    CHECK(r.minimizers[0] == BitAssignment(g.num_edges()));
  }
}

TEST_CASE("brute force on X == Y finds the zero-cost identity pairing") {
  const PersistenceDiagram x({{0, 1}, {0.5, 2}});
  const auto g = build_reduced_graph(x, x, 2, Norm(2));
  const auto r = brute_force_minimize(build_qubo(g, PenaltyConfig::automatic()));
  CHECK(r.minimum == doctest::Approx(0.0));
  BitAssignment identity(g.num_edges());
  identity.set(g.shape().point_edge(0, 0), true);
  identity.set(g.shape().point_edge(1, 1), true);
  CHECK(std::find(r.minimizers.begin(), r.minimizers.end(), identity) != r.minimizers.end());
}

TEST_CASE("brute force refuses more than 26 variables") {
  const Qubo q(27, std::vector<double>(27, 1.0), {}, 0, 1, 0);
  CHECK_THROWS_AS(brute_force_minimize(q), std::invalid_argument);
}

TEST_CASE("brute force is independent of thread count and matches plain enumeration") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 10; ++trial) {
    const auto g = random_instance(rng, 3, 4, 19, 2).graph();
    const Qubo q = build_qubo(g, PenaltyConfig::automatic());
    const auto a = brute_force_minimize(q, 1);
    const auto b = brute_force_minimize(q, 4);
    CHECK(a.minimum == b.minimum);
    CHECK(a.minimizers == b.minimizers);
    double min_e = INFINITY;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << q.num_vars()); ++mask) {
      min_e = std::min(min_e, q.energy(mask_to_assignment(mask, q.num_vars())));
    }
    CHECK(rel_close(a.minimum, min_e, 1e-12));
  }
}

TEST_CASE("brute force minimum equals the minimum maximal-matching cost") {
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 50; ++trial) {
    const auto inst = random_instance(rng, 3, 3, 15);
    const auto g = inst.graph();
    const auto r = brute_force_minimize(build_qubo(g, PenaltyConfig::automatic()));
    const auto ref = ref_edges(inst.x, inst.y, 2);
    double best = INFINITY;
    for (auto mask : ref_maximal_matchings(ref, inst.x.size() + inst.y.size())) {
      best = std::min(best, ref_mask_cost(ref, mask));
    }
    CHECK(rel_close(r.minimum, best, 1e-9));
  }
}

TEST_CASE("anneal schedule defaults and validation") {
  const Qubo q = build_qubo(one_by_one(), 9.0);
  const auto s = AnnealSchedule::defaults_for(q);
  CHECK(s.beta_initial == doctest::Approx(0.1 / 8.0));
  CHECK(s.beta_final == doctest::Approx(10.0));
  CHECK(s.sweeps == 1000);
  CHECK(s.beta_at(0) == doctest::Approx(s.beta_initial));
  CHECK(s.beta_at(999) == doctest::Approx(s.beta_final));
  CHECK_THROWS_AS((AnnealSchedule{1.0, 0.5, 10}.validate()), std::invalid_argument);
  CHECK_THROWS_AS((AnnealSchedule{0.0, 0.5, 10}.validate()), std::invalid_argument);
  CHECK_THROWS_AS((AnnealSchedule{0.1, 0.5, 0}.validate()), std::invalid_argument);
  CHECK_THROWS_AS(simulated_anneal(q, s, 0, 1), std::invalid_argument);
}

TEST_CASE("simulated annealing finds the 1x1 ground state") {
  const Qubo q = build_qubo(one_by_one(), 9.0);
  const auto set = simulated_anneal(q, AnnealSchedule::defaults_for(q), 1000, 0);
  CHECK(set.total_reads == 1000);
  REQUIRE_FALSE(set.samples.empty());
  CHECK(set.samples.front().assignment.to_string() == "100");
  CHECK(set.samples.front().energy == doctest::Approx(4.0));
  std::size_t total = 0;
  for (const auto& s : set.samples) {
    total += s.occurrences;
    CHECK(rel_close(s.energy, q.energy(s.assignment), 1e-12));
  }
  CHECK(total == 1000);
}

TEST_CASE("sample sets are sorted by energy then assignment") {
  std::mt19937_64 rng(33);
  const auto g = random_instance(rng, 3, 3, 15, 2).graph();
  const Qubo q = build_qubo(g, 0.5 * compute_B_star(g));
  const auto set = simulated_anneal(q, AnnealSchedule{0.01, 0.5, 20}, 300, 5);
  for (std::size_t k = 1; k < set.samples.size(); ++k) {
    const auto& a = set.samples[k - 1];
    const auto& b = set.samples[k];
    CHECK((a.energy < b.energy || (a.energy == b.energy && a.assignment < b.assignment)));
  }
}

TEST_CASE("cold annealing ends in single-flip local minima") {
  std::mt19937_64 rng(34);
  for (int trial = 0; trial < 5; ++trial) {
    const auto g = random_instance(rng, 4, 4, 24).graph();
    const Qubo q = build_qubo(g, PenaltyConfig::automatic());
    const auto set = simulated_anneal(q, AnnealSchedule{1e6, 1e6, 50}, 50, trial);
    for (const auto& s : set.samples) {
      for (std::size_t i = 0; i < q.num_vars(); ++i) CHECK(q.flip_delta(s.assignment, i) >= -1e-9);
    }
  }
}

TEST_CASE("annealing is deterministic in the seed and independent of threads") {
  std::mt19937_64 rng(35);
  const auto g = random_instance(rng, 4, 3, 19, 3).graph();
  const Qubo q = build_qubo(g, PenaltyConfig::automatic());
  const AnnealSchedule s{0.01, 2.0, 50};
  const auto a = simulated_anneal(q, s, 200, 42, 1);
  const auto b = simulated_anneal(q, s, 200, 42, 3);
  const auto c = simulated_anneal(q, s, 200, 42, 0);
  CHECK(a == b);
  CHECK(a == c);
  CHECK(to_sample_set_json(a, g.shape()) == to_sample_set_json(b, g.shape()));
  const auto d = simulated_anneal(q, s, 200, 43, 1);
  CHECK(d.seed == 43);
}

TEST_CASE("classify") {
  const auto g = one_by_one();
  const Qubo q = build_qubo(g, 9.0);
  auto sample_of = [&](const char* bits) {
    const auto a = BitAssignment::from_string(bits);
    return Sample{a, q.energy(a), 1};
  };
  CHECK(classify(sample_of("100"), g.shape(), 4.0) == SampleClassification{true, true, true});
  CHECK(classify(sample_of("000"), g.shape(), 4.0) == SampleClassification{true, false, false});
  CHECK(classify(sample_of("110"), g.shape(), 4.0) == SampleClassification{false, false, false});
  CHECK(classify(sample_of("011"), g.shape(), 4.0) == SampleClassification{true, true, false});
  CHECK_FALSE(classify(sample_of("100"), g.shape(), std::nullopt).is_ground);
}

TEST_CASE("energy histogram") {
  const BitAssignment a = BitAssignment::from_string("1");
  const BitAssignment b = BitAssignment::from_string("0");
  SampleSet one{{{a, 4.0, 7}}, 7, 0, {}};
  CHECK(energy_histogram(one, 1.0) == std::vector<HistogramBin>{{4.0, 7}});
  SampleSet two{{{a, 4.0, 3}, {b, 4.4, 2}}, 5, 0, {}};
  CHECK(energy_histogram(two, 1.0) == std::vector<HistogramBin>{{4.0, 5}});
  CHECK(energy_histogram(two, 0.25) == std::vector<HistogramBin>{{4.0, 3}, {4.25, 2}});
  CHECK(energy_histogram(SampleSet{}, 1.0).empty());
  CHECK_THROWS_AS(energy_histogram(one, 0.0), std::invalid_argument);
}

TEST_CASE("sample set JSON round trip") {
  const auto g = one_by_one();
  const Qubo q = build_qubo(g, 9.0);
  const auto set = simulated_anneal(q, AnnealSchedule{0.01, 1.0, 10}, 100, 9);
  const auto stored = parse_sample_set_json(to_sample_set_json(set, g.shape()));
  CHECK(stored.total_reads == set.total_reads);
  CHECK(stored.seed == set.seed);
  CHECK(stored.schedule == set.schedule);
  REQUIRE(stored.samples.size() == set.samples.size());
  for (std::size_t k = 0; k < set.samples.size(); ++k) {
    CHECK(stored.samples[k].sample == set.samples[k]);
    const auto c = classify(set.samples[k], g.shape(), std::nullopt);
    CHECK(stored.samples[k].is_matching == c.is_matching);
    CHECK(stored.samples[k].is_maximal == c.is_maximal);
  }
  const auto unknown = parse_sample_set_json(to_sample_set_json(set, std::nullopt));
  CHECK_FALSE(unknown.samples.front().is_matching.has_value());
  CHECK_THROWS(parse_sample_set_json("{\"seed\": 1}"));
}
