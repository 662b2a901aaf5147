#include <doctest.h>

#include <fstream>
#include <random>

#include "qwass/qubo_io.hpp"
#include "support/instances.hpp"

using namespace qwass;
using namespace qwass::testing;

namespace {

ReducedBipartiteGraph one_by_one() {
  return build_reduced_graph(PersistenceDiagram({{0, 2}}), PersistenceDiagram({{0, 4}}), 2,
                             Norm(2));
}

void check_same(const Qubo& a, const Qubo& b) {
  REQUIRE(a.num_vars() == b.num_vars());
  CHECK(a.offset() == b.offset());
  CHECK(a.penalty() == b.penalty());
  CHECK(a.b_star() == b.b_star());
  CHECK(a.edge_labels() == b.edge_labels());
  CHECK(a.shape() == b.shape());
  for (std::size_t i = 0; i < a.num_vars(); ++i) CHECK(a.linear(i) == b.linear(i));
  CHECK(std::equal(a.quadratic().begin(), a.quadratic().end(), b.quadratic().begin(),
                   b.quadratic().end()));
}

}  // namespace

TEST_CASE("text export layout") {
  const std::string text = to_qubo_text(build_qubo(one_by_one(), 9.0));
  CHECK(text.find("c offset 18\n") != std::string::npos);
  CHECK(text.find("c B 9\n") != std::string::npos);
  CHECK(text.find("c B_star 8\n") != std::string::npos);
  CHECK(text.find("c shape 1 1\n") != std::string::npos);
  CHECK(text.find("p qubo 0 3 3 2\n") != std::string::npos);
  CHECK(text.find("\n0 0 -14\n") != std::string::npos);
  CHECK(text.find("\n0 1 18\n0 2 18\n") != std::string::npos);
}

TEST_CASE("json export fields") {
  const std::string json = to_qubo_json(build_qubo(one_by_one(), 9.0));
  for (const char* key : {"\"num_vars\": 3", "\"offset\": 18.0", "\"B\": 9.0", "\"B_star\": 8.0",
                          "\"linear\"", "\"quadratic\"", "\"edge_labels\"", "\"(dy0,y0)\""}) {
    CAPTURE(key);
    CHECK(json.find(key) != std::string::npos);
  }
}

TEST_CASE("both formats round-trip coefficients exactly") {
  std::mt19937_64 rng(50);
  for (int trial = 0; trial < 20; ++trial) {
    const auto g = random_instance(rng, 5, 5, 35).graph();
    const Qubo q = build_qubo(g, PenaltyConfig::automatic(0.37));
    check_same(q, parse_qubo_text(to_qubo_text(q)));
    check_same(q, parse_qubo_json(to_qubo_json(q)));
  }
}

TEST_CASE("foreign qbsolv text without comments is accepted") {
  const Qubo q = parse_qubo_text(
      "c some other tool\n"
      "p qubo 0 3 2 1\n"
      "0 0 -1.5\n"
      "2 2 0.5\n"
      "0 2 2\n");
  CHECK(q.num_vars() == 3);
  CHECK(q.linear(1) == 0.0);
  CHECK(q.coupling(0, 2) == 2.0);
  CHECK_FALSE(q.shape().has_value());
  CHECK(q.energy(BitAssignment::from_string("101")) == 1.0);
}

TEST_CASE("malformed QUBO input is rejected") {
  CHECK_THROWS_AS(parse_qubo_text("0 0 1\n"), QuboFormatError);
  CHECK_THROWS_AS(parse_qubo_text("p qubo 0 2 2 0\n0 0 1\n"), QuboFormatError);
  CHECK_THROWS_AS(parse_qubo_text("p qubo 0 2 1 0\n5 5 1\n"), QuboFormatError);
  CHECK_THROWS_AS(parse_qubo_text("p qubo 0 2 1 0\n0 0 x\n"), QuboFormatError);
  CHECK_THROWS_AS(parse_qubo_text(""), QuboFormatError);
  CHECK_THROWS_AS(parse_qubo_json("{"), QuboFormatError);
  CHECK_THROWS_AS(parse_qubo_json("{\"num_vars\": 2, \"linear\": {\"5\": 1}, \"quadratic\": [], "
                                  "\"offset\": 0, \"B\": 1}"),
                  QuboFormatError);
  CHECK_THROWS_AS(parse_qubo_json("{\"num_vars\": 2, \"linear\": {}, \"quadratic\": [[0, 1]], "
                                  "\"offset\": 0, \"B\": 1}"),
                  QuboFormatError);
}

TEST_CASE("read_qubo_file detects the format") {
  const Qubo q = build_qubo(one_by_one(), 9.0);
  const std::string json_path = "qwass_test_io.json";
  const std::string text_path = "qwass_test_io.qubo";
  std::ofstream(json_path) << to_qubo_json(q);
  std::ofstream(text_path) << to_qubo_text(q);
  check_same(q, read_qubo_file(json_path));
  check_same(q, read_qubo_file(text_path));
  CHECK_THROWS(read_qubo_file("does/not/exist.qubo"));
  std::remove(json_path.c_str());
  std::remove(text_path.c_str());
}
