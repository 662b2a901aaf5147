#include <doctest.h>

#include <random>

#include "qwass/matching_graph.hpp"
#include "support/oracles.hpp"

using namespace qwass;
using qwass::testing::random_points;
using qwass::testing::random_size;

namespace {

ReducedBipartiteGraph one_by_one() {
  return build_reduced_graph(PersistenceDiagram({{0, 2}}), PersistenceDiagram({{0, 4}}), 2,
                             Norm(2));
}

EdgeSubset all_edges(std::size_t count) {
  EdgeSubset s(count);
  for (std::size_t e = 0; e < count; ++e) s[e] = e;
  return s;
}

}  // namespace

TEST_CASE("edge count is nm + n + m") {
  std::mt19937_64 rng(1);
  const auto x = PersistenceDiagram(random_points(rng, 6));
  const auto y = PersistenceDiagram(random_points(rng, 5));
  CHECK(build_reduced_graph(x, y, 2, Norm(2)).num_edges() == 41);

  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = random_size(rng, 0, 8), m = random_size(rng, 0, 8);
    const auto g = build_reduced_graph(PersistenceDiagram(random_points(rng, n)),
                                       PersistenceDiagram(random_points(rng, m)), 2, Norm(2));
    CHECK(g.num_edges() == n * m + n + m);
    CHECK(g.shape().num_edges() == g.num_edges());
  }
}

TEST_CASE("single-point diagram against an empty one has only the diagonal edge") {
  const auto g =
      build_reduced_graph(PersistenceDiagram({{0, 2}}), PersistenceDiagram(), 2, Norm(2));
  REQUIRE(g.num_edges() == 1);
  CHECK(g.edges()[0].u == VertexId{Side::U, VertexKind::OffDiagonal, 0});
  CHECK(g.edges()[0].v == VertexId{Side::V, VertexKind::Diagonal, 0});
  CHECK(g.weight(0) == doctest::Approx(2.0));
}

TEST_CASE("1x1 graph weights in canonical order") {
  const auto g = one_by_one();
  REQUIRE(g.num_edges() == 3);
  CHECK(g.weight(0) == doctest::Approx(4.0).epsilon(1e-15));
  CHECK(g.weight(1) == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(g.weight(2) == doctest::Approx(8.0).epsilon(1e-15));
  CHECK(g.shape().edge_labels() == std::vector<std::string>{"(x0,y0)", "(x0,dx0)", "(dy0,y0)"});
}

TEST_CASE("canonical edge order and endpoint slots match an independent listing") {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 30; ++trial) {
    const auto xs = random_points(rng, random_size(rng, 0, 5));
    const auto ys = random_points(rng, random_size(rng, 0, 5));
    const auto g = build_reduced_graph(PersistenceDiagram(xs), PersistenceDiagram(ys), 2, Norm(2));
    const auto ref = qwass::testing::ref_edges(xs, ys, 2);
    REQUIRE(ref.size() == g.num_edges());
    for (std::size_t e = 0; e < ref.size(); ++e) {
      CHECK(g.shape().u_slot(e) == ref[e].u);
      CHECK(g.shape().v_slot(e) == ref[e].v);
      CHECK(qwass::testing::rel_close(g.weight(e), ref[e].weight, 1e-12));
      const Edge& edge = g.edges()[e];
      CHECK(edge.u == g.shape().u_vertex(e));
      CHECK(edge.v == g.shape().v_vertex(e));
      // Either both endpoints are points, or it is (z, diag z).
      const bool both_points =
          edge.u.kind == VertexKind::OffDiagonal && edge.v.kind == VertexKind::OffDiagonal;
      const bool diagonal_pair =
          (edge.u.kind == VertexKind::OffDiagonal && edge.v.kind == VertexKind::Diagonal &&
           edge.u.index == edge.v.index) ||
          (edge.u.kind == VertexKind::Diagonal && edge.v.kind == VertexKind::OffDiagonal &&
           edge.u.index == edge.v.index);
      CHECK(both_points != diagonal_pair);
    }
  }
}

TEST_CASE("decode and encode") {
  const auto g = one_by_one();
  CHECK(decode(BitAssignment::from_string("000"), g.shape()).empty());
  CHECK(decode(BitAssignment::from_string("111"), g.shape()) == all_edges(3));
  CHECK(decode(BitAssignment::from_string("100"), g.shape()) == EdgeSubset{0});
  CHECK_THROWS_AS(decode(BitAssignment::from_string("10"), g.shape()), std::invalid_argument);
  CHECK_THROWS_AS(BitAssignment::from_string("102"), std::invalid_argument);

  std::mt19937_64 rng(4);
  const GraphShape shape(3, 4);
  for (int trial = 0; trial < 100; ++trial) {
    EdgeSubset s;
    for (std::size_t e = 0; e < shape.num_edges(); ++e) {
      if (rng() & 1U) s.push_back(e);
    }
    CHECK(decode(encode(s, shape), shape) == s);
  }
}

TEST_CASE("matching predicates on the 1x1 graph") {
  const GraphShape s(1, 1);
  CHECK(is_matching({}, s));
  CHECK_FALSE(is_matching({0, 1}, s));
  CHECK(is_matching({0}, s));

  CHECK(is_maximal_matching({0}, s));
  CHECK_FALSE(is_maximal_matching({1}, s));
  CHECK(is_maximal_matching({1, 2}, s));
  CHECK_FALSE(is_maximal_matching({}, s));
  CHECK_FALSE(is_maximal_matching({0, 1}, s));

  // Exhaustive: the maximal matchings are exactly {0} and {1,2}.
  std::vector<std::string> maximal;
  for (unsigned mask = 0; mask < 8; ++mask) {
    BitAssignment a(3);
    for (std::size_t e = 0; e < 3; ++e) a.set(e, (mask >> e) & 1U);
    if (is_maximal_matching(decode(a, s), s)) maximal.push_back(a.to_string());
  }
  CHECK(maximal == std::vector<std::string>{"100", "011"});
}

TEST_CASE("matching_cost") {
  const auto g = one_by_one();
  CHECK(matching_cost({}, g) == 0.0);
  CHECK(matching_cost({0}, g) == doctest::Approx(4.0));
  CHECK(matching_cost({1, 2}, g) == doctest::Approx(10.0));
  CHECK(matching_cost({0, 1, 2}, g) == doctest::Approx(14.0));
}

TEST_CASE(
    "predicates agree with brute force and maximal matchings saturate off-diagonal vertices") {
  std::mt19937_64 rng(6);
  int checked = 0;
  while (checked < 40) {
    const std::size_t n = random_size(rng, 0, 3), m = random_size(rng, 0, 3);
    if (n * m + n + m > 15) continue;
    ++checked;
    const auto xs = random_points(rng, n);
    const auto ys = random_points(rng, m);
    const auto ref = qwass::testing::ref_edges(xs, ys, 2);
    const GraphShape shape(n, m);
    const std::uint64_t count = std::uint64_t{1} << ref.size();
    for (std::uint64_t mask = 0; mask < count; ++mask) {
      BitAssignment a(ref.size());
      for (std::size_t e = 0; e < ref.size(); ++e) a.set(e, (mask >> e) & 1U);
      const auto subset = decode(a, shape);
      const auto rd = qwass::testing::ref_degrees(ref, n + m, mask);
      REQUIRE(is_matching(subset, shape) == qwass::testing::ref_is_matching(rd));
      const bool maximal = is_maximal_matching(subset, shape);
      REQUIRE(maximal == qwass::testing::ref_is_maximal(ref, rd));
      if (maximal) {
        const auto deg = vertex_degrees(subset, shape);
        // Unmatched vertices are diagonal; off-diagonal vertices have degree exactly 1.
        for (std::size_t i = 0; i < n; ++i) REQUIRE(deg.u[i] == 1);
        for (std::size_t j = 0; j < m; ++j) REQUIRE(deg.v[j] == 1);
      }
    }
  }
}

TEST_CASE("graph rejects p < 1") {
  CHECK_THROWS_AS(build_reduced_graph(PersistenceDiagram(), PersistenceDiagram(), 0.5, Norm(2)),
                  std::invalid_argument);
}
